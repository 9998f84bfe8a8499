#pragma once

#include <optional>
#include <set>
#include <vector>

#include "palrich/eertree.hpp"
#include "palrich/word.hpp"

namespace palrich {

// A word is rich when it has the maximum possible number |w|+1 of distinct
// palindromic factors; equivalently every prefix has a unioccurrent
// palindromic suffix (ups).
bool is_rich(const Word& w);

struct RichnessReport {
  Word word;
  std::size_t length = 0;
  std::size_t palindrome_count = 0;  // including the empty word
  bool rich = true;
  std::size_t defect = 0;  // |w| + 1 - palindrome_count
  std::vector<std::size_t> defective_positions;  // 1-based prefix lengths without a ups
  // For each non-defective position, the ups of that prefix. Opt-in.
  std::optional<std::vector<std::pair<std::size_t, Word>>> ups_per_prefix;

  bool operator==(const RichnessReport&) const = default;
};

RichnessReport richness_report(const Word& w, bool with_ups = false);

// Shortest palindrome having w as a prefix.
Word palindromic_closure(const Word& w);
// Pal(empty) = empty; Pal(wx) = palindromic_closure(Pal(w)·x).
Word iterated_palindromic_closure(const Word& directive);

struct CompleteReturn {
  Word factor;
  Word return_word;  // exactly two occurrences of factor, as prefix and suffix

  bool operator==(const CompleteReturn&) const = default;
};

// The spans between consecutive occurrences of u in w. u must be non-empty.
std::vector<CompleteReturn> complete_returns(const Word& w, const Word& u);

// True iff every complete return to every non-empty palindromic factor is a
// palindrome. Agrees with is_rich on every word; the two predicates take
// entirely separate routes.
bool is_rich_via_returns(const Word& w);

struct WeakRichnessVerdict {
  bool weakly_rich = true;
  std::optional<Word> witness;  // a non-palindromic complete return to a letter

  bool operator==(const WeakRichnessVerdict&) const = default;
};

// All complete returns to single letters are palindromes.
WeakRichnessVerdict is_weakly_rich(const Word& w);

struct Oddity {
  Word representative;  // lexicographically smaller of the return and its reversal
  Word palindrome;      // the incriminated palindrome, non-empty
  std::size_t end_position = 0;  // first 1-based position where either string ends

  bool operator==(const Oddity&) const = default;
};

// All non-palindromic complete returns to non-empty palindromic factors,
// deduplicated by the unordered pair {r, reversal} together with the
// incriminated palindrome. Sorted by end position, then representative.
std::vector<Oddity> oddities(const Word& w);

struct RichExtensions {
  std::set<Letter> right;  // x in Alph(w) with wx rich
  std::set<Letter> left;   // z in Alph(w) with zw rich
};

// Requires w rich.
RichExtensions rich_extensions(const Word& w);

// Returns true when ux has a palindromic suffix r with 2|r| >= |u|, which
// already forces ux rich; otherwise the cheap test is inconclusive and
// nullopt is returned. Never returns false. Requires u rich.
std::optional<bool> rich_extension_fastpath(const Word& u, Letter x);

// Distinct non-empty palindromic factors collected by expanding around every
// center; independent of the palindromic tree.
std::vector<Word> palindromic_factors_by_centers(const Word& w);

}  // namespace palrich
