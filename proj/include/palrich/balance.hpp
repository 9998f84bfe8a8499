#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>

#include "palrich/infinite_word.hpp"
#include "palrich/word.hpp"

namespace palrich {

struct BalanceWitness {
  std::size_t length = 0;  // common factor length
  Letter letter = 0;
  Word u;  // window with the maximal letter count
  Word v;  // window with the minimal letter count

  bool operator==(const BalanceWitness&) const = default;
};

// nullopt when w is balanced; otherwise two equal-length factors whose
// counts of some letter differ by at least 2.
std::optional<BalanceWitness> balance_witness(const Word& w);
bool is_balanced(const Word& w);

// Balance of u^infinity, decided on the window u^3 for factor lengths
// 1..|u|. Any length-n factor of the power with n <= |u| occurs in u^2, and
// counts for n + |u| differ from those for n by the fixed composition of u.
bool is_periodic_balanced(const Word& u);

struct GapProfile {
  Letter letter = 0;
  std::set<std::size_t> gaps;  // distances of consecutive occurrences; adjacent = 1
};

GapProfile gap_profile(const Word& w, Letter a);

Word delete_letter(const Word& w, Letter a);

// F_1 = "1", F_k = F_{k-1} k F_{k-1}; digit letters, so 1 <= k <= 9.
Word fraenkel_word(int k);

// a·x_1·a^{e_1}·x_2·a^{e_2}···x_n with e_i = 2 iff x_i = x_{i+1}, else 1;
// the trailing block after x_n is omitted on finite input. Requires a not in
// Alph(w) and w non-empty.
Word sigma_map(Letter a, const Word& w);

// The exact minimal-length period C with sigma_a(period^infinity) =
// C^infinity, built from one period with wraparound.
Word sigma_period(Letter a, const Word& period);

struct WRFamily1 {
  int k = 3;  // alphabet size, >= 3
  int n = 1;  // >= 1

  bool operator==(const WRFamily1&) const = default;
};

struct WRFamily2 {
  int k = 3;  // alphabet size, >= 3
  int j = 1;  // 1 <= j <= k-2

  bool operator==(const WRFamily2&) const = default;
};

using WRFamilySpec = std::variant<WRFamily1, WRFamily2>;

// The minimal period of the periodic balanced weakly-rich word with the
// given parameters, over digit letters '1'..'k'.
Word wr_family_period(const WRFamilySpec& spec);
InfiniteWordSpec wr_family_word(const WRFamilySpec& spec);

// Verifies that the j-fold insertion image of the twice-psi image of the
// tail stream agrees with F_{j+1}^2 x_1 F_{j+1}^2 x_2 ... on the first n
// letters. The tail must avoid letters '1'..digit(j+1).
bool eq21_check(int j, const Word& tail, std::size_t n);

struct WRFamilyMatch {
  WRFamilySpec spec;
  std::map<Letter, Letter> permutation;  // family letter -> input letter
  std::size_t shift = 0;                 // the input period is T^shift of the family period
};

// Identifies u^infinity with a family word up to letter permutation and
// shift, or nullopt. Exhaustive over permutations; alphabets above 5
// letters are rejected.
std::optional<WRFamilyMatch> matches_wr_family(const Word& period);

struct Fraction {
  long long num = 0;
  long long den = 1;

  bool operator==(const Fraction&) const = default;
};

// Exact letter frequencies |u|_x / |u| of the primitive period of u.
std::map<Letter, Fraction> letter_frequencies(const Word& u);

}  // namespace palrich
