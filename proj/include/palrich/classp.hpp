#pragma once

#include <map>
#include <optional>
#include <variant>

#include "palrich/infinite_word.hpp"
#include "palrich/morphism.hpp"
#include "palrich/richness.hpp"

namespace palrich {

// Per-letter part of a standard class-P certificate: the image is either
// p followed by an appended palindrome, or p with a palindromic proper
// suffix of length k trimmed off.
struct AppendedPart {
  Word palindrome;  // possibly empty

  bool operator==(const AppendedPart&) const = default;
};

struct TrimmedPart {
  std::size_t k = 1;  // 1 <= k < |p|; the length-k suffix of p is a palindrome

  bool operator==(const TrimmedPart&) const = default;
};

using ClassPPart = std::variant<AppendedPart, TrimmedPart>;

// Certificate that a morphism is of class P: every image is a rotation by
// `shift` of p·q_x with p a fixed palindrome and q_x as above. shift = 0
// means the morphism is standard.
struct StandardPMorphism {
  Word p;
  std::map<Letter, ClassPPart> parts;
  std::size_t shift = 0;

  // The standard image p·q_x (before rotation).
  Word standard_image(Letter x) const;
  // The actual image of the certified morphism.
  Word image(Letter x) const;

  bool operator==(const StandardPMorphism&) const = default;
};

// Searches for a class-P certificate: candidate palindromes p are the common
// palindromic prefixes of the (de-rotated) images together with, for each
// letter, the palindromes image·reverse(prefix_k(image)) forced by the
// trimmed case; rotations are tried for every shift up to the certificate
// bound. Returns the certificate with the smallest shift, then shortest p.
std::optional<StandardPMorphism> is_class_P(const Morphism& m);

// Checks that a valid standard certificate (shift 0) is special: the images
// end with pairwise distinct letters, and every occurrence of any
// image(x)·p inside image(w)·p is aligned to an image-block boundary. The
// occurrence scan is exhaustive over words up to the block bound
// ceil(2·max|image(x)p| / min|image(y)|) + 2, within which any misaligned
// occurrence must show up.
bool is_special(const Morphism& m, const StandardPMorphism& cert);
std::size_t special_check_bound(const Morphism& m, const StandardPMorphism& cert);

// Richness of sigma(t) for special standard-P sigma and rich t, decided on
// sigma(t_h)·p where t_h is the shortest prefix of t containing every
// palindromic factor of t of length at most 2. Refuses to report when the
// analysis window itself is not rich.
bool special_rich_test(const Morphism& m, const StandardPMorphism& cert,
                       const InfiniteWordSpec& t);

enum class FixedPointClass { Rich, InfiniteDefect };

// The fixed point of a special standard-P morphism is either rich or has
// infinitely many defective positions; decided on sigma(s_h)·p.
FixedPointClass special_fixed_point_class(const Morphism& m, const StandardPMorphism& cert,
                                          Letter seed);

// The palindromic factors of length <= 2 of the described infinite word,
// computed exactly (window for periodic specs, factor-set iteration to a
// fixed point for morphic ones).
std::set<Word> short_palindromic_factors(const InfiniteWordSpec& spec);

// The decidable hypotheses under which richness preservation forces class
// P: pairwise distinct images, primitive images, pairwise distinct
// primitive roots, and no image a power of another image's root. The last
// two approximate the free-group independence condition soundly.
bool check_mpr_hypotheses(const Morphism& m);

struct PreservationSweep {
  bool preserves = true;
  std::optional<Word> counterexample;  // first rich word with a non-rich image

  bool operator==(const PreservationSweep&) const = default;
};

// Applies m to every rich word of length <= max_len whose alphabet is
// exactly the given one, in length-then-lexicographic order.
PreservationSweep preserves_richness_empirical(const Morphism& m, std::size_t max_len,
                                               const std::string& alphabet);

enum class PalindromePreservation { None, Preserves, StrictlyPreserves };

struct PalindromePreservationReport {
  PalindromePreservation kind = PalindromePreservation::None;
  std::optional<Word> witness;  // non-palindrome with a palindromic image

  bool operator==(const PalindromePreservationReport&) const = default;
};

// Preserves iff every letter image is a palindrome; strictness is probed by
// an exhaustive sweep over full-alphabet words up to sweep_len.
PalindromePreservationReport palindrome_preservation_class(const Morphism& m,
                                                           std::size_t sweep_len = 6);

}  // namespace palrich
