#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "palrich/word.hpp"

namespace palrich {

// A non-erasing morphism given by its letter images. Letters outside the
// domain are rejected when applying.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(std::map<Letter, Word> images);

  const std::map<Letter, Word>& images() const { return images_; }
  const Word& image(Letter a) const;          // throws on unknown letter
  bool defines(Letter a) const { return images_.count(a) > 0; }
  std::string domain() const;                 // sorted letters

  Word operator()(const Word& w) const { return apply(w); }
  Word apply(const Word& w) const;
  Word iterate(Letter a, std::size_t steps) const;  // image under the steps-fold composition

  // True when the image of a starts with a and is longer than one letter,
  // so iterating on a converges to an infinite fixed point.
  bool prolongable_on(Letter a) const;

  bool operator==(const Morphism& other) const { return images_ == other.images_; }

 private:
  std::map<Letter, Word> images_;
};

// compose(f, g)(x) = f(g(x)); the domain is g's.
Morphism compose(const Morphism& f, const Morphism& g);

Morphism identity_morphism(const std::string& alphabet);

// a -> a, x -> ax for the other letters of the alphabet.
Morphism psi(Letter a, const std::string& alphabet);
// a -> a, x -> xa.
Morphism psi_bar(Letter a, const std::string& alphabet);
// x -> xa for every letter.
Morphism insertion(Letter a, const std::string& alphabet);
// x -> xx for every letter.
Morphism doubling(const std::string& alphabet);
// a -> a^n, x -> x.
Morphism theta(Letter a, std::size_t n, const std::string& alphabet);

// Parses "a=ab,b=a" into a morphism.
Morphism parse_morphism(const std::string& text);
std::string format_morphism(const Morphism& m);

// Replaces the i-th smallest maximal-run length of letter a by
// new_exponents[i] everywhere in w. Run lengths at the word boundary count
// like interior ones; a word that is a single run has that one exponent.
Word pi_transform(const Word& w, Letter a, const std::vector<std::size_t>& new_exponents);

// A letter occurring in every length-2 factor, smallest first if several.
// Requires |w| >= 2.
std::optional<Letter> separating_letter(const Word& w);

// Inverts psi_a. When w starts with a letter other than a, the decoding is
// applied to a·w, which has the same factors for recurrent words.
std::optional<Word> psi_preimage(const Word& w, Letter a);

}  // namespace palrich
