#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace palrich {

// Letters are plain characters from [A-Za-z0-9]; their ASCII order is the
// alphabet order. A word is a string of letters; the empty word is valid.
using Letter = char;
using Word = std::string;

bool valid_letter(Letter a);
bool valid_word(const Word& w);

Word reverse_word(const Word& w);
bool is_palindrome(const Word& w);

// Circular shifts T^k(w), 1 <= k <= |w|-1, in shift order. With
// include_self, T^0(w) = w is prepended. Throws on the empty word.
std::vector<Word> conjugates(const Word& w, bool include_self = false);

bool is_primitive(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};
PrimitiveRoot primitive_root(const Word& w);

// All distinct factors of length n; n > |w| yields the empty set,
// n = 0 yields {empty word}.
std::set<Word> factor_set(const Word& w, std::size_t n);
bool is_reversal_closed(const std::set<Word>& fs);

std::size_t letter_count(const Word& w, Letter a);

// Sorted distinct letters of w.
std::string alphabet_of(const Word& w);

Word rotate_left(const Word& w, std::size_t k);
Word rotate_right(const Word& w, std::size_t k);

}  // namespace palrich
