#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "palrich/word.hpp"

namespace palrich::oracle {

// Brute-force reference implementations, applied literally from the
// definitions. No production path depends on these; tests and the CLI
// --oracle cross-check do.

// All distinct palindromic factors including the empty word. Quadratic;
// guarded at |w| <= 2000.
std::set<Word> naive_palindrome_set(const Word& w);

std::size_t naive_defect(const Word& w);
bool naive_rich(const Word& w);

std::vector<Word> naive_complete_returns(const Word& w, const Word& u);

bool naive_balanced(const Word& w);

// All words of the given length over {'a', 'a'+1, ...} in lexicographic
// order. Guarded at alphabet_size^length <= 10^7.
std::vector<Word> enumerate_words(int alphabet_size, std::size_t length);

// True when the first occurrences of the letters appear in alphabetical
// order, i.e. w is the canonical representative of its permutation class.
bool is_canonical(const Word& w);

Word word_from_index(std::uint64_t index, int alphabet_size, std::size_t length);

}  // namespace palrich::oracle
