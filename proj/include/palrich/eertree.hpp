#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "palrich/word.hpp"

namespace palrich {

struct ComplexityProfile {
  std::size_t n = 0;
  std::size_t palindromic = 0;  // P(n): distinct palindromic factors of length n
  std::size_t factors = 0;      // C(n): distinct factors of length n
};

// Incremental index of the distinct palindromic factors of a word: a
// palindromic tree with two roots (lengths -1 and 0) and one node per
// distinct non-empty palindromic factor. Positions are 1-based. At most one
// node is created per position, which bounds the node count by |w|.
class PalindromeIndex {
 public:
  explicit PalindromeIndex(Word w);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }

  // Number of distinct palindromic factors including the empty word.
  std::size_t distinct_palindromes() const { return nodes_.size() - 2 + 1; }
  std::size_t node_count() const { return nodes_.size() - 2; }

  // True iff the length-i prefix has a unioccurrent palindromic suffix,
  // equivalently iff a node was created at position i.
  bool has_ups(std::size_t i) const;

  std::size_t longest_suffix_length(std::size_t i) const;
  Word longest_palindromic_suffix(std::size_t i) const;

  ComplexityProfile complexity(std::size_t n) const;

  // All distinct non-empty palindromic factors with their total occurrence
  // counts in the word.
  std::vector<std::pair<Word, std::int64_t>> palindromic_factors_with_counts() const;
  std::vector<Word> palindromic_factors() const;

 private:
  struct Node {
    int len = 0;
    int link = 0;
    std::size_t first_end = 0;  // 1-based end position of the first occurrence
    std::int64_t count = 0;
    std::map<Letter, int> next;
  };

  void check_position(std::size_t i) const;
  Word node_word(int id) const;

  Word word_;
  std::vector<Node> nodes_;
  std::vector<int> suffix_node_;   // per position, node of the longest palindromic suffix
  std::vector<bool> created_at_;
};

}  // namespace palrich
