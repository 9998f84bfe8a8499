#include "palrich/eertree.hpp"

#include <stdexcept>
#include <unordered_set>

namespace palrich {

PalindromeIndex::PalindromeIndex(Word w) : word_(std::move(w)) {
  nodes_.resize(2);
  nodes_[0] = Node{-1, 0, 0, 0, {}};
  nodes_[1] = Node{0, 0, 0, 0, {}};
  suffix_node_.assign(word_.size(), 1);
  created_at_.assign(word_.size(), false);

  int last = 1;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const Letter c = word_[i];
    int cur = last;
    // Longest palindromic suffix of the prefix ending at i-1 that can be
    // extended by c on both sides.
    while (true) {
      const int l = nodes_[cur].len;
      if (static_cast<std::size_t>(l + 1) <= i && word_[i - l - 1] == c) break;
      cur = nodes_[cur].link;
    }
    auto it = nodes_[cur].next.find(c);
    if (it != nodes_[cur].next.end()) {
      last = it->second;
    } else {
      Node node;
      node.len = nodes_[cur].len + 2;
      node.first_end = i + 1;
      if (node.len == 1) {
        node.link = 1;
      } else {
        int t = nodes_[cur].link;
        while (true) {
          const int l = nodes_[t].len;
          if (static_cast<std::size_t>(l + 1) <= i && word_[i - l - 1] == c) break;
          t = nodes_[t].link;
        }
        node.link = nodes_[t].next.at(c);
      }
      nodes_.push_back(node);
      last = static_cast<int>(nodes_.size()) - 1;
      nodes_[cur].next[c] = last;
      created_at_[i] = true;
    }
    suffix_node_[i] = last;
    ++nodes_[last].count;
  }
  // Each occurrence of a palindrome is an occurrence of every palindromic
  // suffix of it; suffix links point to creation-older nodes, so one reverse
  // pass accumulates total occurrence counts.
  for (int id = static_cast<int>(nodes_.size()) - 1; id >= 2; --id) {
    nodes_[nodes_[id].link].count += nodes_[id].count;
  }
}

void PalindromeIndex::check_position(std::size_t i) const {
  if (i < 1 || i > word_.size()) {
    throw std::out_of_range("palindrome index: position out of range");
  }
}

bool PalindromeIndex::has_ups(std::size_t i) const {
  check_position(i);
  return created_at_[i - 1];
}

std::size_t PalindromeIndex::longest_suffix_length(std::size_t i) const {
  check_position(i);
  return static_cast<std::size_t>(nodes_[suffix_node_[i - 1]].len);
}

Word PalindromeIndex::longest_palindromic_suffix(std::size_t i) const {
  const std::size_t len = longest_suffix_length(i);
  return word_.substr(i - len, len);
}

Word PalindromeIndex::node_word(int id) const {
  const Node& n = nodes_[id];
  return word_.substr(n.first_end - n.len, n.len);
}

ComplexityProfile PalindromeIndex::complexity(std::size_t n) const {
  ComplexityProfile out;
  out.n = n;
  if (n == 0) {
    out.palindromic = 1;
    out.factors = 1;
    return out;
  }
  if (n > word_.size()) return out;
  for (std::size_t id = 2; id < nodes_.size(); ++id) {
    if (static_cast<std::size_t>(nodes_[id].len) == n) ++out.palindromic;
  }
  std::unordered_set<std::string_view> windows;
  const std::string_view sv(word_);
  for (std::size_t i = 0; i + n <= word_.size(); ++i) windows.insert(sv.substr(i, n));
  out.factors = windows.size();
  return out;
}

std::vector<std::pair<Word, std::int64_t>> PalindromeIndex::palindromic_factors_with_counts()
    const {
  std::vector<std::pair<Word, std::int64_t>> out;
  out.reserve(nodes_.size() - 2);
  for (std::size_t id = 2; id < nodes_.size(); ++id) {
    out.emplace_back(node_word(static_cast<int>(id)), nodes_[id].count);
  }
  return out;
}

std::vector<Word> PalindromeIndex::palindromic_factors() const {
  std::vector<Word> out;
  out.reserve(nodes_.size() - 2);
  for (std::size_t id = 2; id < nodes_.size(); ++id) out.push_back(node_word(static_cast<int>(id)));
  return out;
}

}  // namespace palrich
