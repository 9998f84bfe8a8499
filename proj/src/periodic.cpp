#include "palrich/periodic.hpp"

#include <cstdlib>
#include <stdexcept>

#include "palrich/infinite_word.hpp"

namespace palrich {

std::vector<TwoPalindromeFactorization> two_palindrome_factorizations(const Word& w) {
  std::vector<TwoPalindromeFactorization> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    Word p = w.substr(0, i);
    Word q = w.substr(i);
    if (is_palindrome(p) && is_palindrome(q)) out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

bool is_power_rich(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_power_rich: empty input");
  return is_rich(w + w);
}

bool is_power_almost_rich(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_power_almost_rich: empty input");
  return !two_palindrome_factorizations(primitive_root(w).root).empty();
}

std::optional<std::size_t> periodic_defect(const Word& w) {
  if (w.empty()) throw std::invalid_argument("periodic_defect: empty input");
  const Word root = primitive_root(w).root;
  const auto facts = two_palindrome_factorizations(root);
  if (facts.empty()) return std::nullopt;
  std::optional<std::size_t> value;
  for (const auto& f : facts) {
    const std::size_t diff =
        f.p.size() > f.q.size() ? f.p.size() - f.q.size() : f.q.size() - f.p.size();
    const std::size_t len = root.size() + diff / 3;
    const Word pref = prefix(Periodic{root}, len);
    const std::size_t d = richness_report(pref).defect;
    if (!value) {
      value = d;
    } else if (*value != d) {
      throw std::logic_error("periodic_defect: factorizations disagree");
    }
  }
  return value;
}

TwoPalindromeFactorization balanced_conjugate_factorization(const Word& w) {
  if (w.empty()) throw std::invalid_argument("balanced_conjugate_factorization: empty input");
  for (const Word& c : conjugates(w, /*include_self=*/true)) {
    for (const auto& f : two_palindrome_factorizations(c)) {
      const auto diff = static_cast<long long>(f.p.size()) - static_cast<long long>(f.q.size());
      if (std::llabs(diff) <= 2) return f;
    }
  }
  if (two_palindrome_factorizations(w).empty()) {
    throw std::invalid_argument(
        "balanced_conjugate_factorization: not a product of two palindromes");
  }
  throw std::logic_error("balanced_conjugate_factorization: no balanced conjugate found");
}

bool conjugates_all_rich(const Word& w) {
  if (w.empty()) throw std::invalid_argument("conjugates_all_rich: empty input");
  if (!is_rich(w)) return false;
  for (const Word& c : conjugates(w)) {
    if (!is_rich(c)) return false;
  }
  return true;
}

}  // namespace palrich
