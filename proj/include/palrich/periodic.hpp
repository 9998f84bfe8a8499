#pragma once

#include <optional>
#include <vector>

#include "palrich/richness.hpp"
#include "palrich/word.hpp"

namespace palrich {

struct TwoPalindromeFactorization {
  Word p;  // palindrome, possibly empty
  Word q;  // palindrome, possibly empty; p·q is the factorized word

  bool operator==(const TwoPalindromeFactorization&) const = default;
};

// Every split point 0..|w| where both parts are palindromes. Empty iff w is
// not a product of two palindromes.
std::vector<TwoPalindromeFactorization> two_palindrome_factorizations(const Word& w);

// Richness of the periodic infinite word w^infinity, decided on w·w.
bool is_power_rich(const Word& w);

// The periodic word has bounded defect iff its primitive root is a product
// of two palindromes.
bool is_power_almost_rich(const Word& w);

// Exact defect of w^infinity; nullopt when the defect is infinite. For a
// primitive root r = p·q with p, q palindromes the defect equals the defect
// of the prefix of r^infinity of length |r| + ||p|-|q||/3; all valid
// factorizations must agree or an internal error is raised.
std::optional<std::size_t> periodic_defect(const Word& w);

// A conjugate of w split into two palindromes whose lengths differ by at
// most 2. Requires w to be a product of two palindromes.
TwoPalindromeFactorization balanced_conjugate_factorization(const Word& w);

bool conjugates_all_rich(const Word& w);

}  // namespace palrich
