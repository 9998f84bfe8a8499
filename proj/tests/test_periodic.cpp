#include <doctest.h>

#include <stdexcept>

#include <cstdlib>

#include "corpus.hpp"
#include "palrich/infinite_word.hpp"
#include "palrich/oracle.hpp"
#include "palrich/periodic.hpp"

using namespace palrich;

TEST_CASE("two-palindrome factorizations") {
  CHECK(two_palindrome_factorizations("abc").empty());
  CHECK_FALSE(two_palindrome_factorizations("aabbaabab").empty());
  const auto facts = two_palindrome_factorizations("abcba");
  // a palindrome always splits as (w, empty) and (empty, w)
  CHECK(facts.front() == TwoPalindromeFactorization{"", "abcba"});
  CHECK(facts.back() == TwoPalindromeFactorization{"abcba", ""});
  for (const Word& w : oracle::enumerate_words(3, 7)) {
    for (const auto& f : two_palindrome_factorizations(w)) {
      CHECK(is_palindrome(f.p));
      CHECK(is_palindrome(f.q));
      CHECK(f.p + f.q == w);
    }
  }
}

TEST_CASE("richness of periodic words") {
  CHECK(is_power_rich("aabbaabab"));
  CHECK(is_power_rich("abcba"));
  CHECK_FALSE(is_power_rich("abc"));
  CHECK_THROWS_AS(is_power_rich(""), std::invalid_argument);
}

TEST_CASE("almost richness of periodic words") {
  CHECK(is_power_almost_rich("aabacabaac"));
  CHECK_FALSE(is_power_almost_rich("aacbccbcacbc"));
  CHECK(is_power_almost_rich("abcbac"));
  CHECK_THROWS_AS(is_power_almost_rich(""), std::invalid_argument);
}

TEST_CASE("exact periodic defect") {
  CHECK(periodic_defect("abcbac") == 1);
  CHECK(periodic_defect("aabacabaac") == 2);
  CHECK_FALSE(periodic_defect("aacbccbcacbc").has_value());
  CHECK_FALSE(periodic_defect("abc").has_value());
  // a^k b a^{k-1} c a^{k-1} b a^k c has defect k
  for (std::size_t k = 1; k <= 4; ++k) {
    const Word w = Word(k, 'a') + "b" + Word(k - 1, 'a') + "c" + Word(k - 1, 'a') + "b" +
                   Word(k, 'a') + "c";
    CHECK(periodic_defect(w) == k);
  }
}

TEST_CASE("a rich periodic family") {
  for (std::size_t k = 0; k <= 5; ++k) {
    CHECK(is_power_rich("aa" + Word(k, 'b') + "aabab"));
  }
}

TEST_CASE("defect reduces to the primitive root") {
  CHECK(periodic_defect("abcbacabcbac") == 1);
  CHECK(periodic_defect("aaaa") == 0);
}

TEST_CASE("balanced conjugate factorization") {
  {
    const auto f = balanced_conjugate_factorization("aaaab");
    CHECK(is_palindrome(f.p));
    CHECK(is_palindrome(f.q));
    bool conj = false;
    for (const Word& c : conjugates("aaaab", true)) conj = conj || (f.p + f.q == c);
    CHECK(conj);
    CHECK(std::llabs(static_cast<long long>(f.p.size()) -
                     static_cast<long long>(f.q.size())) <= 2);
  }
  CHECK(balanced_conjugate_factorization("ab") == TwoPalindromeFactorization{"a", "b"});
  CHECK_THROWS_AS(balanced_conjugate_factorization("abc"), std::invalid_argument);
}

TEST_CASE("every two-palindrome product has a balanced conjugate split") {
  for (int sigma : {2, 3}) {
    for (std::size_t len = 1; len <= (sigma == 2 ? 8 : 7); ++len) {
      for (const Word& w : oracle::enumerate_words(sigma, len)) {
        if (two_palindrome_factorizations(w).empty()) continue;
        const auto f = balanced_conjugate_factorization(w);
        CHECK(std::llabs(static_cast<long long>(f.p.size()) -
                         static_cast<long long>(f.q.size())) <= 2);
      }
    }
  }
}

TEST_CASE("conjugate richness") {
  CHECK(conjugates_all_rich("abc"));
  CHECK_FALSE(conjugates_all_rich("baababbabaab"));
  CHECK(conjugates_all_rich("aa"));
}

TEST_CASE("periodic richness equivalences, small words") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      const bool power = is_power_rich(w);
      CHECK(power == is_rich(prefix(Periodic{w}, 4 * w.size())));
      CHECK(power == (!two_palindrome_factorizations(w).empty() && conjugates_all_rich(w)));
      CHECK((periodic_defect(w) == 0) == power);
      CHECK(periodic_defect(w).has_value() == is_power_almost_rich(w));
    }
  }
}

TEST_CASE("periodic defect matches a brute-force window") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      const auto d = periodic_defect(w);
      if (!d) continue;
      CHECK(*d == oracle::naive_defect(prefix(Periodic{w}, 6 * w.size())));
    }
  }
}
