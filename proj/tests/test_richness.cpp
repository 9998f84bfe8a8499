#include <doctest.h>

#include <stdexcept>

#include <map>

#include "corpus.hpp"
#include "palrich/infinite_word.hpp"
#include "palrich/oracle.hpp"
#include "palrich/periodic.hpp"
#include "palrich/richness.hpp"

using namespace palrich;

TEST_CASE("richness basics") {
  CHECK_FALSE(is_rich("abbabaabba"));
  CHECK(is_rich("baababbabaab"));
  CHECK_FALSE(is_rich("aababbabaabb"));  // the shift of the rich palindrome above
  CHECK(is_rich(""));
}

TEST_CASE("richness report") {
  {
    const auto r = richness_report("cacaabca");
    CHECK(r.defect == 2);
    CHECK(r.defective_positions.size() == 2);
    CHECK(r.palindrome_count == r.length + 1 - r.defect);
  }
  for (Letter x : {'a', 'b', 'c'}) {
    CHECK(richness_report(Word("cacaabca") + x).defect == 3);
  }
  {
    const auto r = richness_report("");
    CHECK(r.defect == 0);
    CHECK(r.defective_positions.empty());
    CHECK(r.rich);
  }
}

TEST_CASE("report invariants, exhaustively") {
  for (std::size_t len = 0; len <= 9; ++len) {
    for (const Word& w : oracle::enumerate_words(2, len)) {
      const auto r = richness_report(w);
      CHECK(r.defect == w.size() + 1 - r.palindrome_count);
      CHECK(r.rich == (r.defect == 0));
      CHECK(r.defective_positions.size() == r.defect);
      CHECK(r.defect == oracle::naive_defect(w));
    }
  }
}

TEST_CASE("ups per prefix") {
  const auto r = richness_report("aab", true);
  REQUIRE(r.ups_per_prefix.has_value());
  const auto& ups = *r.ups_per_prefix;
  REQUIRE(ups.size() == 3);
  CHECK(ups[0] == std::pair<std::size_t, Word>{1, "a"});
  CHECK(ups[1] == std::pair<std::size_t, Word>{2, "aa"});
  CHECK(ups[2] == std::pair<std::size_t, Word>{3, "b"});
  CHECK_FALSE(richness_report("aab").ups_per_prefix.has_value());
}

TEST_CASE("palindromic closure") {
  CHECK(palindromic_closure("aab") == "aabaa");
  CHECK(palindromic_closure("abcba") == "abcba");
  CHECK(palindromic_closure("ab") == "aba");
  CHECK(palindromic_closure("") == "");
}

TEST_CASE("closure preserves richness") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      const Word c = palindromic_closure(w);
      CHECK(is_palindrome(c));
      CHECK(c.compare(0, w.size(), w) == 0);
      if (is_rich(w)) CHECK(is_rich(c));
    }
  }
}

TEST_CASE("iterated palindromic closure") {
  CHECK(iterated_palindromic_closure("ab") == "aba");
  CHECK(iterated_palindromic_closure("abc") == "abacaba");
  CHECK(iterated_palindromic_closure("aa") == "aa");
}

TEST_CASE("complete returns") {
  {
    const auto rets = complete_returns("abaca", "a");
    REQUIRE(rets.size() == 2);
    CHECK(rets[0].return_word == "aba");
    CHECK(rets[1].return_word == "aca");
  }
  CHECK(complete_returns("aa", "a").size() == 1);
  CHECK(complete_returns("aa", "a")[0].return_word == "aa");
  CHECK_THROWS_AS(complete_returns("ab", ""), std::invalid_argument);
  // a weakly rich word with a non-palindromic return to "aa"
  bool found = false;
  for (const auto& cr : complete_returns(prefix(Periodic{"aacbccbcacbc"}, 24), "aa")) {
    if (!is_palindrome(cr.return_word)) found = true;
  }
  CHECK(found);
}

TEST_CASE("returns match the oracle") {
  for (const Word& w : oracle::enumerate_words(2, 7)) {
    for (const Word& u : {Word("a"), Word("ab"), Word("aa")}) {
      const auto fast = complete_returns(w, u);
      const auto slow = oracle::naive_complete_returns(w, u);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].return_word == slow[i]);
    }
  }
}

TEST_CASE("richness via palindromic returns") {
  CHECK_FALSE(is_rich_via_returns("abbabaabba"));
  CHECK(is_rich_via_returns("aabaa"));
  CHECK(is_rich_via_returns("a"));
}

TEST_CASE("the two richness routes agree") {
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const Word& w : oracle::enumerate_words(2, len)) {
      CHECK(is_rich(w) == is_rich_via_returns(w));
    }
  }
  for (std::size_t len = 0; len <= 7; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      CHECK(is_rich(w) == is_rich_via_returns(w));
    }
  }
}

TEST_CASE("weak richness") {
  CHECK(is_weakly_rich(prefix(Periodic{"aacbccbcacbc"}, 36)).weakly_rich);
  {
    const auto v = is_weakly_rich(prefix(Periodic{"aabacabaac"}, 30));
    CHECK_FALSE(v.weakly_rich);
    CHECK(v.witness == "cabaac");
  }
  CHECK(is_weakly_rich("ab").weakly_rich);
  // every binary word is weakly rich
  for (const Word& w : oracle::enumerate_words(2, 8)) {
    CHECK(is_weakly_rich(w).weakly_rich);
  }
}

TEST_CASE("oddities") {
  {
    const auto odd = oddities(prefix(Periodic{"abcabcacbacb"}, 36));
    REQUIRE(odd.size() == 3);
    CHECK(odd[0].end_position == 4);
    CHECK(odd[1].end_position == 5);
    CHECK(odd[2].end_position == 6);
    CHECK(odd[0].representative == "abca");
    CHECK(odd[0].palindrome == "a");
  }
  CHECK(oddities(prefix(Periodic{"abc"}, 30)).size() == 3);
  CHECK(oddities("baababbabaab").empty());
}

TEST_CASE("oddity count bounded by defect") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      CHECK(oddities(w).size() <= richness_report(w).defect);
    }
  }
}

TEST_CASE("rich extensions") {
  CHECK(rich_extensions("aab").right.count('a') == 1);
  CHECK(rich_extensions("a").right.count('a') == 1);
  CHECK_THROWS_AS(rich_extensions("abbabaabba"), std::invalid_argument);
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      if (!is_rich(w)) continue;
      const auto ext = rich_extensions(w);
      CHECK_FALSE(ext.right.empty());
      CHECK_FALSE(ext.left.empty());
    }
  }
}

TEST_CASE("extending past the ups keeps a word rich") {
  // for rich non-palindromic w = f·u with ups u, the letter before u extends
  // w on the right, and xux becomes the new ups
  for (std::size_t len = 2; len <= 7; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      if (!is_rich(w) || is_palindrome(w)) continue;
      const PalindromeIndex idx(w);
      const Word u = idx.longest_palindromic_suffix(w.size());
      REQUIRE(u.size() < w.size());
      const Letter x = w[w.size() - u.size() - 1];
      CHECK(is_rich(w + x));
      CHECK(rich_extensions(w).right.count(x) == 1);
      const Word wx = w + x;
      CHECK(PalindromeIndex(wx).longest_palindromic_suffix(wx.size()) == x + u + x);
    }
  }
}

TEST_CASE("rich extension fast path") {
  CHECK(rich_extension_fastpath("aa", 'a') == true);
  CHECK(rich_extension_fastpath("ab", 'a') == true);
  CHECK_FALSE(rich_extension_fastpath("aab", 'c').has_value());
  CHECK_THROWS_AS(rich_extension_fastpath("abbabaabba", 'a'), std::invalid_argument);
  // a positive answer is never wrong
  for (const Word& u : oracle::enumerate_words(3, 6)) {
    if (!is_rich(u)) continue;
    for (Letter x : {'a', 'b', 'c'}) {
      if (rich_extension_fastpath(u, x).has_value()) CHECK(is_rich(u + x));
    }
  }
}

TEST_CASE("factors and reversals of rich words are rich") {
  for (std::size_t len = 0; len <= 7; ++len) {
    for (const Word& w : oracle::enumerate_words(3, len)) {
      if (!is_rich(w)) continue;
      CHECK(is_rich(reverse_word(w)));
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          CHECK(is_rich(w.substr(i, j - i)));
        }
      }
    }
  }
}

TEST_CASE("rich words with equal palindromic factors are abelian equivalent") {
  for (int sigma : {2, 3}) {
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t len = 0; len <= 10; ++len) {
      for (const Word& w : oracle::enumerate_words(sigma, len)) {
        if (!is_rich(w)) continue;
        std::string key;
        for (const Word& p : oracle::naive_palindrome_set(w)) key += p + '|';
        std::vector<std::size_t> counts;
        for (int i = 0; i < sigma; ++i) counts.push_back(letter_count(w, 'a' + i));
        auto [it, inserted] = buckets.emplace(key, counts);
        if (!inserted) CHECK(it->second == counts);
      }
    }
  }
}

TEST_CASE("recurrent rich words have reversal-closed factors") {
  for (const Word& u : corpus::rich_periods()) {
    const Word w = prefix(Periodic{u}, 3 * u.size());
    for (std::size_t n = 0; n <= u.size(); ++n) {
      CHECK(is_reversal_closed(factor_set(w, n)));
    }
  }
}

TEST_CASE("recurrent rich words have growing palindromic prefixes") {
  for (const Word& u : corpus::rich_periods()) {
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
      const Word w = prefix(Periodic{u}, k * u.size());
      std::size_t count = 0;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        if (is_palindrome(w.substr(0, i))) ++count;
      }
      CHECK(count > prev);
      prev = count;
    }
  }
}

TEST_CASE("recurrent almost rich words have reversal-closed factors") {
  for (const Word& u : corpus::almost_rich_periods()) {
    const Word w = prefix(Periodic{u}, 3 * u.size());
    for (std::size_t n = 0; n <= u.size(); ++n) {
      CHECK(is_reversal_closed(factor_set(w, n)));
    }
  }
}
