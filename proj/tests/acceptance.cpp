// Acceptance suite: one pass/fail line per criterion, exact checks throughout.
// Exhaustive sweeps run on the parallel kernel; every expected value is
// pinned in code.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "palrich/analysis.hpp"
#include "palrich/balance.hpp"
#include "palrich/classp.hpp"
#include "palrich/eertree.hpp"
#include "palrich/infinite_word.hpp"
#include "palrich/oracle.hpp"
#include "palrich/periodic.hpp"
#include "palrich/richness.hpp"
#include "palrich/sweep.hpp"

using namespace palrich;

namespace {

int failures = 0;

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

void criterion(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::printf("PASS  %2d  %s\n", id, name.c_str());
  } catch (const CheckFailure& f) {
    ++failures;
    std::printf("FAIL  %2d  %s: %s\n", id, name.c_str(), f.message.c_str());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL  %2d  %s: unexpected error: %s\n", id, name.c_str(), e.what());
  }
  std::fflush(stdout);
}

void sweep_clean(int alphabet, std::size_t max_len, const WordCheck& check,
                 const std::string& what) {
  const SweepResult res = sweep_parallel(alphabet, max_len, check);
  if (res.first_violation) {
    throw CheckFailure{what + ": counterexample " + *res.first_violation};
  }
}

Word defect_family(std::size_t k) {
  return Word(k, 'a') + "b" + Word(k - 1, 'a') + "c" + Word(k - 1, 'a') + "b" + Word(k, 'a') +
         "c";
}

// All strictly increasing replacement tuples h with h_i <= k_i.
void each_replacement(const std::vector<std::size_t>& exps, std::vector<std::size_t>& h,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (h.size() == exps.size()) {
    fn(h);
    return;
  }
  const std::size_t lo = h.empty() ? 1 : h.back() + 1;
  for (std::size_t v = lo; v <= exps[h.size()]; ++v) {
    h.push_back(v);
    each_replacement(exps, h, fn);
    h.pop_back();
  }
}

void criterion_1() {
  const WordCheck check = [](const Word& w) {
    return SweepVerdict{false, is_rich(w) != is_rich_via_returns(w)};
  };
  sweep_clean(2, 12, check, "binary sweep");
  sweep_clean(3, 9, check, "ternary sweep");
}

void criterion_2() {
  const WordCheck check = [](const Word& w) {
    if (w.empty()) return SweepVerdict{};
    const bool power = is_power_rich(w);
    bool ok = power == is_rich(prefix(Periodic{w}, 4 * w.size()));
    ok = ok && power == (!two_palindrome_factorizations(w).empty() && conjugates_all_rich(w));
    if (power) {
      for (std::size_t k = 2; k <= 6; ++k) {
        ok = ok && is_rich(prefix(Periodic{w}, k * w.size()));
      }
    }
    return SweepVerdict{false, !ok};
  };
  sweep_clean(3, 8, check, "equivalence sweep");
  require(is_power_rich("aabbaabab"), "aabbaabab must be power-rich");
  require(is_power_rich("abcba"), "abcba must be power-rich");
  require(conjugates_all_rich("abc") && !is_power_rich("abc"),
          "abc: all conjugates rich yet not power-rich");
  require(is_rich("baababbabaab") && !two_palindrome_factorizations("baababbabaab").empty(),
          "baababbabaab is a rich two-palindrome product");
  require(!is_rich(rotate_left("baababbabaab", 1)), "the shift of baababbabaab is not rich");
}

void criterion_3() {
  require(richness_report("cacaabca").defect == 2, "defect of cacaabca");
  for (Letter x : {'a', 'b', 'c'}) {
    require(richness_report(Word("cacaabca") + x).defect == 3,
            std::string("defect of cacaabca") + x);
  }
  const Word w = prefix(Periodic{"abcabcacbacb"}, 36);
  const auto odd = oddities(w);
  require(odd.size() == 3, "three oddities in the half-shuffled window");
  const std::vector<std::size_t> ends{odd[0].end_position, odd[1].end_position,
                                      odd[2].end_position};
  require(ends == std::vector<std::size_t>{4, 5, 6}, "oddity end positions 4,5,6");
  require(richness_report(w).defective_positions == std::vector<std::size_t>{4, 5, 6, 7},
          "defects at 4,5,6,7");
}

void criterion_4() {
  const WordCheck check = [](const Word& w) {
    return SweepVerdict{false, oddities(w).size() > richness_report(w).defect};
  };
  sweep_clean(2, 12, check, "binary sweep");
  sweep_clean(3, 9, check, "ternary sweep");
  for (const InfiniteWordSpec& spec : corpus::all_specs()) {
    const Word w = prefix(spec, 180);
    require(oddities(w).size() <= richness_report(w).defect,
            "corpus window " + format_spec(spec));
  }
}

void criterion_5() {
  const Word wr = prefix(Periodic{"aacbccbcacbc"}, 36);
  require(is_weakly_rich(wr).weakly_rich, "window of aacbccbcacbc is weakly rich");
  require(!is_rich(wr), "window of aacbccbcacbc is not rich");
  require(!is_power_almost_rich("aacbccbcacbc"), "aacbccbcacbc period has no palindrome split");

  require(is_power_almost_rich("aabacabaac"), "aabacabaac is almost rich");
  const Word ar = prefix(Periodic{"aabacabaac"}, 30);
  require(richness_report(ar).defective_positions == std::vector<std::size_t>{10, 11},
          "defects of the aabacabaac window are exactly 10, 11");
  const auto verdict = is_weakly_rich(ar);
  require(!verdict.weakly_rich, "aabacabaac window is not weakly rich");
  require(verdict.witness == Word("cabaac"), "witness is cabaac");
}

void criterion_6() {
  const WordCheck check = [](const Word& w) {
    if (w.empty()) return SweepVerdict{};
    const auto d = periodic_defect(w);
    if (d.has_value() != is_power_almost_rich(w)) return SweepVerdict{false, true};
    if (!d) return SweepVerdict{};
    bool ok = (*d == 0) == is_power_rich(w);
    ok = ok && *d == oracle::naive_defect(prefix(Periodic{w}, 6 * w.size()));
    return SweepVerdict{false, !ok};
  };
  sweep_clean(3, 8, check, "defect formula sweep");
  for (std::size_t k = 1; k <= 4; ++k) {
    require(periodic_defect(defect_family(k)) == k,
            "defect family k=" + std::to_string(k));
  }
}

void criterion_7() {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const Word& t : oracle::enumerate_words(3, len)) {
      for (Letter a : {'a', 'b', 'c'}) {
        const Word image = psi(a, "abc").apply(t);
        require(is_power_rich(t) == is_power_rich(image),
                "psi transfer fails for " + t + " under " + std::string(1, a));
      }
    }
  }
  require(periodic_defect("abcbac") == 1, "abcbac has one defect");
  const Word image = psi('a', "abc").apply("abcbac");
  require(image == "aabacabaac", "psi_a image of abcbac");
  require(periodic_defect(image) == 2, "psi_a image has two defects");

  Word doubled;
  for (Letter c : Word("aabacabaac")) doubled.append(2, c);
  require(periodic_defect(doubled) == 4, "doubled period has four defects");
  const auto positions =
      richness_report(prefix(Periodic{doubled}, 3 * doubled.size())).defective_positions;
  require(positions == std::vector<std::size_t>{19, 20, 21, 22}, "doubled defects at 19..22");
}

void criterion_8() {
  // generated families are balanced, weakly rich and rich
  for (int k : {3, 4}) {
    std::vector<WRFamilySpec> specs;
    for (int n = 1; n <= 3; ++n) specs.emplace_back(WRFamily1{k, n});
    for (int j = 1; j <= k - 2; ++j) specs.emplace_back(WRFamily2{k, j});
    for (const WRFamilySpec& spec : specs) {
      const Word u = wr_family_period(spec);
      require(is_periodic_balanced(u), "family period balanced: " + u);
      require(is_weakly_rich(prefix(Periodic{u}, 3 * u.size())).weakly_rich,
              "family period weakly rich: " + u);
      require(is_power_rich(u), "family period power-rich: " + u);
    }
  }
  // identity of the separator images with fraenkel blocks
  require(eq21_check(1, Word(12, '3'), 30), "separator identity j=1");
  require(eq21_check(2, Word(12, '4'), 30), "separator identity j=2");
  // the extreme parameter reproduces the fraenkel word up to a shift
  for (int k : {3, 4}) {
    const Word u = wr_family_period(WRFamily2{k, k - 2});
    bool conj = false;
    for (const Word& c : conjugates(fraenkel_word(k), true)) conj = conj || (c == u);
    require(conj, "extreme family parameter is a shift of the fraenkel word");
  }
  // converse: every balanced weakly-rich primitive period over exactly three
  // letters matches a family word
  const WordCheck check = [](const Word& u) {
    if (u.size() < 3 || alphabet_of(u).size() != 3 || !is_primitive(u)) return SweepVerdict{};
    if (!is_periodic_balanced(u)) return SweepVerdict{};
    if (!is_weakly_rich(prefix(Periodic{u}, 3 * u.size())).weakly_rich) return SweepVerdict{};
    return SweepVerdict{true, !matches_wr_family(u).has_value()};
  };
  sweep_clean(3, 10, check, "classification converse sweep");
  // balanced rich periodic words are binary or family words too
  const WordCheck rich_check = [](const Word& u) {
    if (u.empty() || !is_periodic_balanced(u) || !is_power_rich(u)) return SweepVerdict{};
    const bool ok = alphabet_of(u).size() < 3 || matches_wr_family(u).has_value();
    return SweepVerdict{true, !ok};
  };
  sweep_clean(3, 10, rich_check, "balanced rich sweep");
}

void criterion_9() {
  {
    const auto cert = is_class_P(parse_morphism("a=baa,b=baba"));
    require(cert.has_value() && cert->shift == 0 && cert->p == "b",
            "baa/baba is standard class P with p=b");
  }
  {
    const auto cert = is_class_P(compose(psi('a', "ab"), psi('b', "ab")));
    require(cert.has_value() && cert->p == "aba", "composed certificate has p=aba");
    const auto* trimmed = std::get_if<TrimmedPart>(&cert->parts.at('b'));
    require(trimmed && trimmed->k == 1, "q_b is trimmed by one");
  }
  {
    const auto sweep = preserves_richness_empirical(parse_morphism("a=aba,b=bcb,c=cbc"), 8, "abc");
    require(!sweep.preserves && sweep.counterexample == Word("acb"),
            "first richness counterexample is acb");
  }
  {
    const auto r = palindrome_preservation_class(parse_morphism("a=aba,b=bcb,c=aba"));
    require(r.kind == PalindromePreservation::Preserves && r.witness == Word("abc"),
            "palindrome preservation witness abc");
  }
}

void criterion_10() {
  const Morphism phi = parse_morphism("a=aabbaa,b=bab");
  const auto phi_cert = is_class_P(phi);
  require(phi_cert.has_value() && phi_cert->shift == 0, "aabbaa/bab is standard class P");
  require(phi.apply("aabb") == "aabbaaaabbaababbab", "image of the fixed-point window");
  require(!is_rich("aabbaaaabbaababbab"), "that image is not rich");
  require(special_fixed_point_class(phi, *phi_cert, 'a') == FixedPointClass::InfiniteDefect,
          "aabbaa/bab generates infinitely many defects");

  const Morphism gen = parse_morphism("a=abb,b=ac,c=a");
  const auto gen_cert = is_class_P(gen);
  require(gen_cert.has_value() &&
              special_fixed_point_class(gen, *gen_cert, 'a') == FixedPointClass::Rich,
          "abb/ac/a generates a rich word");
  require(is_rich(prefix(MorphicFixedPoint{gen, 'a'}, 500)), "its length-500 prefix is rich");

  const Morphism delta = parse_morphism("a=aba,b=bcb,c=cac");
  const auto delta_cert = is_class_P(delta);
  require(delta_cert.has_value() &&
              special_fixed_point_class(delta, *delta_cert, 'a') ==
                  FixedPointClass::InfiniteDefect,
          "aba/bcb/cac generates infinitely many defects");

  require(phi.apply("abaa") == "aabbaababaabbaaaabbaa", "image of the fibonacci window");
  require(is_rich("aabbaababaabbaaaabbaa"), "that image is rich");
  require(special_rich_test(phi, *phi_cert, fibonacci_spec()), "fibonacci image is rich");
}

void criterion_11() {
  require(prefix(thue_morse_spec(), 10) == "abbabaabba", "thue-morse prefix");
  require(!is_rich("abbabaabba"), "thue-morse prefix of length 10 is not rich");
  std::vector<std::size_t> expected;
  for (std::size_t n = 0;; ++n) {
    const std::size_t run = std::size_t(1) << (2 * n + 1);
    const std::size_t s1 = (std::size_t(1) << (2 * n + 3)) + 1;
    const std::size_t s2 = (std::size_t(1) << (2 * n + 4)) + (std::size_t(1) << (2 * n + 3)) + 1;
    if (s1 > 200) break;
    for (std::size_t p = s1; p < s1 + run && p <= 200; ++p) expected.push_back(p);
    for (std::size_t p = s2; p < s2 + run && p <= 200; ++p) expected.push_back(p);
  }
  std::sort(expected.begin(), expected.end());
  const auto got = richness_report(prefix(thue_morse_spec(), 200)).defective_positions;
  require(got == expected, "defective runs of the length-200 thue-morse prefix");
}

void criterion_12() {
  // complexity inequality on reversal-closed corpus windows
  for (const InfiniteWordSpec& spec : corpus::all_specs()) {
    const Word w = prefix(spec, 800);
    const PalindromeIndex idx(w);
    for (std::size_t n = 0; n <= 50; ++n) {
      const auto fn = factor_set(w, n);
      const auto fn1 = factor_set(w, n + 1);
      if (!is_reversal_closed(fn) || !is_reversal_closed(fn1)) continue;
      const auto cn = idx.complexity(n);
      const auto cn1 = idx.complexity(n + 1);
      require(cn.palindromic + cn1.palindromic + cn.factors <= cn1.factors + 2,
              "complexity inequality at n=" + std::to_string(n) + " for " + format_spec(spec));
    }
  }
  // richness is invariant under run-exponent replacement
  for (int sigma : {2, 3}) {
    const std::size_t max_len = sigma == 2 ? 12 : 9;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (const Word& w : oracle::enumerate_words(sigma, len)) {
        const bool rich = is_rich(w);
        for (int ai = 0; ai < sigma; ++ai) {
          const Letter a = static_cast<Letter>('a' + ai);
          std::set<std::size_t> exp_set;
          std::size_t i = 0;
          while (i < w.size()) {
            if (w[i] == a) {
              std::size_t j = i;
              while (j < w.size() && w[j] == a) ++j;
              exp_set.insert(j - i);
              i = j;
            } else {
              ++i;
            }
          }
          const std::vector<std::size_t> exps(exp_set.begin(), exp_set.end());
          std::vector<std::size_t> h;
          each_replacement(exps, h, [&](const std::vector<std::size_t>& repl) {
            require(is_rich(pi_transform(w, a, repl)) == rich,
                    "exponent replacement changes richness of " + w);
          });
        }
      }
    }
  }
  // rich fixed points that are not uniformly recurrent
  require(is_rich(prefix(MorphicFixedPoint{parse_morphism("a=aba,b=bb"), 'a'}, 500)),
          "aba/bb fixed point rich to 500");
  require(is_rich(prefix(MorphicFixedPoint{parse_morphism("a=abab,b=b"), 'a'}, 500)),
          "abab/b fixed point rich to 500");
}

}  // namespace

int main() {
  criterion(1, "richness coincides with the palindromic-return characterization", criterion_1);
  criterion(2, "periodic richness equivalences and their boundary words", criterion_2);
  criterion(3, "defect and oddity pins", criterion_3);
  criterion(4, "oddity count never exceeds the defect", criterion_4);
  criterion(5, "weak richness and almost richness pins", criterion_5);
  criterion(6, "exact periodic defect matches brute force", criterion_6);
  criterion(7, "richness and defect transfer under letter insertion and doubling", criterion_7);
  criterion(8, "balanced weakly-rich classification at desk scale", criterion_8);
  criterion(9, "morphism classification pins", criterion_9);
  criterion(10, "special-morphism fixed-point dichotomy", criterion_10);
  criterion(11, "thue-morse defect runs", criterion_11);
  criterion(12, "complexity bound, exponent invariance, non-recurrent rich words", criterion_12);
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
