#include "palrich/classp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace palrich {

Word StandardPMorphism::standard_image(Letter x) const {
  const ClassPPart& part = parts.at(x);
  if (const auto* app = std::get_if<AppendedPart>(&part)) return p + app->palindrome;
  const auto& trim = std::get<TrimmedPart>(part);
  return p.substr(0, p.size() - trim.k);
}

Word StandardPMorphism::image(Letter x) const {
  return rotate_left(standard_image(x), shift);
}

namespace {

// Validates a candidate palindrome p against de-rotated images; fills parts.
bool validate_standard(const std::map<Letter, Word>& images, const Word& p,
                       std::map<Letter, ClassPPart>& parts) {
  parts.clear();
  for (const auto& [x, img] : images) {
    if (img.size() >= p.size() && img.compare(0, p.size(), p) == 0) {
      Word q = img.substr(p.size());
      if (!is_palindrome(q)) return false;
      parts[x] = AppendedPart{std::move(q)};
    } else if (img.size() < p.size() && p.compare(0, img.size(), img) == 0) {
      const std::size_t k = p.size() - img.size();
      if (!is_palindrome(p.substr(img.size()))) return false;
      parts[x] = TrimmedPart{k};
    } else {
      return false;
    }
  }
  return true;
}

std::vector<Word> candidate_palindromes(const std::map<Letter, Word>& images) {
  // Common palindromic prefixes cover the all-appended case; per-letter
  // image·reverse(prefix) palindromes cover the trimmed case.
  std::set<Word> cands;
  cands.insert(Word());
  std::size_t common = Word::npos;
  const Word& first = images.begin()->second;
  for (const auto& [x, img] : images) {
    std::size_t c = 0;
    while (c < img.size() && c < first.size() && img[c] == first[c]) ++c;
    common = std::min(common, c);
  }
  for (std::size_t len = 1; len <= common; ++len) {
    Word pref = first.substr(0, len);
    if (is_palindrome(pref)) cands.insert(std::move(pref));
  }
  for (const auto& [x, img] : images) {
    for (std::size_t k = 1; k <= img.size(); ++k) {
      Word p = img + reverse_word(img.substr(0, k));
      if (is_palindrome(p)) cands.insert(std::move(p));
    }
  }
  std::vector<Word> out(cands.begin(), cands.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

std::optional<StandardPMorphism> is_class_P(const Morphism& m) {
  std::size_t max_len = 0;
  for (const auto& [x, img] : m.images()) max_len = std::max(max_len, img.size());
  for (std::size_t shift = 0; shift <= 2 * max_len; ++shift) {
    std::map<Letter, Word> derotated;
    for (const auto& [x, img] : m.images()) derotated[x] = rotate_right(img, shift);
    for (const Word& p : candidate_palindromes(derotated)) {
      if (shift > p.size()) continue;
      std::map<Letter, ClassPPart> parts;
      if (!validate_standard(derotated, p, parts)) continue;
      StandardPMorphism cert{p, std::move(parts), shift};
      // Rotation by shift mod |image| must reproduce the original images.
      bool ok = true;
      for (const auto& [x, img] : m.images()) {
        if (cert.image(x) != img) {
          ok = false;
          break;
        }
      }
      if (ok) return cert;
    }
  }
  return std::nullopt;
}

namespace {

void require_valid_standard_cert(const Morphism& m, const StandardPMorphism& cert) {
  if (cert.shift != 0) {
    throw std::invalid_argument("class P: certificate must be standard (shift 0)");
  }
  for (const auto& [x, img] : m.images()) {
    if (!cert.parts.count(x) || cert.image(x) != img) {
      throw std::invalid_argument("class P: certificate does not match the morphism");
    }
  }
  if (cert.parts.size() != m.images().size()) {
    throw std::invalid_argument("class P: certificate does not match the morphism");
  }
}

}  // namespace

std::size_t special_check_bound(const Morphism& m, const StandardPMorphism& cert) {
  std::size_t max_block = 0, min_img = SIZE_MAX;
  for (const auto& [x, img] : m.images()) {
    max_block = std::max(max_block, img.size() + cert.p.size());
    min_img = std::min(min_img, img.size());
  }
  return (2 * max_block + min_img - 1) / min_img + 2;
}

bool is_special(const Morphism& m, const StandardPMorphism& cert) {
  require_valid_standard_cert(m, cert);
  // 1) images end with pairwise distinct letters
  std::set<Letter> lasts;
  for (const auto& [x, img] : m.images()) {
    if (!lasts.insert(img.back()).second) return false;
  }
  // 2) occurrences of image(x)·p in image(w)·p align to block boundaries
  const std::string alpha = m.domain();
  const std::size_t bound = special_check_bound(m, cert);
  double total = 0;
  for (std::size_t len = 1, pw = alpha.size(); len <= bound; ++len, pw *= alpha.size()) {
    total += static_cast<double>(pw) * static_cast<double>(len);
    if (total > 5e7) throw std::runtime_error("is_special: bounded check too large");
  }
  std::vector<std::pair<Word, Word>> patterns;  // (image, image+p)
  for (const auto& [x, img] : m.images()) patterns.emplace_back(img, img + cert.p);

  Word w(1, alpha[0]);
  std::vector<std::size_t> digits;
  for (std::size_t len = 1; len <= bound; ++len) {
    digits.assign(len, 0);
    while (true) {
      w.resize(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = alpha[digits[i]];
      Word s;
      std::vector<std::size_t> block_start;
      for (Letter y : w) {
        block_start.push_back(s.size());
        s += m.image(y);
      }
      s += cert.p;
      for (const auto& [img, pat] : patterns) {
        std::size_t pos = s.find(pat);
        while (pos != Word::npos) {
          const auto it = std::lower_bound(block_start.begin(), block_start.end(), pos);
          const bool aligned = it != block_start.end() && *it == pos &&
                               m.image(w[it - block_start.begin()]) == img;
          if (!aligned) return false;
          pos = s.find(pat, pos + 1);
        }
      }
      // next word
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == alpha.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return true;
}

std::set<Word> short_palindromic_factors(const InfiniteWordSpec& spec) {
  std::set<Word> factors;
  auto add_short_factors = [&factors](const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      factors.insert(w.substr(i, 1));
      if (i + 1 < w.size()) factors.insert(w.substr(i, 2));
    }
  };
  if (const auto* per = std::get_if<Periodic>(&spec)) {
    add_short_factors(per->period + per->period);
  } else if (const auto* ev = std::get_if<EventuallyPeriodic>(&spec)) {
    add_short_factors(ev->preperiod + ev->period + ev->period);
  } else {
    const auto& fp = std::get<MorphicFixedPoint>(spec);
    if (!fp.morphism.prolongable_on(fp.seed)) {
      throw std::invalid_argument("short_palindromic_factors: not prolongable");
    }
    // Closure of the length-<=2 factor set under the morphism's action.
    std::set<Word> cur{Word(1, fp.seed)};
    while (true) {
      std::set<Word> next = cur;
      for (const Word& u : cur) {
        const Word img = fp.morphism.apply(u);
        for (std::size_t i = 0; i < img.size(); ++i) {
          next.insert(img.substr(i, 1));
          if (i + 1 < img.size()) next.insert(img.substr(i, 2));
        }
      }
      if (next == cur) break;
      cur = std::move(next);
    }
    factors = std::move(cur);
  }
  std::set<Word> out;
  for (const Word& u : factors) {
    if (is_palindrome(u)) out.insert(u);
  }
  return out;
}

namespace {

std::size_t minimal_prefix_containing(const InfiniteWordSpec& spec, const std::set<Word>& req) {
  std::size_t budget = 64;
  for (int round = 0; round < 12; ++round, budget *= 2) {
    Word w;
    try {
      w = prefix(spec, budget, /*iteration_budget=*/200);
    } catch (const std::runtime_error&) {
      break;
    }
    std::size_t h = 0;
    bool all = true;
    for (const Word& u : req) {
      const std::size_t pos = w.find(u);
      if (pos == Word::npos) {
        all = false;
        break;
      }
      h = std::max(h, pos + u.size());
    }
    if (all) return h;
  }
  throw std::runtime_error("factor set not stabilized within the expansion budget");
}

}  // namespace

bool special_rich_test(const Morphism& m, const StandardPMorphism& cert,
                       const InfiniteWordSpec& t) {
  if (!is_special(m, cert)) {
    throw std::invalid_argument("special_rich_test: morphism is not special");
  }
  const std::set<Word> req = short_palindromic_factors(t);
  const std::size_t h = minimal_prefix_containing(t, req);
  const Word window = prefix(t, h, /*iteration_budget=*/200);
  if (!is_rich(window)) {
    throw std::invalid_argument("special_rich_test: analysis window of t is not rich");
  }
  return is_rich(m.apply(window) + cert.p);
}

FixedPointClass special_fixed_point_class(const Morphism& m, const StandardPMorphism& cert,
                                          Letter seed) {
  if (!is_special(m, cert)) {
    throw std::invalid_argument("special_fixed_point_class: morphism is not special");
  }
  if (!m.prolongable_on(seed)) {
    throw std::invalid_argument("special_fixed_point_class: not prolongable on seed");
  }
  const InfiniteWordSpec spec = MorphicFixedPoint{m, seed};
  const std::set<Word> req = short_palindromic_factors(spec);
  const std::size_t h = minimal_prefix_containing(spec, req);
  const Word window = prefix(spec, h, /*iteration_budget=*/200);
  return is_rich(m.apply(window) + cert.p) ? FixedPointClass::Rich
                                           : FixedPointClass::InfiniteDefect;
}

bool check_mpr_hypotheses(const Morphism& m) {
  std::vector<Word> images, roots;
  for (const auto& [x, img] : m.images()) {
    images.push_back(img);
    roots.push_back(primitive_root(img).root);
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] != roots[i]) return false;  // image not primitive
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (i == j) continue;
      if (images[i] == images[j] || roots[i] == roots[j]) return false;
      // image i a power of root j
      if (images[i].size() % roots[j].size() == 0) {
        Word pw;
        while (pw.size() < images[i].size()) pw += roots[j];
        if (pw == images[i]) return false;
      }
    }
  }
  return true;
}

namespace {

// Enumerates words over the alphabet in length-then-lex order, restricted to
// words in which every alphabet letter occurs, and feeds them to fn until it
// returns false.
template <typename Fn>
void for_each_full_alphabet_word(const std::string& alphabet, std::size_t max_len, Fn&& fn) {
  for (std::size_t len = alphabet.size(); len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    Word w(len, alphabet[0]);
    while (true) {
      for (std::size_t i = 0; i < len; ++i) w[i] = alphabet[digits[i]];
      if (alphabet_of(w).size() == alphabet.size()) {
        if (!fn(w)) return;
      }
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
}

}  // namespace

PreservationSweep preserves_richness_empirical(const Morphism& m, std::size_t max_len,
                                               const std::string& alphabet) {
  PreservationSweep out;
  for_each_full_alphabet_word(alphabet, max_len, [&](const Word& w) {
    if (is_rich(w) && !is_rich(m.apply(w))) {
      out.preserves = false;
      out.counterexample = w;
      return false;
    }
    return true;
  });
  return out;
}

PalindromePreservationReport palindrome_preservation_class(const Morphism& m,
                                                           std::size_t sweep_len) {
  for (const auto& [x, img] : m.images()) {
    if (!is_palindrome(img)) return {PalindromePreservation::None, std::nullopt};
  }
  PalindromePreservationReport out{PalindromePreservation::StrictlyPreserves, std::nullopt};
  for_each_full_alphabet_word(m.domain(), sweep_len, [&](const Word& w) {
    if (!is_palindrome(w) && is_palindrome(m.apply(w))) {
      out.kind = PalindromePreservation::Preserves;
      out.witness = w;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace palrich
