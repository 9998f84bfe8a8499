#include "palrich/morphism.hpp"

#include <sstream>
#include <stdexcept>

namespace palrich {

Morphism::Morphism(std::map<Letter, Word> images) : images_(std::move(images)) {
  for (const auto& [a, img] : images_) {
    if (!valid_letter(a) || !valid_word(img)) {
      throw std::invalid_argument("morphism: invalid letter or image");
    }
    if (img.empty()) throw std::invalid_argument("morphism: erasing image");
  }
}

const Word& Morphism::image(Letter a) const {
  auto it = images_.find(a);
  if (it == images_.end()) {
    throw std::invalid_argument(std::string("morphism: letter outside domain: ") + a);
  }
  return it->second;
}

std::string Morphism::domain() const {
  std::string out;
  for (const auto& [a, _] : images_) out.push_back(a);
  return out;
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter a : w) out += image(a);
  return out;
}

Word Morphism::iterate(Letter a, std::size_t steps) const {
  Word w(1, a);
  for (std::size_t i = 0; i < steps; ++i) w = apply(w);
  return w;
}

bool Morphism::prolongable_on(Letter a) const {
  if (!defines(a)) return false;
  const Word& img = image(a);
  return img.size() > 1 && img.front() == a;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  std::map<Letter, Word> images;
  for (const auto& [a, img] : g.images()) images[a] = f.apply(img);
  return Morphism(std::move(images));
}

Morphism identity_morphism(const std::string& alphabet) {
  std::map<Letter, Word> images;
  for (Letter a : alphabet) images[a] = Word(1, a);
  return Morphism(std::move(images));
}

Morphism psi(Letter a, const std::string& alphabet) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images[x] = (x == a) ? Word(1, a) : Word{a, x};
  return Morphism(std::move(images));
}

Morphism psi_bar(Letter a, const std::string& alphabet) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images[x] = (x == a) ? Word(1, a) : Word{x, a};
  return Morphism(std::move(images));
}

Morphism insertion(Letter a, const std::string& alphabet) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images[x] = Word{x, a};
  return Morphism(std::move(images));
}

Morphism doubling(const std::string& alphabet) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images[x] = Word{x, x};
  return Morphism(std::move(images));
}

Morphism theta(Letter a, std::size_t n, const std::string& alphabet) {
  if (n < 1) throw std::invalid_argument("theta: n must be positive");
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images[x] = (x == a) ? Word(n, a) : Word(1, x);
  return Morphism(std::move(images));
}

Morphism parse_morphism(const std::string& text) {
  std::map<Letter, Word> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1 || item.size() < 3) {
      throw std::invalid_argument("morphism: expected letter=image entries: " + text);
    }
    const Letter a = item[0];
    const Word img = item.substr(2);
    if (images.count(a)) throw std::invalid_argument("morphism: duplicate letter");
    images[a] = img;
  }
  if (images.empty()) throw std::invalid_argument("morphism: empty definition");
  return Morphism(std::move(images));
}

std::string format_morphism(const Morphism& m) {
  std::string out;
  for (const auto& [a, img] : m.images()) {
    if (!out.empty()) out.push_back(',');
    out.push_back(a);
    out.push_back('=');
    out += img;
  }
  return out;
}

namespace {

struct Run {
  std::size_t start;
  std::size_t len;
};

std::vector<Run> runs_of(const Word& w, Letter a) {
  std::vector<Run> out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == a) {
      std::size_t j = i;
      while (j < w.size() && w[j] == a) ++j;
      out.push_back({i, j - i});
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

Word pi_transform(const Word& w, Letter a, const std::vector<std::size_t>& new_exponents) {
  const auto runs = runs_of(w, a);
  std::set<std::size_t> distinct;
  for (const Run& r : runs) distinct.insert(r.len);
  const std::vector<std::size_t> old_exp(distinct.begin(), distinct.end());
  if (old_exp.size() != new_exponents.size()) {
    throw std::invalid_argument("pi_transform: exponent count mismatch");
  }
  std::map<std::size_t, std::size_t> repl;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < old_exp.size(); ++i) {
    const std::size_t h = new_exponents[i];
    if (h < 1 || h > old_exp[i] || (i > 0 && h <= prev)) {
      throw std::invalid_argument("pi_transform: invalid replacement exponents");
    }
    repl[old_exp[i]] = h;
    prev = h;
  }
  Word out;
  std::size_t i = 0;
  for (const Run& r : runs) {
    out.append(w, i, r.start - i);
    out.append(repl[r.len], a);
    i = r.start + r.len;
  }
  out.append(w, i, w.size() - i);
  return out;
}

std::optional<Letter> separating_letter(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("separating_letter: word too short");
  for (Letter a : alphabet_of(w)) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != a && w[i + 1] != a) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<Word> psi_preimage(const Word& w, Letter a) {
  if (w.empty()) return Word();
  const Word s = (w.front() == a) ? w : Word(1, a) + w;
  Word out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != a) return std::nullopt;
    if (i + 1 < s.size() && s[i + 1] != a) {
      out.push_back(s[i + 1]);
      i += 2;
    } else {
      out.push_back(a);
      i += 1;
    }
  }
  return out;
}

}  // namespace palrich
