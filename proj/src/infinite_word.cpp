#include "palrich/infinite_word.hpp"

#include <stdexcept>

namespace palrich {

namespace {

Word periodic_prefix(const Word& pre, const Word& period, std::size_t n) {
  if (period.empty()) throw std::invalid_argument("spec: empty period");
  Word out = pre.substr(0, std::min(pre.size(), n));
  while (out.size() < n) out.append(period, 0, std::min(period.size(), n - out.size()));
  return out;
}

}  // namespace

Word prefix(const InfiniteWordSpec& spec, std::size_t n, int iteration_budget) {
  return std::visit(
      [&](const auto& s) -> Word {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return periodic_prefix(Word(), s.period, n);
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          return periodic_prefix(s.preperiod, s.period, n);
        } else {
          if (!s.morphism.prolongable_on(s.seed)) {
            throw std::invalid_argument("spec: morphism not prolongable on seed");
          }
          Word w(1, s.seed);
          for (int it = 0; w.size() < n; ++it) {
            if (it >= iteration_budget) {
              throw std::runtime_error("spec: iteration budget exceeded");
            }
            w = s.morphism.apply(w);
          }
          w.resize(n);
          return w;
        }
      },
      spec);
}

InfiniteWordSpec parse_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("spec: missing kind prefix");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "periodic") {
    if (body.empty() || !valid_word(body)) throw std::invalid_argument("spec: bad period");
    return Periodic{body};
  }
  if (kind == "evper") {
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("spec: evper needs pre|period");
    const Word pre = body.substr(0, bar);
    const Word per = body.substr(bar + 1);
    if (per.empty() || !valid_word(pre) || !valid_word(per)) {
      throw std::invalid_argument("spec: bad evper parts");
    }
    return EventuallyPeriodic{pre, per};
  }
  if (kind == "morphic") {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("spec: morphic needs ;seed=");
    const std::string seed_part = body.substr(semi + 1);
    if (seed_part.size() != 6 || seed_part.rfind("seed=", 0) != 0) {
      throw std::invalid_argument("spec: morphic needs seed=<letter>");
    }
    Morphism m = parse_morphism(body.substr(0, semi));
    const Letter seed = seed_part[5];
    if (!m.prolongable_on(seed)) {
      throw std::invalid_argument("spec: morphism not prolongable on seed");
    }
    return MorphicFixedPoint{std::move(m), seed};
  }
  throw std::invalid_argument("spec: unknown kind: " + kind);
}

std::string format_spec(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return "periodic:" + s.period;
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          return "evper:" + s.preperiod + "|" + s.period;
        } else {
          return "morphic:" + format_morphism(s.morphism) + ";seed=" + std::string(1, s.seed);
        }
      },
      spec);
}

bool looks_like_spec(const std::string& text) {
  return text.rfind("periodic:", 0) == 0 || text.rfind("evper:", 0) == 0 ||
         text.rfind("morphic:", 0) == 0;
}

InfiniteWordSpec fibonacci_spec() {
  return MorphicFixedPoint{parse_morphism("a=ab,b=a"), 'a'};
}

InfiniteWordSpec thue_morse_spec() {
  return MorphicFixedPoint{parse_morphism("a=ab,b=ba"), 'a'};
}

}  // namespace palrich
