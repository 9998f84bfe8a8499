#pragma once

#include <string>
#include <variant>

#include "palrich/morphism.hpp"
#include "palrich/word.hpp"

namespace palrich {

// Finite descriptions of infinite words. Prefix expansion is deterministic;
// prefix(spec, n) is always a prefix of prefix(spec, n+1).

struct Periodic {
  Word period;  // non-empty
};

struct EventuallyPeriodic {
  Word preperiod;
  Word period;  // non-empty
};

struct MorphicFixedPoint {
  Morphism morphism;  // must be prolongable on seed
  Letter seed = 'a';
};

using InfiniteWordSpec = std::variant<Periodic, EventuallyPeriodic, MorphicFixedPoint>;

inline constexpr int kDefaultIterationBudget = 30;

Word prefix(const InfiniteWordSpec& spec, std::size_t n,
            int iteration_budget = kDefaultIterationBudget);

// Mini-language: "periodic:<word>", "evper:<pre>|<word>",
// "morphic:<a>=<word>,<b>=<word>,...;seed=<a>".
InfiniteWordSpec parse_spec(const std::string& text);
std::string format_spec(const InfiniteWordSpec& spec);
bool looks_like_spec(const std::string& text);

InfiniteWordSpec fibonacci_spec();
InfiniteWordSpec thue_morse_spec();

}  // namespace palrich
