#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "palrich/word.hpp"

namespace palrich {

// Exhaustive word-space sweeps. The parallel kernel partitions the
// lexicographic index space of each length across OpenMP threads; the serial
// kernel is the reference implementation and both produce identical results
// (counts per length, and the shortest-then-lexicographically-first
// violation). Checks must be pure functions.

struct SweepVerdict {
  bool counted = false;    // contributes to the per-length count
  bool violation = false;  // flags the word as a counterexample
};

using WordCheck = std::function<SweepVerdict(const Word&)>;

struct SweepResult {
  std::vector<std::uint64_t> counts;  // per length 0..max_len
  std::optional<Word> first_violation;
  std::uint64_t words_checked = 0;

  bool operator==(const SweepResult&) const = default;
};

// Guard on the total number of words visited.
inline constexpr std::uint64_t kSweepBudget = 40'000'000;

SweepResult sweep_serial(int alphabet_size, std::size_t max_len, const WordCheck& check);

// threads = 0 uses the OpenMP default.
SweepResult sweep_parallel(int alphabet_size, std::size_t max_len, const WordCheck& check,
                           int threads = 0);

SweepResult run_sweep(int alphabet_size, std::size_t max_len, const WordCheck& check,
                      int jobs);  // jobs <= 1 runs the serial reference

}  // namespace palrich
