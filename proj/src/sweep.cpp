#include "palrich/sweep.hpp"

#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "palrich/oracle.hpp"

namespace palrich {

namespace {

std::uint64_t power_checked(int alphabet_size, std::size_t len) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (p > kSweepBudget) return p;
    p *= static_cast<std::uint64_t>(alphabet_size);
  }
  return p;
}

void check_args(int alphabet_size, std::size_t max_len) {
  if (alphabet_size < 1 || alphabet_size > 26) {
    throw std::invalid_argument("sweep: alphabet size must be in 1..26");
  }
  std::uint64_t total = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += power_checked(alphabet_size, len);
    if (total > kSweepBudget) throw std::invalid_argument("sweep: word space too large");
  }
}

}  // namespace

SweepResult sweep_serial(int alphabet_size, std::size_t max_len, const WordCheck& check) {
  check_args(alphabet_size, max_len);
  SweepResult res;
  res.counts.assign(max_len + 1, 0);
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::uint64_t total = power_checked(alphabet_size, len);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Word w = oracle::word_from_index(idx, alphabet_size, len);
      const SweepVerdict v = check(w);
      res.counts[len] += v.counted;
      ++res.words_checked;
      if (v.violation && !res.first_violation) res.first_violation = w;
    }
  }
  return res;
}

SweepResult sweep_parallel(int alphabet_size, std::size_t max_len, const WordCheck& check,
                           int threads) {
  check_args(alphabet_size, max_len);
  SweepResult res;
  res.counts.assign(max_len + 1, 0);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::int64_t total = static_cast<std::int64_t>(power_checked(alphabet_size, len));
    std::uint64_t count = 0;
    std::int64_t violation = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(+ : count) reduction(min : violation)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const Word w =
          oracle::word_from_index(static_cast<std::uint64_t>(idx), alphabet_size, len);
      const SweepVerdict v = check(w);
      count += v.counted;
      if (v.violation && idx < violation) violation = idx;
    }
    res.counts[len] = count;
    res.words_checked += static_cast<std::uint64_t>(total);
    if (!res.first_violation && violation != std::numeric_limits<std::int64_t>::max()) {
      res.first_violation =
          oracle::word_from_index(static_cast<std::uint64_t>(violation), alphabet_size, len);
    }
  }
  return res;
}

SweepResult run_sweep(int alphabet_size, std::size_t max_len, const WordCheck& check, int jobs) {
  if (jobs <= 1) return sweep_serial(alphabet_size, max_len, check);
  return sweep_parallel(alphabet_size, max_len, check, jobs);
}

}  // namespace palrich
