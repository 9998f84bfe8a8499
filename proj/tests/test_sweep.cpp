#include <doctest.h>

#include <stdexcept>

#include "palrich/richness.hpp"
#include "palrich/sweep.hpp"

using namespace palrich;

namespace {

const WordCheck rich_count = [](const Word& w) { return SweepVerdict{is_rich(w), false}; };

const WordCheck nonrich_hunt = [](const Word& w) { return SweepVerdict{false, !is_rich(w)}; };

}  // namespace

TEST_CASE("rich counts over the binary alphabet") {
  const SweepResult res = sweep_serial(2, 5, rich_count);
  CHECK(res.counts == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32});
  CHECK(res.words_checked == 63);
  CHECK_FALSE(res.first_violation.has_value());
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (int threads : {2, 4}) {
    CHECK(sweep_parallel(2, 9, rich_count, threads) == sweep_serial(2, 9, rich_count));
    CHECK(sweep_parallel(3, 6, rich_count, threads) == sweep_serial(3, 6, rich_count));
    CHECK(sweep_parallel(2, 9, nonrich_hunt, threads) == sweep_serial(2, 9, nonrich_hunt));
  }
}

TEST_CASE("first violation is the shortest lexicographically smallest one") {
  const SweepResult res = sweep_serial(2, 9, nonrich_hunt);
  REQUIRE(res.first_violation.has_value());
  CHECK(*res.first_violation == "aababbaa");  // shortest non-rich binary word, first in order
  CHECK(res.first_violation == sweep_parallel(2, 9, nonrich_hunt, 3).first_violation);
}

TEST_CASE("dispatch by job count") {
  CHECK(run_sweep(2, 6, rich_count, 1) == run_sweep(2, 6, rich_count, 4));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(sweep_serial(26, 12, rich_count), std::invalid_argument);
  CHECK_THROWS_AS(sweep_serial(0, 3, rich_count), std::invalid_argument);
}
