#include "cpalg/finite/growth.hpp"
#include "doctest.h"

using namespace cpalg::finite;

TEST_CASE("order growth degrees match dimensions") {
  CHECK(growth_degree(Family::GL, 2, Counter::order, {2, 3, 5, 7, 11}) == 4);
  CHECK(growth_degree(Family::U, 3, Counter::order, {2, 3, 5, 7}) == 3);
  CHECK(growth_degree(Family::B, 2, Counter::order, {2, 3, 5, 7}) == 3);
  CHECK(growth_degree(Family::SL, 2, Counter::order, {3, 5, 7, 11}) == 3);
}

TEST_CASE("class-count growth degrees match regular ranks") {
  CHECK(growth_degree(Family::GL, 2, Counter::class_count, {3, 5, 7, 11}) == 2);
  CHECK(growth_degree(Family::GL, 2, Counter::class_count, {2, 3, 5, 7, 11}) == 2);
  CHECK(growth_degree(Family::U, 3, Counter::class_count, {2, 3, 5, 7}) == 2);
  CHECK(growth_degree(Family::B, 2, Counter::class_count, {2, 3, 5, 7}) == 2);
  CHECK(growth_degree(Family::SL, 2, Counter::class_count, {3, 5, 7, 11}) == 1);
}

TEST_CASE("parity-dependent counters fall back to odd primes") {
  // SL2 class counts differ at q = 2; the mixed list fails its hold-out and
  // the odd-only retry recovers the linear growth
  CHECK(growth_degree(Family::SL, 2, Counter::class_count, {2, 3, 5, 7, 11}) == 1);
}

TEST_CASE("too few samples to validate") {
  CHECK_THROWS_AS(growth_degree(Family::U, 3, Counter::order, {5}), GrowthError);
  // three samples cannot pin a cubic: the hold-out refutes the quadratic
  // fit and no retry is possible
  CHECK_THROWS_AS(growth_degree(Family::U, 3, Counter::order, {2, 3, 5}), GrowthError);
  try {
    growth_degree(Family::U, 3, Counter::order, {2, 3, 5});
  } catch (const GrowthError& e) {
    CHECK(e.kind() == GrowthError::Kind::not_polynomial);
  }
}

TEST_CASE("hold-out tables beyond the cap are reported") {
  // GL3 samples would need a hold-out at q = 7, whose table has ~3.4e7
  // elements
  CHECK_THROWS_AS(growth_degree(Family::GL, 3, Counter::class_count, {2, 3, 5}), OrderCapError);
  CHECK_THROWS_AS(growth_degree(Family::GL, 3, Counter::order, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}),
                  OrderCapError);
}

TEST_CASE("non-prime samples are rejected") {
  CHECK_THROWS_AS(growth_degree(Family::GL, 2, Counter::order, {2, 3, 4, 5}),
                  std::invalid_argument);
}
