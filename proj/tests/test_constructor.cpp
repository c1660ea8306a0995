#include <algorithm>
#include <numeric>
#include <random>

#include "cpalg/constructor.hpp"
#include "cpalg/parser.hpp"
#include "doctest.h"

using namespace cpalg;

TEST_CASE("reductive construction examples") {
  CHECK(construct_reductive(Rational(3, 4)) == GroupExpr::general_linear(2));
  CHECK(construct_reductive(Rational(5, 8)) == parse_group_expr("GL(4)^3"));
  CHECK(construct_reductive(Rational(1)) == GroupExpr::torus(1));
  CHECK(construct_reductive(Rational(3, 5)) == parse_group_expr("GL(5)^2"));
}

TEST_CASE("nilpotent construction examples") {
  CHECK(construct_nilpotent(Rational(3, 4)) ==
        GroupExpr::unipotent_radical(SimpleType::make(SimpleFamily::B, 2)));
  CHECK(construct_nilpotent(Rational(2, 3)) ==
        GroupExpr::unipotent_radical(SimpleType::make(SimpleFamily::C, 3)));
  CHECK(construct_nilpotent(Rational(1)) == GroupExpr::additive(1));
}

TEST_CASE("targets outside (1/2, 1] are rejected") {
  CHECK_THROWS_AS(construct_reductive(Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(construct_reductive(Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(construct_reductive(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(construct_nilpotent(Rational(0)), std::invalid_argument);
}

TEST_CASE("exact round trip over all denominators up to 50") {
  for (std::int64_t b = 1; b <= 50; ++b) {
    for (std::int64_t a = b / 2 + 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational t(a, b);
      const GroupExpr red = construct_reductive(t);
      const GroupExpr nil = construct_nilpotent(t);
      CAPTURE(t.str());
      CHECK(red.commuting_probability() == t);
      CHECK(nil.commuting_probability() == t);
      CHECK(red.profile().is_reductive);
      CHECK(nil.profile().is_nilpotent);
      CHECK_FALSE(nil.profile().is_reductive);
    }
  }
}

TEST_CASE("threshold enumeration examples") {
  CHECK(simple_groups_above(Rational(2, 3)).empty());
  CHECK(simple_groups_above(Rational(9, 10)).empty());
  const auto hits = simple_groups_above(Rational(4, 7));
  std::vector<std::string> names;
  names.reserve(hits.size());
  for (const auto& g : hits) names.push_back(g.str());
  CHECK(names == std::vector<std::string>{"SL(2)", "SL(3)", "SO(5)", "SL(4)", "SL(5)"});
}

TEST_CASE("threshold enumeration agrees with a brute-force scan") {
  const Rational thresholds[] = {Rational(4, 7),  Rational(5, 9),   Rational(13, 24),
                                 Rational(51, 100), Rational(2, 3), Rational(999, 1000)};
  for (const Rational& t : thresholds) {
    std::vector<std::string> brute;
    for (const SimpleType& s : simple_types_up_to_rank(64)) {
      if (GroupExpr::simple(s).commuting_probability() > t)
        brute.push_back(GroupExpr::simple(s).str());
    }
    std::vector<std::string> fast;
    for (const auto& g : simple_groups_above(t)) fast.push_back(g.str());
    CAPTURE(t.str());
    CHECK(fast == brute);
  }
}

TEST_CASE("threshold enumeration is monotone") {
  const auto wide = simple_groups_above(Rational(13, 25));
  const auto narrow = simple_groups_above(Rational(3, 5));
  for (const auto& g : narrow) {
    CHECK(std::find(wide.begin(), wide.end(), g) != wide.end());
  }
  CHECK(narrow.size() <= wide.size());
}

TEST_CASE("threshold preconditions") {
  CHECK_THROWS_AS(simple_groups_above(Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(simple_groups_above(Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(simple_groups_above(Rational(1)), std::invalid_argument);
}

TEST_CASE("simplest rational in an interval matches brute force") {
  auto brute = [](const Rational& lo, bool lo_strict, const Rational& hi, bool hi_strict) {
    for (std::int64_t den = 1;; ++den) {
      for (std::int64_t num = (lo * Rational(den)).floor(); num <= (hi * Rational(den)).ceil();
           ++num) {
        const Rational x(num, den);
        const bool lo_ok = lo_strict ? x > lo : x >= lo;
        const bool hi_ok = hi_strict ? x < hi : x <= hi;
        if (lo_ok && hi_ok) return x;
      }
    }
  };
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> num(1, 400);
  std::uniform_int_distribution<std::int64_t> den(1, 400);
  std::bernoulli_distribution flag(0.5);
  for (int i = 0; i < 400; ++i) {
    Rational lo(num(rng), den(rng));
    Rational hi(num(rng), den(rng));
    if (hi < lo) std::swap(lo, hi);
    bool lo_strict = flag(rng);
    bool hi_strict = flag(rng);
    if (lo == hi && (lo_strict || hi_strict)) continue;
    const Rational got = simplest_rational_between(lo, lo_strict, hi, hi_strict);
    const Rational want = brute(lo, lo_strict, hi, hi_strict);
    CAPTURE(lo.str());
    CAPTURE(hi.str());
    CHECK(got.den() == want.den());
    CHECK((lo_strict ? got > lo : got >= lo));
    CHECK((hi_strict ? got < hi : got <= hi));
  }
}

TEST_CASE("approach_target examples") {
  const GroupExpr g = approach_target(Rational(3, 5), Rational(1, 100));
  CHECK(g.commuting_probability() == Rational(3, 5));
  CHECK(approach_target(Rational(1), Rational(1, 7)) == GroupExpr::torus(1));
  const GroupExpr near_half = approach_target(Rational(1, 2), Rational(1, 1000));
  CHECK(near_half.commuting_probability() > Rational(1, 2));
  CHECK(near_half.commuting_probability() <= Rational(1, 2) + Rational(1, 1000));
}

TEST_CASE("approach_target random property") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  std::uniform_int_distribution<std::int64_t> eden(1, 1'000'000);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num((d + 1) / 2, d);
    const Rational alpha = std::max(Rational(1, 2), Rational(num(rng), d));
    const Rational eps(1, eden(rng));  // eps >= 1e-6
    const GroupExpr g = approach_target(alpha, eps);
    CAPTURE(alpha.str());
    CAPTURE(eps.str());
    CHECK((g.commuting_probability() - alpha).abs() <= eps);
  }
}

TEST_CASE("constructed groups use only the advertised node kinds") {
  for (std::int64_t b = 2; b <= 25; ++b) {
    for (std::int64_t a = b / 2 + 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const GroupExpr red = construct_reductive(Rational(a, b));
      const GroupExpr nil = construct_nilpotent(Rational(a, b));
      auto check_kinds = [](const GroupExpr& g, bool nilpotent) {
        auto is_allowed = [&](const GroupExpr& e) {
          if (nilpotent)
            return std::holds_alternative<AdditiveNode>(e.node()) ||
                   std::holds_alternative<UnipotentRadicalNode>(e.node());
          return std::holds_alternative<TorusNode>(e.node()) ||
                 std::holds_alternative<GeneralLinearNode>(e.node());
        };
        if (const auto* prod = std::get_if<ProductNode>(&g.node())) {
          for (const auto& f : prod->factors) CHECK(is_allowed(f));
        } else {
          CHECK(is_allowed(g));
        }
      };
      check_kinds(red, false);
      check_kinds(nil, true);
    }
  }
}
