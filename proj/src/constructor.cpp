#include "cpalg/constructor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cpalg {

namespace {

void check_target(const Rational& target) {
  if (!(target > Rational(1, 2) && target <= Rational(1)))
    throw std::invalid_argument("target " + target.str() +
                                " is not attainable: commuting probabilities lie in (1/2, 1]");
}

struct BuildPlan {
  long long n = 0;  // block size
  long long a = 0;  // number of n-blocks
  long long b = 0;  // abelian dimension
};

// For target p/q in (1/2, 1): the minimal n with (n+1)/2n <= p/q, then
// a = q - p copies of an (n^2, n)-profile block plus an abelian factor of
// dimension b = (2n^2 p - n^2 q - n q) / 2. The numerator is even because
// n^2 - n always is; this is asserted, never rounded.
BuildPlan make_plan(const Rational& target) {
  const long long p = target.num();
  const long long q = target.den();
  const long long slack = 2 * p - q;  // > 0 on (1/2, 1)
  BuildPlan plan;
  plan.n = (q + slack - 1) / slack;  // ceil(q / (2p - q))
  plan.a = q - p;
  const __int128 raw =
      2 * static_cast<__int128>(plan.n) * plan.n * p - static_cast<__int128>(plan.n) * plan.n * q -
      static_cast<__int128>(plan.n) * q;
  if (raw % 2 != 0) throw std::logic_error("abelian dimension is not an integer");
  if (raw < 0) throw std::logic_error("abelian dimension is negative");
  const __int128 half = raw / 2;
  if (half > INT64_MAX) throw std::overflow_error("constructed group too large");
  plan.b = static_cast<long long>(half);
  return plan;
}

// The (dim, regular rank) = (n^2, n) nilpotent stand-in for GL(n): the
// unipotent radical of a Borel subgroup of the rank-n symplectic group,
// alias-normalized below the canonical C range.
SimpleType symplectic_rank(long long n) {
  if (n >= 3) return SimpleType::make(SimpleFamily::C, static_cast<int>(n));
  if (n == 2) return SimpleType::make(SimpleFamily::B, 2);
  return SimpleType::make(SimpleFamily::A, 1);
}

GroupExpr construct_with(const Rational& target, bool nilpotent) {
  check_target(target);
  if (target == Rational(1)) return nilpotent ? GroupExpr::additive(1) : GroupExpr::torus(1);
  const BuildPlan plan = make_plan(target);
  std::vector<GroupExpr> factors;
  factors.reserve(static_cast<size_t>(plan.a) + 1);
  for (long long i = 0; i < plan.a; ++i)
    factors.push_back(nilpotent ? GroupExpr::unipotent_radical(symplectic_rank(plan.n))
                                : GroupExpr::general_linear(plan.n));
  if (plan.b > 0)
    factors.push_back(nilpotent ? GroupExpr::additive(plan.b) : GroupExpr::torus(plan.b));
  GroupExpr result = GroupExpr::product(std::move(factors));
  if (result.commuting_probability() != target)
    throw std::logic_error("constructed group does not reproduce the target probability");
  return result;
}

}  // namespace

GroupExpr construct_reductive(const Rational& target) { return construct_with(target, false); }

GroupExpr construct_nilpotent(const Rational& target) { return construct_with(target, true); }

std::vector<GroupExpr> simple_groups_above(const Rational& threshold) {
  if (!(threshold > Rational(1, 2)))
    throw std::invalid_argument("threshold must exceed 1/2: below it infinitely many simple groups qualify");
  if (!(threshold < Rational(1)))
    throw std::invalid_argument("threshold must be below 1: no simple group is abelian");
  // p(S) > p/q is equivalent to dim/rank < q/(2p - q), and dim/rank is an
  // integer for every simple type, so a rank scan per family terminates.
  const long long p = threshold.num();
  const long long q = threshold.den();
  const Rational bound(q, 2 * p - q);
  std::vector<SimpleType> hits;
  const SimpleFamily classical[] = {SimpleFamily::A, SimpleFamily::B, SimpleFamily::C,
                                    SimpleFamily::D};
  for (SimpleFamily f : classical) {
    for (int r = min_rank(f);; ++r) {
      SimpleType t = SimpleType::make(f, r);
      const Rational ratio(t.dimension(), t.rank);  // strictly increasing in r
      if (!(ratio < bound)) break;
      hits.push_back(t);
    }
  }
  const SimpleFamily exceptional[] = {SimpleFamily::E6, SimpleFamily::E7, SimpleFamily::E8,
                                      SimpleFamily::F4, SimpleFamily::G2};
  for (SimpleFamily f : exceptional) {
    SimpleType t = SimpleType::make(f, fixed_rank(f));
    if (Rational(t.dimension(), t.rank) < bound) hits.push_back(t);
  }
  std::sort(hits.begin(), hits.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  });
  std::vector<GroupExpr> out;
  out.reserve(hits.size());
  for (const SimpleType& t : hits) out.push_back(GroupExpr::simple(t));
  return out;
}

namespace {

// Stern-Brocot style search: the integer part is peeled off and the
// fractional parts are inverted, swapping the two bounds. Denominators
// shrink at every inversion, so this terminates.
Rational simplest_impl(const Rational& lo, bool lo_strict, const Rational& hi, bool hi_strict) {
  const long long candidate = lo_strict ? lo.floor() + 1 : lo.ceil();
  const Rational c(candidate);
  if (c < hi || (!hi_strict && c == hi)) return c;
  const long long whole = lo.floor();
  const Rational flo = lo - Rational(whole);
  const Rational fhi = hi - Rational(whole);
  if (flo == Rational(0)) {
    // interval is (0, fhi): the simplest value is 1/k for the smallest
    // admissible integer k
    const Rational inv = fhi.inv();
    const long long k = hi_strict ? inv.floor() + 1 : inv.ceil();
    return Rational(whole) + Rational(1, k);
  }
  const Rational y = simplest_impl(fhi.inv(), hi_strict, flo.inv(), lo_strict);
  return Rational(whole) + y.inv();
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, bool lo_strict, const Rational& hi,
                                   bool hi_strict) {
  const bool nonempty = lo < hi || (lo == hi && !lo_strict && !hi_strict);
  if (!nonempty) throw std::invalid_argument("empty interval");
  return simplest_impl(lo, lo_strict, hi, hi_strict);
}

GroupExpr approach_target(const Rational& alpha, const Rational& eps) {
  if (!(alpha >= Rational(1, 2) && alpha <= Rational(1)))
    throw std::invalid_argument("alpha must lie in [1/2, 1]");
  if (!(eps > Rational(0))) throw std::invalid_argument("eps must be positive");
  const Rational lo = std::max(Rational(1, 2), alpha - eps);
  const Rational hi = std::min(Rational(1), alpha + eps);
  // Left end open: 1/2 itself is not attainable.
  const Rational target = simplest_rational_between(lo, true, hi, false);
  return construct_reductive(target);
}

}  // namespace cpalg
