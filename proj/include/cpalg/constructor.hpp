#pragma once

#include <vector>

#include "cpalg/group_expr.hpp"
#include "cpalg/rational.hpp"

namespace cpalg {

/// Builds a reductive group with commuting probability exactly `target`,
/// for any rational target in (1/2, 1]. The result is GL(n)^a x Gm^b with
/// the minimal n satisfying (n+1)/2n <= target; target 1 yields Gm.
/// Throws std::invalid_argument outside (1/2, 1].
GroupExpr construct_reductive(const Rational& target);

/// Same value set realized by a nilpotent group: U(Sp(2n))^a x Ga^b,
/// using that U(Sp(2n)) has dimension n^2 and regular rank n, the same
/// profile as GL(n). Target 1 yields Ga.
GroupExpr construct_nilpotent(const Rational& target);

/// The exact finite list of simple types S with p(S) > threshold, sorted by
/// dimension. Requires 1/2 < threshold < 1; the bound dim/rank < q/(2p-q)
/// makes the list finite.
std::vector<GroupExpr> simple_groups_above(const Rational& threshold);

/// A group G with |p(G) - alpha| <= eps, for alpha in [1/2, 1] and eps > 0.
/// Picks the smallest-denominator rational in the admissible window and
/// delegates to construct_reductive; for alpha = 1/2 the achieved p(G) is
/// strictly above 1/2.
GroupExpr approach_target(const Rational& alpha, const Rational& eps);

/// Minimal-denominator rational x with lo < x (or lo <= x when !lo_strict)
/// and x < hi (or x <= hi when !hi_strict). The interval must be nonempty.
Rational simplest_rational_between(const Rational& lo, bool lo_strict, const Rational& hi,
                                   bool hi_strict);

}  // namespace cpalg
