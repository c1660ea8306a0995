#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpalg/rational.hpp"
#include "cpalg/simple_type.hpp"

namespace cpalg {

class GroupExpr;

// Node payloads. An expression denotes a connected linear algebraic group
// built from simple groups, GL(n), tori, vector groups, unipotent radicals
// and Borel subgroups of simple groups, and finite direct products.
struct TrivialNode {};
struct TorusNode {
  long long dim;  // Gm^dim
};
struct AdditiveNode {
  long long dim;  // Ga^dim
};
struct GeneralLinearNode {
  long long n;  // GL(n); n >= 2 after normalization (GL(1) becomes a torus)
};
struct SimpleNode {
  SimpleType type;
};
struct UnipotentRadicalNode {
  SimpleType of;  // unipotent radical of a Borel subgroup of `of`
};
struct BorelNode {
  SimpleType of;
};
struct ProductNode {
  std::vector<GroupExpr> factors;  // nonempty; never contains Trivial or Product
};

/// Derived invariants of an expression: the dimension n, the regular rank r
/// (the dimension of the centralizer of a regular element), and structural
/// flags. The nilpotent flag is syntactic: set when every factor is
/// additive, trivial, or a unipotent radical. Torus factors clear it (such
/// groups are still solvable).
struct GroupProfile {
  long long dim = 0;
  long long regular_rank = 0;
  bool is_reductive = true;
  bool is_nilpotent = true;
  bool is_abelian = true;
};

/// Immutable expression tree. Construction normalizes degenerate cases:
/// GL(1) -> Gm, U(A1) -> Ga, products are flattened, trivial factors are
/// dropped, and a singleton product collapses to its factor. After
/// normalization the structural abelian test (only torus/additive/trivial
/// nodes) coincides with the exact criterion regular_rank == dim.
class GroupExpr {
 public:
  using Node = std::variant<TrivialNode, TorusNode, AdditiveNode, GeneralLinearNode, SimpleNode,
                            UnipotentRadicalNode, BorelNode, ProductNode>;

  GroupExpr() : node_(TrivialNode{}) {}

  static GroupExpr trivial();
  static GroupExpr torus(long long dim);
  static GroupExpr additive(long long dim);
  static GroupExpr general_linear(long long n);
  static GroupExpr simple(SimpleType type);
  static GroupExpr unipotent_radical(SimpleType of);
  static GroupExpr borel(SimpleType of);
  static GroupExpr product(std::vector<GroupExpr> factors);

  const Node& node() const { return node_; }

  long long dimension() const;
  long long regular_rank() const;

  /// Exact commuting probability (n + r) / 2n; equals 1 for the
  /// zero-dimensional (trivial) group.
  Rational commuting_probability() const;

  GroupProfile profile() const;

  /// Canonical text form; parses back to an equal tree.
  std::string str() const;

  bool operator==(const GroupExpr& other) const;
  bool operator!=(const GroupExpr& other) const { return !(*this == other); }

 private:
  explicit GroupExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

}  // namespace cpalg
