#include "cpalg/group_expr.hpp"

#include <stdexcept>
#include <utility>

namespace cpalg {

GroupExpr GroupExpr::trivial() { return GroupExpr(Node(TrivialNode{})); }

GroupExpr GroupExpr::torus(long long dim) {
  if (dim < 1) throw std::invalid_argument("torus dimension must be >= 1");
  return GroupExpr(Node(TorusNode{dim}));
}

GroupExpr GroupExpr::additive(long long dim) {
  if (dim < 1) throw std::invalid_argument("additive dimension must be >= 1");
  return GroupExpr(Node(AdditiveNode{dim}));
}

GroupExpr GroupExpr::general_linear(long long n) {
  if (n < 1) throw std::invalid_argument("GL(n) requires n >= 1");
  if (n == 1) return torus(1);  // GL(1) is the one-dimensional torus
  return GroupExpr(Node(GeneralLinearNode{n}));
}

GroupExpr GroupExpr::simple(SimpleType type) { return GroupExpr(Node(SimpleNode{type})); }

GroupExpr GroupExpr::unipotent_radical(SimpleType of) {
  // U of A1 is the one-dimensional additive group.
  if (of.family == SimpleFamily::A && of.rank == 1) return additive(1);
  return GroupExpr(Node(UnipotentRadicalNode{of}));
}

GroupExpr GroupExpr::borel(SimpleType of) { return GroupExpr(Node(BorelNode{of})); }

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  std::vector<GroupExpr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (std::holds_alternative<TrivialNode>(f.node())) continue;  // G x 1 = G
    if (auto* p = std::get_if<ProductNode>(&f.node())) {
      for (auto& inner : p->factors) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return std::move(flat.front());
  return GroupExpr(Node(ProductNode{std::move(flat)}));
}

long long GroupExpr::dimension() const {
  return std::visit(
      [](const auto& n) -> long long {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrivialNode>) {
          return 0;
        } else if constexpr (std::is_same_v<T, TorusNode> || std::is_same_v<T, AdditiveNode>) {
          return n.dim;
        } else if constexpr (std::is_same_v<T, GeneralLinearNode>) {
          return n.n * n.n;
        } else if constexpr (std::is_same_v<T, SimpleNode>) {
          return n.type.dimension();
        } else if constexpr (std::is_same_v<T, UnipotentRadicalNode>) {
          return (n.of.dimension() - n.of.rank) / 2;
        } else if constexpr (std::is_same_v<T, BorelNode>) {
          return (n.of.dimension() + n.of.rank) / 2;
        } else {
          long long total = 0;
          for (const auto& f : n.factors) total += f.dimension();
          return total;
        }
      },
      node_);
}

long long GroupExpr::regular_rank() const {
  return std::visit(
      [](const auto& n) -> long long {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrivialNode>) {
          return 0;
        } else if constexpr (std::is_same_v<T, TorusNode> || std::is_same_v<T, AdditiveNode>) {
          return n.dim;
        } else if constexpr (std::is_same_v<T, GeneralLinearNode>) {
          return n.n;
        } else if constexpr (std::is_same_v<T, SimpleNode>) {
          return n.type.rank;
        } else if constexpr (std::is_same_v<T, UnipotentRadicalNode>) {
          // The regular rank of the unipotent radical of a Borel subgroup
          // equals the rank of the ambient simple group.
          return n.of.rank;
        } else if constexpr (std::is_same_v<T, BorelNode>) {
          return n.of.rank;
        } else {
          long long total = 0;
          for (const auto& f : n.factors) total += f.regular_rank();
          return total;
        }
      },
      node_);
}

Rational GroupExpr::commuting_probability() const {
  const long long n = dimension();
  if (n == 0) return Rational(1);  // zero-dimensional convention
  return Rational(n + regular_rank(), 2 * n);
}

namespace {

void fold_flags(const GroupExpr& g, GroupProfile& p) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrivialNode>) {
          // all three flags hold
        } else if constexpr (std::is_same_v<T, TorusNode>) {
          p.is_nilpotent = false;
        } else if constexpr (std::is_same_v<T, AdditiveNode>) {
          p.is_reductive = false;
        } else if constexpr (std::is_same_v<T, GeneralLinearNode> || std::is_same_v<T, SimpleNode>) {
          p.is_nilpotent = false;
          p.is_abelian = false;
        } else if constexpr (std::is_same_v<T, UnipotentRadicalNode>) {
          p.is_reductive = false;
          p.is_abelian = false;
        } else if constexpr (std::is_same_v<T, BorelNode>) {
          p.is_reductive = false;
          p.is_nilpotent = false;
          p.is_abelian = false;
        } else {
          for (const auto& f : n.factors) fold_flags(f, p);
        }
      },
      g.node());
}

}  // namespace

GroupProfile GroupExpr::profile() const {
  GroupProfile p;
  p.dim = dimension();
  p.regular_rank = regular_rank();
  fold_flags(*this, p);
  return p;
}

namespace {

std::string atom_str(const GroupExpr& g) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrivialNode>) {
          return "1";
        } else if constexpr (std::is_same_v<T, TorusNode>) {
          return n.dim == 1 ? "Gm" : "Gm^" + std::to_string(n.dim);
        } else if constexpr (std::is_same_v<T, AdditiveNode>) {
          return n.dim == 1 ? "Ga" : "Ga^" + std::to_string(n.dim);
        } else if constexpr (std::is_same_v<T, GeneralLinearNode>) {
          return "GL(" + std::to_string(n.n) + ")";
        } else if constexpr (std::is_same_v<T, SimpleNode>) {
          return n.type.classical_name();
        } else if constexpr (std::is_same_v<T, UnipotentRadicalNode>) {
          return "U(" + n.of.classical_name() + ")";
        } else if constexpr (std::is_same_v<T, BorelNode>) {
          return "B(" + n.of.classical_name() + ")";
        } else {
          return "";  // products handled by the caller
        }
      },
      g.node());
}

}  // namespace

std::string GroupExpr::str() const {
  const auto* prod = std::get_if<ProductNode>(&node_);
  if (prod == nullptr) return atom_str(*this);
  // Compress runs of equal factors into "^k" where the factor prints
  // without its own exponent (Gm^d already uses one).
  std::string out;
  const auto& fs = prod->factors;
  for (size_t i = 0; i < fs.size();) {
    size_t j = i + 1;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    const size_t run = j - i;
    std::string piece = atom_str(fs[i]);
    const bool can_power = piece.find('^') == std::string::npos;
    if (!out.empty()) out += " x ";
    if (run > 1 && can_power) {
      out += piece + "^" + std::to_string(run);
    } else {
      for (size_t k = 0; k < run; ++k) {
        if (k > 0) out += " x ";
        out += piece;
      }
    }
    i = j;
  }
  return out;
}

bool GroupExpr::operator==(const GroupExpr& other) const {
  if (node_.index() != other.node_.index()) return false;
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(other.node_);
        if constexpr (std::is_same_v<T, TrivialNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, TorusNode> || std::is_same_v<T, AdditiveNode>) {
          return a.dim == b.dim;
        } else if constexpr (std::is_same_v<T, GeneralLinearNode>) {
          return a.n == b.n;
        } else if constexpr (std::is_same_v<T, SimpleNode>) {
          return a.type == b.type;
        } else if constexpr (std::is_same_v<T, UnipotentRadicalNode> || std::is_same_v<T, BorelNode>) {
          return a.of == b.of;
        } else {
          return a.factors == b.factors;
        }
      },
      node_);
}

}  // namespace cpalg
