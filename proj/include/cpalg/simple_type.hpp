#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace cpalg {

/// Families of simple algebraic groups. Classical families carry a rank
/// range chosen so that every simple group appears exactly once:
/// A >= 1, B >= 2, C >= 3, D >= 4 (lower ranks coincide with earlier
/// families), exceptional types have a fixed rank.
enum class SimpleFamily : std::uint8_t { A, B, C, D, E6, E7, E8, F4, G2 };

struct SimpleType {
  SimpleFamily family;
  int rank;

  /// Validating constructor; throws std::invalid_argument when the rank
  /// falls outside the family's canonical range.
  static SimpleType make(SimpleFamily family, int rank);

  long long positive_roots() const;
  /// dim = rank + 2 * (number of positive roots).
  long long dimension() const;

  /// Short root-system name: "A3", "B2", "E8".
  std::string name() const;
  /// Matrix-group name accepted by the expression grammar:
  /// "SL(4)", "SO(5)", "Sp(6)", or the name itself for exceptional types.
  std::string classical_name() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Smallest admissible rank of a family (canonical range lower end).
int min_rank(SimpleFamily family);
/// Fixed rank for exceptional families, 0 for classical ones.
int fixed_rank(SimpleFamily family);

/// Every simple type with rank <= max_rank, sorted by (dimension, family, rank).
std::vector<SimpleType> simple_types_up_to_rank(int max_rank);

}  // namespace cpalg
