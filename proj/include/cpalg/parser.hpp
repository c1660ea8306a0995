#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cpalg/group_expr.hpp"

namespace cpalg {

/// Raised on malformed input; `position()` is the zero-based character
/// offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the group-expression grammar:
///
///   expr   := term { "x" term }
///   term   := atom [ "^" NAT ]
///   atom   := "GL(" NAT ")" | "SL(" NAT ")" | "SO(" NAT ")" | "Sp(" EVEN ")"
///           | "G2" | "F4" | "E6" | "E7" | "E8"
///           | "Gm" | "Ga" | "T(" NAT ")" | "1"
///           | "U(" simple ")" | "B(" simple ")"
///
/// Whitespace is insignificant. "Gm^d" and "Ga^d" denote the d-dimensional
/// torus and vector group; "^k" on any other atom is a k-fold direct
/// product. Classical names are normalized onto canonical simple types:
/// SL(n+1) -> A_n, SO(2n+1) -> B_n (n >= 2), Sp(2n) -> C_n (n >= 3),
/// SO(2n) -> D_n (n >= 4), plus the genuine low-rank coincidences
/// Sp(2) -> A1, Sp(4) -> B2, SO(6) -> A3. Names outside these ranges
/// (SO(2), SO(3), SO(4), SL(1)) are rejected.
GroupExpr parse_group_expr(std::string_view text);

}  // namespace cpalg
