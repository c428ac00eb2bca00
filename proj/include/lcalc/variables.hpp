#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcalc {

// Formal variables of the computation.
//
// Everything lives in the ring Q[T^+-1, X^+-1, params...] where
//   T stands for q^(-1/2)   (so q^-1 = T^2),
//   X stands for q^(-s),
// and Param variables carry Satake parameters, twisting characters and
// similar unknowns.  Half-integer shifts in classical L-arguments become
// integer powers of T, so no fractional exponents ever appear.
enum class VarKind : std::uint8_t { T = 0, X = 1, Param = 2 };

struct VarId {
  VarKind kind = VarKind::Param;
  std::string name;  // empty for T and X

  static VarId t() { return {VarKind::T, {}}; }
  static VarId x() { return {VarKind::X, {}}; }
  static VarId param(std::string n) {
    if (n.empty()) throw std::invalid_argument("empty parameter name");
    return {VarKind::Param, std::move(n)};
  }

  bool is_param() const { return kind == VarKind::Param; }

  std::string str() const {
    switch (kind) {
      case VarKind::T: return "T";
      case VarKind::X: return "X";
      default: return name;
    }
  }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

}  // namespace lcalc
