#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "hmlift/maps.hpp"

namespace hmlift {

// Variables 1..m are the base x, m+1..2m the fiber y.
struct LiftSplit {
  std::size_t split_index = 0;
  std::size_t total_dim() const noexcept { return 2 * split_index; }
};

// Phi^k(x, y) = sum_j dphi^k/dx_j (x) y_j on R^{2m}; y_j is variable m + j.
RealPolyMap complete_lift_real(const RealPolyMap& phi);

// Phi^l(z, w) = sum_k dphi^l/dz_k (z) w_k on C^{2m}; complex coordinates are
// ordered (z1..zm, w1..wm) and the conjugate block (zb, wb) follows.
ComplexPolyMap complete_lift_complex(const ComplexPolyMap& phi);

// (2 X^t A_1 Y, ..., 2 X^t A_n Y).
RealPolyMap quadratic_complete_lift(const QuadraticMap& q);

// Symbolic check that J(Phi)(X, Y) = [ J(phi)(Y) | J(phi)(X) ].
bool block_jacobian_check(const QuadraticMap& q);

struct Obstruction {
  enum class Stage { NotPartialLinear, MixedPartial };
  Stage stage = Stage::NotPartialLinear;
  std::size_t component = 0;  // 0-based
  // NotPartialLinear: a monomial whose fiber degree is not exactly one.
  Exponent monomial;
  // MixedPartial: dM_{ij}/dx_k != dM_{ik}/dx_j with j = first_index, k = second_index.
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  RealPoly first_value;
  RealPoly second_value;

  std::string describe() const;
};

using AntiLiftResult = std::variant<RealPolyMap, Obstruction>;

// Decides whether Phi is the complete lift of some map on R^m and, if so,
// returns the unique preimage with zero constant terms.
AntiLiftResult anti_lift(const RealPolyMap& lifted, LiftSplit split);

}  // namespace hmlift
