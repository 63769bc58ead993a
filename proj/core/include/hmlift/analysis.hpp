#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmlift/maps.hpp"
#include "hmlift/matrix.hpp"

namespace hmlift {

struct Certificate {
  enum class Kind { None, Dilation, Violation, Witness, MixedPartial };
  Kind kind = Kind::None;
  // Dilation: lambda^2. Violation: the residual. MixedPartial: first value.
  ComplexPoly polynomial;
  ComplexPoly second;  // MixedPartial: second value
  // Violation: component pair (k, l); Hessian conditions add the entry (i, j).
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  GaussianVector point;  // Witness
};

struct CheckReport {
  std::string property;
  bool verdict = false;
  Certificate certificate;
  bool degenerate = false;  // constant map: lambda^2 == 0
  std::vector<std::string> notes;

  // One-line human summary, e.g. "hwc: true, lambda^2 = x1^2 + x2^2".
  std::string summary() const;
};

CheckReport is_harmonic(const RealPolyMap& phi);
CheckReport hwc_certificate(const RealPolyMap& phi);
CheckReport is_harmonic_morphism(const RealPolyMap& phi);
CheckReport is_holomorphic(const ComplexPolyMap& phi);

// (hess phi^a)^2 equal for all a and hess phi^a, hess phi^b anticommuting
// for a != b, as identities of polynomial matrices.
CheckReport hessian_conditions(const RealPolyMap& phi);

// phi bilinear on R^p x R^q with sum_k (phi^k)^2 = |x|^2 |y|^2.
CheckReport is_orthogonal_multiplication(const RealPolyMap& phi, std::size_t p, std::size_t q);

}  // namespace hmlift
