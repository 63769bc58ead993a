#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmlift/matrix.hpp"
#include "hmlift/polynomial.hpp"

namespace hmlift {

// phi: R^m -> R^n with polynomial components in x1..xm.
class RealPolyMap {
 public:
  RealPolyMap() = default;
  RealPolyMap(std::size_t domain_dim, std::vector<RealPoly> components);

  std::size_t domain_dim() const noexcept { return domain_dim_; }
  std::size_t codomain_dim() const noexcept { return components_.size(); }
  const std::vector<RealPoly>& components() const noexcept { return components_; }
  const RealPoly& operator[](std::size_t k) const { return components_.at(k); }

  friend bool operator==(const RealPolyMap&, const RealPolyMap&) = default;

 private:
  std::size_t domain_dim_ = 0;
  std::vector<RealPoly> components_;
};

// phi: C^m -> C^n with components in z1..zm, zb1..zbm (Complex layout).
class ComplexPolyMap {
 public:
  ComplexPolyMap() = default;
  ComplexPolyMap(std::size_t domain_dim, std::vector<ComplexPoly> components);

  std::size_t domain_dim() const noexcept { return domain_dim_; }
  std::size_t codomain_dim() const noexcept { return components_.size(); }
  const std::vector<ComplexPoly>& components() const noexcept { return components_; }
  const ComplexPoly& operator[](std::size_t k) const { return components_.at(k); }

  friend bool operator==(const ComplexPolyMap&, const ComplexPolyMap&) = default;

 private:
  std::size_t domain_dim_ = 0;
  std::vector<ComplexPoly> components_;
};

// phi(X) = (X^t A_1 X, ..., X^t A_n X) with symmetric A_i.
class QuadraticMap {
 public:
  QuadraticMap() = default;
  QuadraticMap(std::size_t domain_dim, std::vector<RationalMatrix> matrices);

  std::size_t domain_dim() const noexcept { return domain_dim_; }
  std::size_t codomain_dim() const noexcept { return matrices_.size(); }
  const std::vector<RationalMatrix>& matrices() const noexcept { return matrices_; }

  friend bool operator==(const QuadraticMap&, const QuadraticMap&) = default;

 private:
  std::size_t domain_dim_ = 0;
  std::vector<RationalMatrix> matrices_;
};

// Interleaved coordinates: z_k = x_{2k-1} + i x_{2k}; output (u1, v1, ..., un, vn).
RealPolyMap real_identification(const ComplexPolyMap& phi);

// Inverse of real_identification; needs even domain and codomain dimensions.
ComplexPolyMap complexify(const RealPolyMap& phi);

RealPolyMap compose(const RealPolyMap& psi, const RealPolyMap& phi);
// Substitutes psi's z_k by phi^k and zb_k by conj(phi^k).
ComplexPolyMap compose(const ComplexPolyMap& psi, const ComplexPolyMap& phi);

QuadraticMap to_quadratic(const RealPolyMap& phi);
RealPolyMap from_quadratic(const QuadraticMap& q);

RealPolyMap identity_map(std::size_t dim);
RealPolyMap linear_map(const RationalMatrix& l);

// Exact evaluation helpers.
RationalVector evaluate(const RealPolyMap& phi, std::span<const Rational> x);
GaussianVector evaluate(const ComplexPolyMap& phi, std::span<const GaussianRational> z);

std::string render(const RealPolyMap& phi);
std::string render(const ComplexPolyMap& phi);

// Map-definition source text that the parser reads back to an equal map.
std::string to_source(const RealPolyMap& phi, const std::string& name);
std::string to_source(const ComplexPolyMap& phi, const std::string& name);

}  // namespace hmlift
