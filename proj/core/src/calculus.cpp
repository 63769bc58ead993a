#include "hmlift/calculus.hpp"

namespace hmlift {

RealPolyMatrix jacobian(const RealPolyMap& phi) {
  const std::size_t m = phi.domain_dim();
  RealPolyMatrix j(phi.codomain_dim(), m, m, Layout::Real);
  for (std::size_t i = 0; i < phi.codomain_dim(); ++i)
    for (std::size_t k = 0; k < m; ++k) j(i, k) = partial(phi[i], k);
  return j;
}

std::vector<RealPoly> laplacian_map(const RealPolyMap& phi) {
  std::vector<RealPoly> out;
  out.reserve(phi.codomain_dim());
  for (const auto& c : phi.components()) out.push_back(laplacian(c));
  return out;
}

namespace {

ComplexPolyMatrix wirtinger_block(const ComplexPolyMap& phi, std::size_t offset) {
  const std::size_t m = phi.domain_dim();
  ComplexPolyMatrix j(phi.codomain_dim(), m, 2 * m, Layout::Complex);
  for (std::size_t i = 0; i < phi.codomain_dim(); ++i)
    for (std::size_t k = 0; k < m; ++k) j(i, k) = partial(phi[i], offset + k);
  return j;
}

}  // namespace

ComplexPolyMatrix wirtinger_jacobian(const ComplexPolyMap& phi) { return wirtinger_block(phi, 0); }

ComplexPolyMatrix antiholomorphic_jacobian(const ComplexPolyMap& phi) {
  return wirtinger_block(phi, phi.domain_dim());
}

std::vector<ComplexPoly> complex_gradient(const RealPolyMap& phi) {
  if (phi.codomain_dim() != 2)
    throw Error(ErrorKind::Shape, "complex_gradient needs a map with exactly two real components (u, v)");
  std::vector<ComplexPoly> grad;
  grad.reserve(phi.domain_dim());
  for (std::size_t j = 0; j < phi.domain_dim(); ++j)
    grad.push_back(promote(partial(phi[0], j)) + GaussianRational::i() * promote(partial(phi[1], j)));
  return grad;
}

}  // namespace hmlift
