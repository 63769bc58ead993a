#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hmlift/maps.hpp"
#include "hmlift/matrix.hpp"

namespace hmlift {

// Evidence about whether Phi: R^{2m} -> C (components (u, v)) can be
// holomorphic for a Kaehler structure. Gradients spanning more than m
// dimensions cannot lie in any m-dimensional isotropic subspace.
struct KaehlerReport {
  enum class Verdict { NotKaehlerCertified, Inconclusive };

  std::size_t half_dim = 0;  // m
  std::vector<GaussianVector> sample_points;  // complex coordinates, length m
  std::vector<GaussianVector> gradients;      // length 2m
  std::vector<std::size_t> rank_history;      // span rank after each point
  std::vector<std::size_t> jacobian_ranks;    // real Jacobian rank at each point
  GaussianMatrix bilinear;                    // <grad_a, grad_b>, no conjugation
  std::size_t rank = 0;
  bool isotropy_ok = true;
  bool pairwise_orthogonal = true;
  Verdict verdict = Verdict::Inconclusive;
};

const char* to_string(KaehlerReport::Verdict v);

// Exact complex gradient of Phi at a point given in complex coordinates
// (z_k = x_{2k-1} + i x_{2k}).
GaussianVector gradient_at(const RealPolyMap& phi, std::span<const GaussianRational> point);

KaehlerReport span_report(const RealPolyMap& phi, const std::vector<GaussianVector>& points);

// Greedy random search over points with coordinates in {0, 1, -1, i, -i, 1-i},
// keeping points that raise the span rank. Stops once rank > m or after
// `budget` trials.
KaehlerReport search_points(const RealPolyMap& phi, std::size_t budget, std::uint64_t seed);

}  // namespace hmlift
