#include "hmlift/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hmlift/error.hpp"

namespace hmlift {

double ResidualReport::max_laplacian_residual() const {
  double m = 0.0;
  for (double r : laplacian_residuals) m = std::max(m, r);
  return m;
}

double ResidualReport::worst_residual() const { return std::max(max_laplacian_residual(), conformality_residual); }

namespace {

double real_value(const Expr& e, std::span<const double> p) { return eval_float(e, p).real(); }

}  // namespace

ResidualReport numeric_check(const SmoothMap& phi, const std::vector<Point>& points, double tolerance) {
  phi.validate();
  const std::size_t m = phi.domain_dim;
  const std::size_t n = phi.codomain_dim();

  // First and pure second derivatives, symbolically.
  std::vector<std::vector<Expr>> d1(n, std::vector<Expr>(m));
  std::vector<std::vector<Expr>> d2(n, std::vector<Expr>(m));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      d1[k][j] = derivative(phi.components[k], j);
      d2[k][j] = derivative(d1[k][j], j);
    }

  ResidualReport r;
  r.points = points;
  r.tolerance = tolerance;
  r.laplacian_residuals.assign(n, 0.0);
  r.min_lambda2 = points.empty() ? 0.0 : INFINITY;

  for (std::size_t p = 0; p < points.size(); ++p) {
    const Point& x = points[p];
    eval_map(phi, x);  // guard check

    if (p == 0) {
      Point xp = x, xm = x;
      for (std::size_t j = 0; j < m; ++j) {
        xp[j] = x[j] + kFiniteDifferenceStep;
        xm[j] = x[j] - kFiniteDifferenceStep;
        for (std::size_t k = 0; k < n; ++k) {
          const double fd =
              (real_value(phi.components[k], xp) - real_value(phi.components[k], xm)) / (2 * kFiniteDifferenceStep);
          const double sym = real_value(d1[k][j], x);
          const double rel = std::abs(sym - fd) / std::max(1.0, std::abs(sym));
          r.fd_mismatch = std::max(r.fd_mismatch, rel);
          if (rel > kFiniteDifferenceMismatch)
            throw Error(ErrorKind::InternalConsistency,
                        "symbolic derivative of component " + std::to_string(k + 1) + " in x" +
                            std::to_string(j + 1) + " disagrees with finite differences");
        }
        xp[j] = xm[j] = x[j];
      }
    }

    bool bad = false;
    std::vector<std::vector<double>> jac(n, std::vector<double>(m));
    for (std::size_t k = 0; k < n; ++k) {
      double lap = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        jac[k][j] = real_value(d1[k][j], x);
        lap += real_value(d2[k][j], x);
      }
      r.laplacian_residuals[k] = std::max(r.laplacian_residuals[k], std::abs(lap));
      if (std::abs(lap) > tolerance && !bad) {
        bad = true;
        if (!r.witness) r.failing_check = "laplacian";
      }
    }

    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    double lambda2 = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < m; ++j) g[k][l] += jac[k][j] * jac[l][j];
        if (k == l) lambda2 += g[k][k];
      }
    if (n != 0) lambda2 /= static_cast<double>(n);
    r.max_lambda2 = std::max(r.max_lambda2, lambda2);
    r.min_lambda2 = std::min(r.min_lambda2, lambda2);
    double conf = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) conf = std::max(conf, std::abs(g[k][l] - (k == l ? lambda2 : 0.0)));
    r.conformality_residual = std::max(r.conformality_residual, conf);
    if (conf > tolerance && !bad) {
      bad = true;
      if (!r.witness) r.failing_check = "conformality";
    }
    if (bad && !r.witness) r.witness = x;
  }
  r.pass = !r.witness.has_value();
  const double worst = r.worst_residual();
  r.borderline = worst > tolerance && worst < kNumericFailThreshold;
  return r;
}

SmoothMap numeric_complete_lift(const SmoothMap& phi) {
  phi.validate();
  const std::size_t m = phi.domain_dim;
  SmoothMap lift;
  lift.name = phi.name + "_lift";
  lift.domain_dim = 2 * m;
  lift.guards = phi.guards;
  for (const auto& c : phi.components) {
    Expr acc = Expr::constant(GaussianRational(0));
    for (std::size_t j = 0; j < m; ++j) acc = acc + derivative(c, j) * Expr::variable(m + j);
    lift.components.push_back(acc);
  }
  return lift;
}

std::vector<Point> sample_points(const SmoothMap& phi, std::size_t count, std::uint64_t seed, const Box& box) {
  if (box.size() != phi.domain_dim) throw Error(ErrorKind::Dimension, "sampling box has the wrong dimension");
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1), independent of the standard library's distributions.
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Point> out;
  std::size_t rejected = 0;
  constexpr std::size_t kMinAttempts = 1000;
  while (out.size() < count) {
    Point p(box.size());
    for (std::size_t j = 0; j < box.size(); ++j) p[j] = box[j].first + (box[j].second - box[j].first) * uniform();
    bool ok = false;
    try {
      ok = min_guard(phi, p) >= kGuardMargin;
      if (ok) eval_map(phi, p);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      out.push_back(std::move(p));
      continue;
    }
    ++rejected;
    const std::size_t attempts = rejected + out.size();
    if (attempts >= kMinAttempts && rejected * 100 > attempts * 99)
      throw Error(ErrorKind::SamplingFailure,
                  "more than 99% of draws violate the guards; choose a box away from the singular locus");
  }
  return out;
}

}  // namespace hmlift
