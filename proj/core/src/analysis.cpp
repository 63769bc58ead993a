#include "hmlift/analysis.hpp"

#include <sstream>

#include "hmlift/calculus.hpp"
#include "hmlift/error.hpp"

namespace hmlift {

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << property << ": " << (verdict ? "true" : "false");
  const auto one = [](std::size_t v) { return v + 1; };
  switch (certificate.kind) {
    case Certificate::Kind::None: break;
    case Certificate::Kind::Dilation: os << ", lambda^2 = " << render(certificate.polynomial); break;
    case Certificate::Kind::Violation:
      os << ", violation at (" << one(certificate.k) << "," << one(certificate.l) << ")";
      if (property == "hessian-conditions")
        os << " entry (" << one(certificate.i) << "," << one(certificate.j) << ")";
      os << ", residual = " << render(certificate.polynomial);
      break;
    case Certificate::Kind::Witness: {
      os << ", witness point (";
      for (std::size_t t = 0; t < certificate.point.size(); ++t)
        os << (t ? ", " : "") << certificate.point[t].to_string();
      os << ")";
      break;
    }
    case Certificate::Kind::MixedPartial:
      os << ", mixed partials " << render(certificate.polynomial) << " != " << render(certificate.second);
      break;
  }
  if (degenerate) os << " [constant/degenerate]";
  return os.str();
}

CheckReport is_harmonic(const RealPolyMap& phi) {
  CheckReport r;
  r.property = "harmonic";
  r.verdict = true;
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k) {
    RealPoly lap = laplacian(phi[k]);
    if (!lap.is_zero()) {
      r.verdict = false;
      r.certificate.kind = Certificate::Kind::Violation;
      r.certificate.k = r.certificate.l = k;
      r.certificate.polynomial = promote(lap);
      return r;
    }
  }
  return r;
}

CheckReport hwc_certificate(const RealPolyMap& phi) {
  CheckReport r;
  r.property = "hwc";
  const std::size_t n = phi.codomain_dim();
  if (n == 0) {
    r.verdict = true;
    return r;
  }
  const RealPolyMatrix j = jacobian(phi);
  const RealPolyMatrix g = j * j.transpose();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) {
      RealPoly residual = k == l ? g(k, k) - g(0, 0) : g(k, l);
      if (!residual.is_zero()) {
        r.verdict = false;
        r.certificate.kind = Certificate::Kind::Violation;
        r.certificate.k = k;
        r.certificate.l = l;
        r.certificate.polynomial = promote(residual);
        if (k == l) r.notes.push_back("diagonal entry differs from G(1,1)");
        return r;
      }
    }
  r.verdict = true;
  r.certificate.kind = Certificate::Kind::Dilation;
  r.certificate.polynomial = promote(g(0, 0));
  if (g(0, 0).is_zero()) {
    r.degenerate = true;
    r.notes.push_back("constant/degenerate map: dilation is identically zero");
  }
  return r;
}

CheckReport is_harmonic_morphism(const RealPolyMap& phi) {
  CheckReport harmonic = is_harmonic(phi);
  if (!harmonic.verdict) {
    harmonic.property = "harmonic-morphism";
    harmonic.notes.push_back("not harmonic");
    return harmonic;
  }
  CheckReport hwc = hwc_certificate(phi);
  hwc.property = "harmonic-morphism";
  if (!hwc.verdict) hwc.notes.push_back("harmonic but not horizontally weakly conformal");
  return hwc;
}

CheckReport is_holomorphic(const ComplexPolyMap& phi) {
  CheckReport r;
  r.property = "holomorphic";
  const ComplexPolyMatrix a = antiholomorphic_jacobian(phi);
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (!a(k, l).is_zero()) {
        r.verdict = false;
        r.certificate.kind = Certificate::Kind::Violation;
        r.certificate.k = k;
        r.certificate.l = l;
        r.certificate.polynomial = a(k, l);
        r.notes.push_back("d/dzb" + std::to_string(l + 1) + " of component " + std::to_string(k + 1) +
                          " is nonzero");
        return r;
      }
  r.verdict = true;
  return r;
}

namespace {

// First nonzero entry of a polynomial matrix, or false.
bool first_nonzero(const RealPolyMatrix& m, std::size_t& i, std::size_t& j) {
  for (i = 0; i < m.rows(); ++i)
    for (j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return true;
  return false;
}

}  // namespace

CheckReport hessian_conditions(const RealPolyMap& phi) {
  CheckReport r;
  r.property = "hessian-conditions";
  const CheckReport hwc = hwc_certificate(phi);
  r.notes.push_back(std::string("precondition (phi horizontally weakly conformal): ") +
                    (hwc.verdict ? "holds" : "fails"));

  std::vector<RealPolyMatrix> h;
  std::vector<RealPolyMatrix> squares;
  for (const auto& c : phi.components()) {
    h.push_back(hessian(c));
    squares.push_back(h.back() * h.back());
  }
  const auto violation = [&](std::size_t a, std::size_t b, const RealPolyMatrix& diff, const char* what) {
    std::size_t i = 0, j = 0;
    if (!first_nonzero(diff, i, j)) return false;
    r.verdict = false;
    r.certificate.kind = Certificate::Kind::Violation;
    r.certificate.k = a;
    r.certificate.l = b;
    r.certificate.i = i;
    r.certificate.j = j;
    r.certificate.polynomial = promote(diff(i, j));
    r.notes.push_back(what);
    return true;
  };
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      if (violation(a, b, squares[a] - squares[b], "squares of the Hessians differ")) return r;
      if (violation(a, b, h[a] * h[b] + h[b] * h[a], "Hessians do not anticommute")) return r;
    }
  r.verdict = true;
  return r;
}

CheckReport is_orthogonal_multiplication(const RealPolyMap& phi, std::size_t p, std::size_t q) {
  const std::size_t m = phi.domain_dim();
  if (p + q != m)
    throw Error(ErrorKind::Shape, "orthogonal multiplication blocks " + std::to_string(p) + "+" +
                                      std::to_string(q) + " do not cover R^" + std::to_string(m));
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k)
    for (const auto& [e, c] : phi[k].terms())
      if (block_degree(e, 0, p) != 1 || block_degree(e, p, m) != 1)
        throw Error(ErrorKind::Shape, "component " + std::to_string(k + 1) + " is not bilinear in the blocks");

  RealPoly lhs(m, Layout::Real);
  for (const auto& c : phi.components()) lhs += c * c;
  RealPoly nx(m, Layout::Real), ny(m, Layout::Real);
  for (std::size_t v = 0; v < m; ++v) {
    const RealPoly xv = RealPoly::variable(m, Layout::Real, v);
    (v < p ? nx : ny) += xv * xv;
  }
  const RealPoly residual = lhs - nx * ny;
  CheckReport r;
  r.property = "orthogonal-multiplication";
  r.verdict = residual.is_zero();
  if (!r.verdict) {
    r.certificate.kind = Certificate::Kind::Violation;
    r.certificate.polynomial = promote(residual);
    r.notes.push_back("sum of squared components minus |x|^2 |y|^2 is nonzero");
  }
  return r;
}

}  // namespace hmlift
