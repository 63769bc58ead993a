#include "hmlift/maps.hpp"

#include <sstream>

#include "hmlift/error.hpp"

namespace hmlift {

RealPolyMap::RealPolyMap(std::size_t domain_dim, std::vector<RealPoly> components)
    : domain_dim_(domain_dim), components_(std::move(components)) {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (components_[k].num_vars() != domain_dim_ || components_[k].layout() != Layout::Real)
      throw Error(ErrorKind::Dimension, "real map component " + std::to_string(k + 1) +
                                            " does not live on R^" + std::to_string(domain_dim_));
}

ComplexPolyMap::ComplexPolyMap(std::size_t domain_dim, std::vector<ComplexPoly> components)
    : domain_dim_(domain_dim), components_(std::move(components)) {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (components_[k].num_vars() != 2 * domain_dim_ || components_[k].layout() != Layout::Complex)
      throw Error(ErrorKind::Dimension, "complex map component " + std::to_string(k + 1) +
                                            " does not live on C^" + std::to_string(domain_dim_));
}

QuadraticMap::QuadraticMap(std::size_t domain_dim, std::vector<RationalMatrix> matrices)
    : domain_dim_(domain_dim), matrices_(std::move(matrices)) {
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    const auto& a = matrices_[k];
    if (a.rows() != domain_dim_ || a.cols() != domain_dim_)
      throw Error(ErrorKind::Dimension, "quadratic form " + std::to_string(k + 1) + " has the wrong size");
    if (!a.is_symmetric())
      throw Error(ErrorKind::InvariantViolation, "quadratic form A" + std::to_string(k + 1) + " is not symmetric");
  }
}

RealPolyMap real_identification(const ComplexPolyMap& phi) {
  const std::size_t m = phi.domain_dim();
  const std::size_t nv = 2 * m;
  const GaussianRational i = GaussianRational::i();
  std::vector<ComplexPoly> images;
  images.reserve(nv);
  for (std::size_t k = 0; k < m; ++k) {
    const ComplexPoly x = ComplexPoly::variable(nv, Layout::Real, 2 * k);
    const ComplexPoly y = ComplexPoly::variable(nv, Layout::Real, 2 * k + 1);
    images.push_back(x + i * y);
  }
  for (std::size_t k = 0; k < m; ++k) {
    const ComplexPoly x = ComplexPoly::variable(nv, Layout::Real, 2 * k);
    const ComplexPoly y = ComplexPoly::variable(nv, Layout::Real, 2 * k + 1);
    images.push_back(x - i * y);
  }
  std::vector<RealPoly> out;
  out.reserve(2 * phi.codomain_dim());
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k) {
    const ComplexPoly c = compose(phi[k], images);
    const ComplexPoly cc = conjugate(c);
    // u = (c + conj c)/2 and v = (c - conj c)/(2i) have real coefficients for
    // any well-formed map; anything else is a malformed input.
    const ComplexPoly u = GaussianRational(Rational(1, 2)) * (c + cc);
    const ComplexPoly v = GaussianRational(Rational(0), Rational(-1, 2)) * (c - cc);
    if (!has_real_coefficients(u) || !has_real_coefficients(v) || !(u + i * v == c))
      throw Error(ErrorKind::InternalConsistency, "real identification produced non-real coefficients");
    out.push_back(real_part(u));
    out.push_back(real_part(v));
  }
  return RealPolyMap(nv, std::move(out));
}

ComplexPolyMap complexify(const RealPolyMap& phi) {
  if (phi.domain_dim() % 2 != 0 || phi.codomain_dim() % 2 != 0)
    throw Error(ErrorKind::Dimension, "complexify needs even domain and codomain dimensions");
  const std::size_t m = phi.domain_dim() / 2;
  const std::size_t nv = 2 * m;
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
  std::vector<ComplexPoly> images;
  images.reserve(phi.domain_dim());
  for (std::size_t k = 0; k < m; ++k) {
    const ComplexPoly z = ComplexPoly::variable(nv, Layout::Complex, k);
    const ComplexPoly zb = ComplexPoly::variable(nv, Layout::Complex, m + k);
    images.push_back(half * (z + zb));
    images.push_back(minus_half_i * (z - zb));
  }
  std::vector<ComplexPoly> out;
  for (std::size_t k = 0; k < phi.codomain_dim(); k += 2) {
    const ComplexPoly u = compose(promote(phi[k]), images);
    const ComplexPoly v = compose(promote(phi[k + 1]), images);
    out.push_back(u + GaussianRational::i() * v);
  }
  return ComplexPolyMap(m, std::move(out));
}

RealPolyMap compose(const RealPolyMap& psi, const RealPolyMap& phi) {
  if (psi.domain_dim() != phi.codomain_dim())
    throw Error(ErrorKind::Dimension, "compose: codomain of inner map does not match domain of outer map");
  std::vector<RealPoly> out;
  out.reserve(psi.codomain_dim());
  for (const auto& c : psi.components()) {
    if (phi.codomain_dim() == 0) {
      out.push_back(RealPoly::constant(phi.domain_dim(), Layout::Real, c.constant_term()));
      continue;
    }
    out.push_back(compose(c, phi.components()));
  }
  return RealPolyMap(phi.domain_dim(), std::move(out));
}

ComplexPolyMap compose(const ComplexPolyMap& psi, const ComplexPolyMap& phi) {
  if (psi.domain_dim() != phi.codomain_dim())
    throw Error(ErrorKind::Dimension, "compose: codomain of inner map does not match domain of outer map");
  std::vector<ComplexPoly> images = phi.components();
  for (const auto& c : phi.components()) images.push_back(conjugate(c));
  std::vector<ComplexPoly> out;
  out.reserve(psi.codomain_dim());
  for (const auto& c : psi.components()) {
    if (images.empty()) {
      out.push_back(ComplexPoly::constant(2 * phi.domain_dim(), Layout::Complex, c.constant_term()));
      continue;
    }
    out.push_back(compose(c, images));
  }
  return ComplexPolyMap(phi.domain_dim(), std::move(out));
}

QuadraticMap to_quadratic(const RealPolyMap& phi) {
  const std::size_t m = phi.domain_dim();
  std::vector<RationalMatrix> mats;
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k) {
    const RealPoly& c = phi[k];
    if (!is_homogeneous(c, 2))
      throw Error(ErrorKind::Shape, "component " + std::to_string(k + 1) +
                                        " is not homogeneous of degree 2");
    RationalMatrix a(m, m);
    for (const auto& [e, coeff] : c.terms()) {
      std::size_t i = m, j = m;
      for (std::size_t v = 0; v < m; ++v) {
        if (e[v] == 2) i = j = v;
        if (e[v] == 1) (i == m ? i : j) = v;
      }
      if (i == j) {
        a(i, i) = coeff;
      } else {
        a(i, j) = coeff * Rational(1, 2);
        a(j, i) = a(i, j);
      }
    }
    mats.push_back(std::move(a));
  }
  return QuadraticMap(m, std::move(mats));
}

RealPolyMap from_quadratic(const QuadraticMap& q) {
  const std::size_t m = q.domain_dim();
  std::vector<RealPoly> out;
  for (const auto& a : q.matrices()) {
    RealPoly p(m, Layout::Real);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (a(i, j).is_zero()) continue;
        Exponent e(m, 0);
        ++e[i];
        ++e[j];
        p.add_term(std::move(e), a(i, j));
      }
    out.push_back(std::move(p));
  }
  return RealPolyMap(m, std::move(out));
}

RealPolyMap identity_map(std::size_t dim) {
  std::vector<RealPoly> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(RealPoly::variable(dim, Layout::Real, k));
  return RealPolyMap(dim, std::move(out));
}

RealPolyMap linear_map(const RationalMatrix& l) {
  std::vector<RealPoly> out;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    RealPoly p(l.cols(), Layout::Real);
    for (std::size_t j = 0; j < l.cols(); ++j) {
      Exponent e(l.cols(), 0);
      e[j] = 1;
      p.add_term(std::move(e), l(i, j));
    }
    out.push_back(std::move(p));
  }
  return RealPolyMap(l.cols(), std::move(out));
}

RationalVector evaluate(const RealPolyMap& phi, std::span<const Rational> x) {
  RationalVector out;
  for (const auto& c : phi.components()) out.push_back(evaluate(c, x));
  return out;
}

GaussianVector evaluate(const ComplexPolyMap& phi, std::span<const GaussianRational> z) {
  GaussianVector out;
  for (const auto& c : phi.components()) out.push_back(evaluate_at(c, z));
  return out;
}

namespace {

template <class Map>
std::string render_components(const Map& phi) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k) {
    if (k != 0) os << ", ";
    os << render(phi[k]);
  }
  os << ")";
  return os.str();
}

template <class Map>
std::string source_text(const Map& phi, const std::string& name, char kind) {
  std::ostringstream os;
  os << "map " << name << ": " << kind << "^" << phi.domain_dim() << " -> " << kind << "^"
     << phi.codomain_dim() << " {\n";
  for (std::size_t k = 0; k < phi.codomain_dim(); ++k)
    os << "  " << name << k + 1 << " = " << render(phi[k]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render(const RealPolyMap& phi) { return render_components(phi); }
std::string render(const ComplexPolyMap& phi) { return render_components(phi); }

std::string to_source(const RealPolyMap& phi, const std::string& name) { return source_text(phi, name, 'R'); }
std::string to_source(const ComplexPolyMap& phi, const std::string& name) {
  return source_text(phi, name, 'C');
}

}  // namespace hmlift
