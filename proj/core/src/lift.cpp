#include "hmlift/lift.hpp"

#include <numeric>
#include <sstream>

#include "hmlift/calculus.hpp"
#include "hmlift/error.hpp"

namespace hmlift {

namespace {

std::vector<std::size_t> iota_map(std::size_t count, std::size_t offset) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), offset);
  return v;
}

}  // namespace

RealPolyMap complete_lift_real(const RealPolyMap& phi) {
  const std::size_t m = phi.domain_dim();
  const auto base = iota_map(m, 0);
  std::vector<RealPoly> out;
  out.reserve(phi.codomain_dim());
  for (const auto& c : phi.components()) {
    RealPoly acc(2 * m, Layout::Real);
    for (std::size_t j = 0; j < m; ++j) {
      const RealPoly d = embed(partial(c, j), 2 * m, Layout::Real, std::span<const std::size_t>(base));
      if (d.is_zero()) continue;
      acc += d * RealPoly::variable(2 * m, Layout::Real, m + j);
    }
    out.push_back(std::move(acc));
  }
  return RealPolyMap(2 * m, std::move(out));
}

ComplexPolyMap complete_lift_complex(const ComplexPolyMap& phi) {
  const std::size_t m = phi.domain_dim();
  const std::size_t nv = 4 * m;
  std::vector<std::size_t> index(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    index[k] = k;              // z_k
    index[m + k] = 2 * m + k;  // zb_k
  }
  std::vector<ComplexPoly> out;
  out.reserve(phi.codomain_dim());
  for (const auto& c : phi.components()) {
    ComplexPoly acc(nv, Layout::Complex);
    for (std::size_t k = 0; k < m; ++k) {
      const ComplexPoly d = embed(partial(c, k), nv, Layout::Complex, std::span<const std::size_t>(index));
      if (d.is_zero()) continue;
      acc += d * ComplexPoly::variable(nv, Layout::Complex, m + k);
    }
    out.push_back(std::move(acc));
  }
  return ComplexPolyMap(2 * m, std::move(out));
}

RealPolyMap quadratic_complete_lift(const QuadraticMap& q) {
  const std::size_t m = q.domain_dim();
  std::vector<RealPoly> out;
  for (const auto& a : q.matrices()) {
    RealPoly p(2 * m, Layout::Real);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (a(j, k).is_zero()) continue;
        Exponent e(2 * m, 0);
        e[j] = 1;
        e[m + k] = 1;
        p.add_term(std::move(e), Rational(2) * a(j, k));
      }
    out.push_back(std::move(p));
  }
  return RealPolyMap(2 * m, std::move(out));
}

bool block_jacobian_check(const QuadraticMap& q) {
  for (const auto& a : q.matrices())
    if (!a.is_symmetric()) throw Error(ErrorKind::InvariantViolation, "block_jacobian_check needs symmetric forms");
  const std::size_t m = q.domain_dim();
  const RealPolyMatrix lifted = jacobian(quadratic_complete_lift(q));
  const RealPolyMatrix base = jacobian(from_quadratic(q));
  const auto at_x = iota_map(m, 0);
  const auto at_y = iota_map(m, m);
  for (std::size_t i = 0; i < q.codomain_dim(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const RealPoly left = embed(base(i, j), 2 * m, Layout::Real, std::span<const std::size_t>(at_y));
      const RealPoly right = embed(base(i, j), 2 * m, Layout::Real, std::span<const std::size_t>(at_x));
      if (!(lifted(i, j) == left) || !(lifted(i, m + j) == right)) return false;
    }
  return true;
}

std::string Obstruction::describe() const {
  std::ostringstream os;
  if (stage == Stage::NotPartialLinear) {
    const auto names = default_variable_names(monomial.size(), Layout::Real);
    os << "not partial-linear: component " << component + 1 << " has monomial "
       << render_monomial(monomial, names) << " whose fiber degree is not 1";
    return os.str();
  }
  os << "mixed-partial obstruction on component " << component + 1 << ": dM" << component + 1
     << "," << first_index + 1 << "/dx" << second_index + 1 << " = " << render(first_value) << " != dM"
     << component + 1 << "," << second_index + 1 << "/dx" << first_index + 1 << " = "
     << render(second_value);
  return os.str();
}

AntiLiftResult anti_lift(const RealPolyMap& lifted, LiftSplit split) {
  const std::size_t m = split.split_index;
  if (lifted.domain_dim() != split.total_dim())
    throw Error(ErrorKind::Dimension, "anti_lift: map domain is not twice the split index");

  // Stage (a): Phi^i = sum_j M_ij(x) y_j.
  std::vector<std::vector<RealPoly>> coeff(lifted.codomain_dim(), std::vector<RealPoly>(m, RealPoly(m, Layout::Real)));
  for (std::size_t i = 0; i < lifted.codomain_dim(); ++i) {
    for (const auto& [e, c] : lifted[i].terms()) {
      if (block_degree(e, m, 2 * m) != 1) {
        Obstruction ob;
        ob.stage = Obstruction::Stage::NotPartialLinear;
        ob.component = i;
        ob.monomial = e;
        return ob;
      }
      std::size_t j = m;
      while (e[j] == 0) ++j;
      coeff[i][j - m].add_term(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m)), c);
    }
  }

  // Stage (b): integrability of each row of M.
  for (std::size_t i = 0; i < coeff.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        RealPoly a = partial(coeff[i][j], k);
        RealPoly b = partial(coeff[i][k], j);
        if (!(a == b)) {
          Obstruction ob;
          ob.stage = Obstruction::Stage::MixedPartial;
          ob.component = i;
          ob.first_index = j;
          ob.second_index = k;
          ob.first_value = std::move(a);
          ob.second_value = std::move(b);
          return ob;
        }
      }

  // Stage (c): radial integration, monomial by monomial.
  std::vector<RealPoly> comps;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    RealPoly phi(m, Layout::Real);
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [e, c] : coeff[i][j].terms()) {
        Exponent f = e;
        ++f[j];
        phi.add_term(std::move(f), c / Rational(static_cast<long>(total_degree(e) + 1)));
      }
    comps.push_back(std::move(phi));
  }
  RealPolyMap recovered(m, std::move(comps));
  if (!(complete_lift_real(recovered) == lifted))
    throw Error(ErrorKind::InternalConsistency, "anti_lift reconstruction does not lift back to the input");
  return recovered;
}

}  // namespace hmlift
