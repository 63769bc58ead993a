#include "hmlift/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace hmlift {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned block_degree(const Exponent& e, std::size_t begin, std::size_t end) {
  unsigned d = 0;
  for (std::size_t k = begin; k < end && k < e.size(); ++k) d += e[k];
  return d;
}

GaussianRational evaluate_at(const ComplexPoly& p, std::span<const GaussianRational> z) {
  if (p.layout() != Layout::Complex) throw Error(ErrorKind::Dimension, "evaluate_at needs a complex layout");
  if (z.size() != p.complex_dim()) throw Error(ErrorKind::Dimension, "evaluate_at: arity mismatch");
  std::vector<GaussianRational> full(z.begin(), z.end());
  for (const auto& v : z) full.push_back(v.conj());
  return evaluate_unchecked(p, std::span<const GaussianRational>(full));
}

ComplexPoly promote(const RealPoly& p) {
  ComplexPoly r(p.num_vars(), p.layout());
  for (const auto& [e, c] : p.terms()) r.add_term(e, GaussianRational(c));
  return r;
}

RealPoly real_part(const ComplexPoly& p) {
  RealPoly r(p.num_vars(), p.layout());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.real());
  return r;
}

RealPoly imag_part(const ComplexPoly& p) {
  RealPoly r(p.num_vars(), p.layout());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.imag());
  return r;
}

bool has_real_coefficients(const ComplexPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second.is_real(); });
}

ComplexPoly conjugate(const ComplexPoly& p) {
  ComplexPoly r(p.num_vars(), p.layout());
  if (p.layout() == Layout::Real) {
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
    return r;
  }
  const std::size_t m = p.complex_dim();
  for (const auto& [e, c] : p.terms()) {
    Exponent f(e.size());
    for (std::size_t k = 0; k < m; ++k) {
      f[k] = e[m + k];
      f[m + k] = e[k];
    }
    r.add_term(std::move(f), c.conj());
  }
  return r;
}

std::vector<std::string> default_variable_names(std::size_t num_vars, Layout layout) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  if (layout == Layout::Real) {
    for (std::size_t k = 0; k < num_vars; ++k) names.push_back("x" + std::to_string(k + 1));
  } else {
    const std::size_t m = num_vars / 2;
    for (std::size_t k = 0; k < m; ++k) names.push_back("z" + std::to_string(k + 1));
    for (std::size_t k = 0; k < m; ++k) names.push_back("zb" + std::to_string(k + 1));
  }
  return names;
}

std::string render_monomial(const Exponent& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[k];
    if (e[k] > 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

namespace {

// Splits a coefficient into (negative?, magnitude text, needs parentheses?).
struct CoeffText {
  bool negative = false;
  std::string text;  // empty means unit magnitude
};

CoeffText coeff_text(const Rational& c) {
  CoeffText t;
  t.negative = c.sign() < 0;
  const Rational a = c.abs();
  if (!a.is_one()) t.text = a.to_string();
  return t;
}

CoeffText coeff_text(const GaussianRational& c) {
  if (c.is_real()) return coeff_text(c.real());
  CoeffText t;
  if (c.real().is_zero()) {
    t.negative = c.imag().sign() < 0;
    const Rational a = c.imag().abs();
    t.text = a.is_one() ? "i" : a.to_string() + "*i";
    return t;
  }
  t.text = "(" + c.to_string() + ")";
  return t;
}

}  // namespace

template <class R>
std::string render(const Polynomial<R>& p, std::span<const std::string> names) {
  if (names.size() < p.num_vars()) throw Error(ErrorKind::Dimension, "render: too few variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const CoeffText ct = coeff_text(c);
    const std::string mono = render_monomial(e, names);
    std::string body;
    if (mono.empty()) {
      body = ct.text.empty() ? "1" : ct.text;
    } else {
      body = ct.text.empty() ? mono : ct.text + "*" + mono;
    }
    if (first) {
      out += ct.negative ? "-" + body : body;
    } else {
      out += ct.negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

template std::string render(const Polynomial<Rational>&, std::span<const std::string>);
template std::string render(const Polynomial<GaussianRational>&, std::span<const std::string>);

}  // namespace hmlift
