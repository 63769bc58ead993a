#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hmlift/error.hpp"
#include "hmlift/gaussian.hpp"
#include "hmlift/rational.hpp"

namespace hmlift {

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

// Graded-lex, descending: higher total degree first, ties broken by
// lexicographic order with x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Real: n real variables x1..xn.
// Complex: n = 2m variables, indices 0..m-1 are z1..zm and m..2m-1 are the
// formal conjugates zb1..zbm, so Wirtinger partials are total functions.
enum class Layout { Real, Complex };

enum class VariableKind { Real, Holomorphic, Antiholomorphic };

template <class R>
class Polynomial {
 public:
  using Coeff = R;
  using TermMap = std::map<Exponent, R, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars, Layout layout = Layout::Real)
      : num_vars_(num_vars), layout_(layout) {
    if (layout == Layout::Complex && num_vars % 2 != 0)
      throw Error(ErrorKind::Dimension, "complex layout needs an even variable count");
  }

  static Polynomial constant(std::size_t num_vars, Layout layout, const R& c) {
    Polynomial p(num_vars, layout);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t num_vars, Layout layout, std::size_t index) {
    if (index >= num_vars) throw Error(ErrorKind::Dimension, "variable index out of range");
    Polynomial p(num_vars, layout);
    Exponent e(num_vars, 0);
    e[index] = 1;
    p.add_term(std::move(e), R(1));
    return p;
  }

  static Polynomial monomial(std::size_t num_vars, Layout layout, Exponent e, const R& c) {
    if (e.size() != num_vars) throw Error(ErrorKind::Dimension, "exponent length mismatch");
    Polynomial p(num_vars, layout);
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  Layout layout() const noexcept { return layout_; }
  // Number of complex coordinates for Complex layout.
  std::size_t complex_dim() const noexcept { return num_vars_ / 2; }
  VariableKind kind(std::size_t index) const {
    if (layout_ == Layout::Real) return VariableKind::Real;
    return index < complex_dim() ? VariableKind::Holomorphic : VariableKind::Antiholomorphic;
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  // -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
  }

  R coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }
  R constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

  void add_term(Exponent e, const R& c) {
    if (e.size() != num_vars_) throw Error(ErrorKind::Dimension, "exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool same_ring(const Polynomial& o) const noexcept {
    return num_vars_ == o.num_vars_ && layout_ == o.layout_;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.num_vars_, a.layout_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.num_vars_, a.layout_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const R& s, const Polynomial& p) {
    Polynomial r(p.num_vars_, p.layout_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(num_vars_, layout_, R(1));
    Polynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.same_ring(b) && a.terms_ == b.terms_;
  }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(o))
      throw Error(ErrorKind::Dimension,
                  "polynomial ring mismatch (" + std::to_string(num_vars_) + " vs " +
                      std::to_string(o.num_vars_) + " variables)");
  }

 private:
  std::size_t num_vars_ = 0;
  Layout layout_ = Layout::Real;
  TermMap terms_;
};

using RealPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<GaussianRational>;

// ---- differentiation -------------------------------------------------------

// Formal partial derivative; for Complex layout index j < m is d/dz_{j+1} and
// index m + j is d/dzb_{j+1}.
template <class R>
Polynomial<R> partial(const Polynomial<R>& p, std::size_t var) {
  if (var >= p.num_vars()) throw Error(ErrorKind::Dimension, "partial: variable index out of range");
  Polynomial<R> r(p.num_vars(), p.layout());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(std::move(d), R(static_cast<long>(e[var])) * c);
  }
  return r;
}

// ---- evaluation -----------------------------------------------------------

template <class R, class S>
S evaluate_unchecked(const Polynomial<R>& p, std::span<const S> point) {
  S acc(0);
  std::vector<std::vector<S>> powers(point.size());
  for (const auto& [e, c] : p.terms()) {
    S term = S(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(S(1));
      while (cache.size() <= e[k]) cache.push_back(cache.back() * point[k]);
      term *= cache[e[k]];
    }
    acc += term;
  }
  return acc;
}

// Exact evaluation. For Complex layout the point lists values for all 2m
// variables and each (z_k, zb_k) pair must be conjugate-consistent.
template <class R, class S>
S evaluate(const Polynomial<R>& p, std::span<const S> point) {
  if (point.size() != p.num_vars()) throw Error(ErrorKind::Dimension, "evaluate: arity mismatch");
  if (p.layout() == Layout::Complex) {
    const std::size_t m = p.complex_dim();
    for (std::size_t k = 0; k < m; ++k)
      if (!(conj(point[k]) == point[m + k]))
        throw Error(ErrorKind::Consistency,
                    "evaluate: value for zb" + std::to_string(k + 1) + " is not conj(z" +
                        std::to_string(k + 1) + ")");
  }
  return evaluate_unchecked(p, point);
}

template <class R, class S>
S evaluate(const Polynomial<R>& p, const std::vector<S>& point) {
  return evaluate(p, std::span<const S>(point));
}

// Evaluates a Complex-layout polynomial given only z1..zm; conjugates are filled in.
GaussianRational evaluate_at(const ComplexPoly& p, std::span<const GaussianRational> z);

// ---- substitution --------------------------------------------------------

// Replaces variable k by images[k]; all images share one ring, which becomes
// the result's ring.
template <class R>
Polynomial<R> compose(const Polynomial<R>& p, const std::vector<Polynomial<R>>& images) {
  if (images.size() != p.num_vars()) throw Error(ErrorKind::Dimension, "compose: wrong image count");
  if (images.empty()) return p;
  const auto& ring = images.front();
  for (const auto& q : images) ring.check_ring(q);
  Polynomial<R> result(ring.num_vars(), ring.layout());
  std::vector<std::vector<Polynomial<R>>> powers(images.size());
  for (const auto& [e, c] : p.terms()) {
    Polynomial<R> term = Polynomial<R>::constant(ring.num_vars(), ring.layout(), c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(Polynomial<R>::constant(ring.num_vars(), ring.layout(), R(1)));
      while (cache.size() <= e[k]) cache.push_back(cache.back() * images[k]);
      term = term * cache[e[k]];
    }
    result += term;
  }
  return result;
}

template <class R>
Polynomial<R> substitute(const Polynomial<R>& p, std::size_t var, const Polynomial<R>& q) {
  if (var >= p.num_vars()) throw Error(ErrorKind::Dimension, "substitute: variable index out of range");
  p.check_ring(q);
  std::vector<Polynomial<R>> images;
  images.reserve(p.num_vars());
  for (std::size_t k = 0; k < p.num_vars(); ++k)
    images.push_back(k == var ? q : Polynomial<R>::variable(p.num_vars(), p.layout(), k));
  return compose(p, images);
}

// Re-indexes variables: variable k of p becomes variable index_map[k] of a
// ring with num_vars variables and the given layout.
template <class R>
Polynomial<R> embed(const Polynomial<R>& p, std::size_t num_vars, Layout layout,
                    std::span<const std::size_t> index_map) {
  if (index_map.size() != p.num_vars()) throw Error(ErrorKind::Dimension, "embed: bad index map");
  Polynomial<R> r(num_vars, layout);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(num_vars, 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (index_map[k] >= num_vars) throw Error(ErrorKind::Dimension, "embed: target index out of range");
      f[index_map[k]] += e[k];
    }
    r.add_term(std::move(f), c);
  }
  return r;
}

// ---- coefficient rings ---------------------------------------------------

ComplexPoly promote(const RealPoly& p);
RealPoly real_part(const ComplexPoly& p);
RealPoly imag_part(const ComplexPoly& p);
bool has_real_coefficients(const ComplexPoly& p);

// Complex layout: swaps z_k <-> zb_k and conjugates coefficients. Real layout:
// conjugates coefficients only.
ComplexPoly conjugate(const ComplexPoly& p);

// ---- structure queries ---------------------------------------------------

template <class R>
bool is_homogeneous(const Polynomial<R>& p, unsigned degree) {
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) != degree) return false;
  return true;
}

// Total degree of e restricted to variables [begin, end).
unsigned block_degree(const Exponent& e, std::size_t begin, std::size_t end);

// ---- rendering -----------------------------------------------------------

// Default variable names: x1..xn (Real) or z1..zm, zb1..zbm (Complex).
std::vector<std::string> default_variable_names(std::size_t num_vars, Layout layout);

std::string render_monomial(const Exponent& e, std::span<const std::string> names);

// Canonical text: graded-lex order, explicit '*' and '^'.
template <class R>
std::string render(const Polynomial<R>& p, std::span<const std::string> names);

template <class R>
std::string render(const Polynomial<R>& p) {
  const auto names = default_variable_names(p.num_vars(), p.layout());
  return render(p, std::span<const std::string>(names));
}

extern template std::string render(const Polynomial<Rational>&, std::span<const std::string>);
extern template std::string render(const Polynomial<GaussianRational>&, std::span<const std::string>);

}  // namespace hmlift
