#pragma once

#include <cstddef>
#include <vector>

#include "hmlift/maps.hpp"
#include "hmlift/matrix.hpp"
#include "hmlift/polynomial.hpp"

namespace hmlift {

// Matrix of polynomials over one common ring.
template <class R>
class PolyMatrix {
 public:
  using Poly = Polynomial<R>;

  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars, Layout layout)
      : rows_(rows), cols_(cols), num_vars_(num_vars), layout_(layout),
        entries_(rows * cols, Poly(num_vars, layout)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  Layout layout() const noexcept { return layout_; }

  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(cols_, rows_, num_vars_, layout_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Dimension, "polynomial matrix product shape mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.num_vars_, a.layout_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }

  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  template <class S>
  Matrix<S> evaluate_at(std::span<const S> point) const {
    Matrix<S> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = hmlift::evaluate((*this)(i, j), point);
    return m;
  }

 private:
  void check_shape(const PolyMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::Dimension, "polynomial matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t num_vars_;
  Layout layout_;
  std::vector<Poly> entries_;
};

using RealPolyMatrix = PolyMatrix<Rational>;
using ComplexPolyMatrix = PolyMatrix<GaussianRational>;

// n x m, entry (i, j) = d phi^i / d x_j.
RealPolyMatrix jacobian(const RealPolyMap& phi);

// m x m, entry (i, j) = d^2 p / dx_i dx_j.
template <class R>
PolyMatrix<R> hessian(const Polynomial<R>& p) {
  const std::size_t m = p.num_vars();
  PolyMatrix<R> h(m, m, m, p.layout());
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial<R> di = partial(p, i);
    for (std::size_t j = i; j < m; ++j) {
      h(i, j) = partial(di, j);
      if (j != i) h(j, i) = h(i, j);
    }
  }
  return h;
}

template <class R>
Polynomial<R> laplacian(const Polynomial<R>& p) {
  Polynomial<R> acc(p.num_vars(), p.layout());
  for (std::size_t i = 0; i < p.num_vars(); ++i) acc += partial(partial(p, i), i);
  return acc;
}

std::vector<RealPoly> laplacian_map(const RealPolyMap& phi);

// n x m matrices of d phi^i / d z_j and d phi^i / d zb_j.
ComplexPolyMatrix wirtinger_jacobian(const ComplexPolyMap& phi);
ComplexPolyMatrix antiholomorphic_jacobian(const ComplexPolyMap& phi);

// For a real map with components (u, v) read as u + i v: the C^{m}-valued
// vector (du/dx_j + i dv/dx_j)_j, in the map's own coordinate order.
std::vector<ComplexPoly> complex_gradient(const RealPolyMap& phi);

}  // namespace hmlift
