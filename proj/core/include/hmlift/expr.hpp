#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hmlift/gaussian.hpp"
#include "hmlift/polynomial.hpp"

namespace hmlift {

// Immutable expression DAG for closed-form maps. Construction through the
// factory functions folds constants and drops additive/multiplicative
// identities; nothing else is simplified.
class Expr {
 public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Sqrt, Conj, Re, Im, Neg };

  Expr() : Expr(constant(GaussianRational(0))) {}

  static Expr constant(const GaussianRational& value);
  static Expr variable(std::size_t index);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  static Expr pow(const Expr& base, long exponent);
  static Expr sqrt(const Expr& arg);
  static Expr conj(const Expr& arg);
  static Expr re(const Expr& arg);
  static Expr im(const Expr& arg);

  Op op() const noexcept;
  const GaussianRational& value() const;  // Const only
  std::size_t index() const;              // Var only
  long exponent() const;                  // Pow only
  const Expr& lhs() const;                // unary ops and binary left operand
  const Expr& rhs() const;                // binary right operand

  bool is_constant() const noexcept { return op() == Op::Const; }
  bool is_zero() const;
  bool is_one() const;

  // Largest variable index + 1 (0 for closed expressions).
  std::size_t arity() const;
  std::size_t node_count() const;

  // Source text accepted by the map parser. When conj_names is non-empty,
  // Conj(Var k) renders as conj_names[k].
  std::string to_string(std::span<const std::string> names,
                        std::span<const std::string> conj_names = {}) const;

  // Structural identity of the underlying node (for memoization).
  const void* id() const noexcept { return node_.get(); }

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Node node);

  std::shared_ptr<const Node> node_;
};

// Partial derivative with respect to a real variable.
Expr derivative(const Expr& e, std::size_t var);

// Double-precision evaluation at a real point. Throws Domain for sqrt of a
// negative real and for non-finite results, Singular for division by zero.
std::complex<double> eval_float(const Expr& e, std::span<const double> point);

// Exact lowering. Layout::Real: variables x1..x_dim. Layout::Complex:
// variables z1..z_dim and conj() maps onto the zb block.
ComplexPoly lower_to_poly(const Expr& e, std::size_t domain_dim, Layout layout);

// Non-polynomial real map given by closed-form components. Each guard must
// evaluate to a strictly positive real at admissible points.
struct SmoothMap {
  std::string name;
  std::size_t domain_dim = 0;
  std::vector<Expr> components;
  std::vector<Expr> guards;

  std::size_t codomain_dim() const noexcept { return components.size(); }
  void validate() const;
};

// Guard-checked evaluation of every component (real parts). Throws Singular
// when a guard is not positive.
std::vector<double> eval_map(const SmoothMap& map, std::span<const double> point);

// Smallest guard value at the point (+infinity when there are no guards).
double min_guard(const SmoothMap& map, std::span<const double> point);

}  // namespace hmlift
