#include "hmlift/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "hmlift/error.hpp"

namespace hmlift {

struct Expr::Node {
  Op op = Op::Const;
  GaussianRational value;
  std::size_t index = 0;
  long exponent = 0;
  std::vector<Expr> kids;
};

Expr Expr::make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

Expr Expr::constant(const GaussianRational& value) {
  Node n;
  n.op = Op::Const;
  n.value = value;
  return make(std::move(n));
}

Expr Expr::variable(std::size_t index) {
  Node n;
  n.op = Op::Var;
  n.index = index;
  return make(std::move(n));
}

namespace {

Expr::Node binary(Expr::Op op, const Expr& a, const Expr& b) {
  Expr::Node n;
  n.op = op;
  n.kids = {a, b};
  return n;
}

Expr::Node unary(Expr::Op op, const Expr& a) {
  Expr::Node n;
  n.op = op;
  n.kids = {a};
  return n;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Expr::make(binary(Expr::Op::Add, a, b));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() - b.value());
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return Expr::make(binary(Expr::Op::Sub, a, b));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
  if (a.is_zero() || b.is_zero()) return Expr::constant(GaussianRational(0));
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Expr::make(binary(Expr::Op::Mul, a, b));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "expression divided by constant zero");
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() / b.value());
  if (a.is_zero()) return a;
  if (b.is_one()) return a;
  return Expr::make(binary(Expr::Op::Div, a, b));
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.value());
  if (a.op() == Expr::Op::Neg) return a.lhs();
  return Expr::make(unary(Expr::Op::Neg, a));
}

Expr Expr::pow(const Expr& base, long exponent) {
  if (exponent == 0) return constant(GaussianRational(1));
  if (exponent == 1) return base;
  if (base.is_constant()) {
    const auto magnitude = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    const GaussianRational p = hmlift::pow(base.value(), magnitude);
    return constant(exponent < 0 ? p.inverse() : p);
  }
  Node n = unary(Op::Pow, base);
  n.exponent = exponent;
  return make(std::move(n));
}

Expr Expr::sqrt(const Expr& arg) {
  if (arg.is_zero() || arg.is_one()) return arg;
  return make(unary(Op::Sqrt, arg));
}

Expr Expr::conj(const Expr& arg) {
  if (arg.is_constant()) return constant(arg.value().conj());
  if (arg.op() == Op::Conj) return arg.lhs();
  return make(unary(Op::Conj, arg));
}

Expr Expr::re(const Expr& arg) {
  if (arg.is_constant()) return constant(GaussianRational(arg.value().real()));
  return make(unary(Op::Re, arg));
}

Expr Expr::im(const Expr& arg) {
  if (arg.is_constant()) return constant(GaussianRational(arg.value().imag()));
  return make(unary(Op::Im, arg));
}

Expr::Op Expr::op() const noexcept { return node_->op; }

const GaussianRational& Expr::value() const {
  if (node_->op != Op::Const) throw Error(ErrorKind::InvariantViolation, "value() on a non-constant node");
  return node_->value;
}

std::size_t Expr::index() const {
  if (node_->op != Op::Var) throw Error(ErrorKind::InvariantViolation, "index() on a non-variable node");
  return node_->index;
}

long Expr::exponent() const { return node_->exponent; }
const Expr& Expr::lhs() const { return node_->kids.at(0); }
const Expr& Expr::rhs() const { return node_->kids.at(1); }

bool Expr::is_zero() const { return node_->op == Op::Const && node_->value.is_zero(); }
bool Expr::is_one() const { return node_->op == Op::Const && node_->value.is_one(); }

std::size_t Expr::arity() const {
  std::size_t a = 0;
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> stack{this};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    if (e->op() == Op::Var) a = std::max(a, e->index() + 1);
    for (const auto& k : e->node_->kids) stack.push_back(&k);
  }
  return a;
}

std::size_t Expr::node_count() const {
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> stack{this};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    for (const auto& k : e->node_->kids) stack.push_back(&k);
  }
  return seen.size();
}

// ---- rendering -------------------------------------------------------------

namespace {

constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

struct Rendered {
  std::string text;
  int prec;
};

Rendered render_constant(const GaussianRational& c) {
  const Rational& re = c.real();
  const Rational& im = c.imag();
  if (im.is_zero()) {
    if (re.sign() < 0) return {re.to_string(), re.is_integer() ? kPrecUnary : kPrecProduct};
    return {re.to_string(), re.is_integer() ? kPrecAtom : kPrecProduct};
  }
  if (re.is_zero()) {
    if (im == Rational(1)) return {"i", kPrecAtom};
    if (im == Rational(-1)) return {"-i", kPrecUnary};
    return {im.to_string() + "*i", kPrecProduct};
  }
  return {c.to_string(), kPrecSum};
}

class Renderer {
 public:
  Renderer(std::span<const std::string> names, std::span<const std::string> conj_names)
      : names_(names), conj_names_(conj_names) {}

  Rendered render(const Expr& e) const {
    using Op = Expr::Op;
    switch (e.op()) {
      case Op::Const: return render_constant(e.value());
      case Op::Var: return {name(e.index()), kPrecAtom};
      case Op::Add: return infix(e, " + ", kPrecSum);
      case Op::Sub: return infix(e, " - ", kPrecSum);
      case Op::Mul: return infix(e, "*", kPrecProduct);
      case Op::Div: return infix(e, "/", kPrecProduct);
      case Op::Neg: return {"-" + wrap(render(e.lhs()), kPrecUnary, false), kPrecUnary};
      case Op::Pow: {
        const std::string exp = e.exponent() < 0 ? "(" + std::to_string(e.exponent()) + ")"
                                                 : std::to_string(e.exponent());
        return {wrap(render(e.lhs()), kPrecAtom, false) + "^" + exp, kPrecPower};
      }
      case Op::Sqrt: return call("sqrt", e);
      case Op::Conj:
        if (!conj_names_.empty() && e.lhs().op() == Op::Var && e.lhs().index() < conj_names_.size())
          return {conj_names_[e.lhs().index()], kPrecAtom};
        return call("conj", e);
      case Op::Re: return call("re", e);
      case Op::Im: return call("im", e);
    }
    return {"?", kPrecAtom};
  }

 private:
  std::string name(std::size_t k) const {
    if (k < names_.size()) return names_[k];
    return "x" + std::to_string(k + 1);
  }

  static std::string wrap(const Rendered& r, int min_prec, bool strict) {
    const bool ok = strict ? r.prec > min_prec : r.prec >= min_prec;
    return ok ? r.text : "(" + r.text + ")";
  }

  Rendered infix(const Expr& e, const char* op, int prec) const {
    return {wrap(render(e.lhs()), prec, false) + op + wrap(render(e.rhs()), prec, true), prec};
  }

  Rendered call(const char* fn, const Expr& e) const {
    return {std::string(fn) + "(" + render(e.lhs()).text + ")", kPrecAtom};
  }

  std::span<const std::string> names_;
  std::span<const std::string> conj_names_;
};

}  // namespace

std::string Expr::to_string(std::span<const std::string> names,
                            std::span<const std::string> conj_names) const {
  return Renderer(names, conj_names).render(*this).text;
}

// ---- differentiation -------------------------------------------------------

namespace {

class Differentiator {
 public:
  explicit Differentiator(std::size_t var) : var_(var) {}

  Expr d(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr r = compute(e);
    memo_.emplace(e.id(), r);
    return r;
  }

 private:
  Expr compute(const Expr& e) {
    using Op = Expr::Op;
    const auto zero = [] { return Expr::constant(GaussianRational(0)); };
    switch (e.op()) {
      case Op::Const: return zero();
      case Op::Var: return e.index() == var_ ? Expr::constant(GaussianRational(1)) : zero();
      case Op::Add: return d(e.lhs()) + d(e.rhs());
      case Op::Sub: return d(e.lhs()) - d(e.rhs());
      case Op::Mul: return d(e.lhs()) * e.rhs() + e.lhs() * d(e.rhs());
      case Op::Div: {
        const Expr& u = e.lhs();
        const Expr& v = e.rhs();
        return (v * d(u) - u * d(v)) / Expr::pow(v, 2);
      }
      case Op::Pow: {
        const long n = e.exponent();
        return Expr::constant(GaussianRational(n)) * Expr::pow(e.lhs(), n - 1) * d(e.lhs());
      }
      case Op::Sqrt: return d(e.lhs()) / (Expr::constant(GaussianRational(2)) * e);
      case Op::Conj: return Expr::conj(d(e.lhs()));
      case Op::Re: return Expr::re(d(e.lhs()));
      case Op::Im: return Expr::im(d(e.lhs()));
      case Op::Neg: return -d(e.lhs());
    }
    return zero();
  }

  std::size_t var_;
  std::unordered_map<const void*, Expr> memo_;
};

}  // namespace

Expr derivative(const Expr& e, std::size_t var) { return Differentiator(var).d(e); }

// ---- floating evaluation -------------------------------------------------

namespace {

class FloatEvaluator {
 public:
  explicit FloatEvaluator(std::span<const double> point) : point_(point) {}

  std::complex<double> eval(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    const std::complex<double> r = compute(e);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorKind::Domain, "non-finite value during evaluation");
    memo_.emplace(e.id(), r);
    return r;
  }

 private:
  std::complex<double> compute(const Expr& e) {
    using Op = Expr::Op;
    switch (e.op()) {
      case Op::Const: return e.value().to_complex();
      case Op::Var:
        if (e.index() >= point_.size()) throw Error(ErrorKind::Dimension, "eval_float: point too short");
        return point_[e.index()];
      case Op::Add: return eval(e.lhs()) + eval(e.rhs());
      case Op::Sub: return eval(e.lhs()) - eval(e.rhs());
      case Op::Mul: return eval(e.lhs()) * eval(e.rhs());
      case Op::Div: {
        const auto den = eval(e.rhs());
        if (den == std::complex<double>(0.0, 0.0))
          throw Error(ErrorKind::Singular, "division by zero during evaluation");
        return eval(e.lhs()) / den;
      }
      case Op::Pow: {
        const auto base = eval(e.lhs());
        if (e.exponent() < 0 && base == std::complex<double>(0.0, 0.0))
          throw Error(ErrorKind::Singular, "negative power of zero");
        std::complex<double> r(1.0, 0.0);
        const long n = e.exponent() < 0 ? -e.exponent() : e.exponent();
        for (long k = 0; k < n; ++k) r *= base;
        return e.exponent() < 0 ? 1.0 / r : r;
      }
      case Op::Sqrt: {
        const auto a = eval(e.lhs());
        if (a.imag() == 0.0) {
          if (a.real() < 0.0) throw Error(ErrorKind::Domain, "sqrt of a negative real");
          return std::sqrt(a.real());
        }
        return std::sqrt(a);
      }
      case Op::Conj: return std::conj(eval(e.lhs()));
      case Op::Re: return eval(e.lhs()).real();
      case Op::Im: return eval(e.lhs()).imag();
      case Op::Neg: return -eval(e.lhs());
    }
    return 0.0;
  }

  std::span<const double> point_;
  std::unordered_map<const void*, std::complex<double>> memo_;
};

}  // namespace

std::complex<double> eval_float(const Expr& e, std::span<const double> point) {
  return FloatEvaluator(point).eval(e);
}

// ---- exact lowering --------------------------------------------------------

namespace {

const char* op_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::Sqrt: return "sqrt";
    case Expr::Op::Div: return "division";
    case Expr::Op::Pow: return "negative power";
    default: return "node";
  }
}

class Lowerer {
 public:
  Lowerer(std::size_t dim, Layout layout)
      : dim_(dim), layout_(layout), nvars_(layout == Layout::Complex ? 2 * dim : dim) {}

  ComplexPoly lower(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    ComplexPoly r = compute(e);
    memo_.emplace(e.id(), r);
    return r;
  }

 private:
  ComplexPoly constant(const GaussianRational& c) const { return ComplexPoly::constant(nvars_, layout_, c); }

  [[noreturn]] static void fail(const Expr& e) {
    throw Error(ErrorKind::NotPolynomial, std::string("expression is not polynomial at ") + op_name(e.op()));
  }

  ComplexPoly compute(const Expr& e) {
    using Op = Expr::Op;
    switch (e.op()) {
      case Op::Const: return constant(e.value());
      case Op::Var:
        if (e.index() >= dim_) throw Error(ErrorKind::Dimension, "variable index exceeds map arity");
        return ComplexPoly::variable(nvars_, layout_, e.index());
      case Op::Add: return lower(e.lhs()) + lower(e.rhs());
      case Op::Sub: return lower(e.lhs()) - lower(e.rhs());
      case Op::Mul: return lower(e.lhs()) * lower(e.rhs());
      case Op::Div:
        if (!e.rhs().is_constant()) fail(e);
        return e.rhs().value().inverse() * lower(e.lhs());
      case Op::Pow:
        if (e.exponent() < 0) fail(e);
        return lower(e.lhs()).pow(static_cast<unsigned>(e.exponent()));
      case Op::Sqrt: fail(e);
      case Op::Conj: return conjugate(lower(e.lhs()));
      case Op::Re: {
        const ComplexPoly p = lower(e.lhs());
        return GaussianRational(Rational(1, 2)) * (p + conjugate(p));
      }
      case Op::Im: {
        const ComplexPoly p = lower(e.lhs());
        return GaussianRational(Rational(0), Rational(-1, 2)) * (p - conjugate(p));
      }
      case Op::Neg: return -lower(e.lhs());
    }
    fail(e);
  }

  std::size_t dim_;
  Layout layout_;
  std::size_t nvars_;
  std::unordered_map<const void*, ComplexPoly> memo_;
};

}  // namespace

ComplexPoly lower_to_poly(const Expr& e, std::size_t domain_dim, Layout layout) {
  return Lowerer(domain_dim, layout).lower(e);
}

// ---- smooth maps -----------------------------------------------------------

void SmoothMap::validate() const {
  for (const auto& c : components)
    if (c.arity() > domain_dim) throw Error(ErrorKind::Dimension, "component references a variable beyond the domain");
  for (const auto& g : guards)
    if (g.arity() > domain_dim) throw Error(ErrorKind::Dimension, "guard references a variable beyond the domain");
}

double min_guard(const SmoothMap& map, std::span<const double> point) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& g : map.guards) lo = std::min(lo, eval_float(g, point).real());
  return lo;
}

std::vector<double> eval_map(const SmoothMap& map, std::span<const double> point) {
  if (point.size() != map.domain_dim) throw Error(ErrorKind::Dimension, "eval_map: arity mismatch");
  for (std::size_t k = 0; k < map.guards.size(); ++k) {
    double g = 0.0;
    try {
      g = eval_float(map.guards[k], point).real();
    } catch (const Error& err) {
      throw Error(ErrorKind::Singular, "guard " + std::to_string(k + 1) + " not evaluable: " + err.what());
    }
    if (!(g > 0.0)) throw Error(ErrorKind::Singular, "guard " + std::to_string(k + 1) + " violated at point");
  }
  std::vector<double> out;
  out.reserve(map.components.size());
  for (const auto& c : map.components) out.push_back(eval_float(c, point).real());
  return out;
}

}  // namespace hmlift
