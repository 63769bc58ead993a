#include <doctest.h>

#include <cmath>
#include <variant>

#include "hmlift/catalog.hpp"
#include "hmlift/expr.hpp"
#include "hmlift/numeric.hpp"
#include "hmlift/parser.hpp"
#include "support/gen.hpp"

using namespace hmlift;

namespace {
Expr X(std::size_t k) { return Expr::variable(k); }
Expr K(long v) { return Expr::constant(GaussianRational(v)); }

double real_at(const Expr& e, std::vector<double> p) { return eval_float(e, p).real(); }

const char* const kQuaternion = "map q: C^4 -> C^2 { q1 = z1*z3 - z2*conj(z4); q2 = z1*z4 + z2*conj(z3); }";
const char* const kStereo =
    "map h: R^3 -> R^2 { r = sqrt(x1^2+x2^2+x3^2); h1 = x1/(r - x3); h2 = x2/(r - x3); guard r - x3; }";

SmoothMap stereo() { return std::get<SmoothMap>(parse_map(kStereo)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}
}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("parse the quaternion product") {
    const auto parsed = parse_map(kQuaternion);
    REQUIRE(std::holds_alternative<ComplexPolyMap>(parsed));
    const auto& q = std::get<ComplexPolyMap>(parsed);
    CHECK(q.domain_dim() == 4);
    CHECK(q.codomain_dim() == 2);
    CHECK(q[0] == parse_polynomial("z1*z3 - z2*zb4", 4, Layout::Complex));
    CHECK(q[1] == parse_polynomial("z1*z4 + z2*zb3", 4, Layout::Complex));
  }

  TEST_CASE("parse a projection") {
    const auto parsed = parse_map("map p: R^2 -> R^1 { p1 = x1; }");
    REQUIRE(std::holds_alternative<RealPolyMap>(parsed));
    const auto& p = std::get<RealPolyMap>(parsed);
    CHECK(p.domain_dim() == 2);
    CHECK(p[0] == RealPoly::variable(2, Layout::Real, 0));
  }

  TEST_CASE("parse the stereographic map with its guard") {
    const auto parsed = parse_map(kStereo);
    REQUIRE(std::holds_alternative<SmoothMap>(parsed));
    const auto& h = std::get<SmoothMap>(parsed);
    CHECK(h.domain_dim == 3);
    CHECK(h.codomain_dim() == 2);
    CHECK(h.guards.size() == 1);
  }

  TEST_CASE("precedence: power binds tighter than unary minus") {
    const auto parsed = parse_map("map p: R^1 -> R^1 { p1 = -x1^2 + 2*3; }");
    const auto& p = std::get<RealPolyMap>(parsed);
    const RealPoly x1 = RealPoly::variable(1, Layout::Real, 0);
    CHECK(p[0] == RealPoly::constant(1, Layout::Real, 6) - x1 * x1);
  }

  TEST_CASE("comments and bindings") {
    const auto parsed = parse_map(
        "# leading comment\n"
        "map p: R^2 -> R^1 {\n"
        "  s = x1 + x2;  # binding\n"
        "  p1 = s*s;\n"
        "}\n");
    const RealPoly s = RealPoly::variable(2, Layout::Real, 0) + RealPoly::variable(2, Layout::Real, 1);
    CHECK(std::get<RealPolyMap>(parsed)[0] == s * s);
  }

  TEST_CASE("parse errors carry a position") {
    try {
      (void)parse_map("map p: R^2 -> R^1 {\n  p1 = x1 + ;\n}");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 0);
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }

  TEST_CASE("semantic parse errors") {
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = y7; }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = x3; }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^2 { p1 = x1; }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = conj(x1); }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = i*x1; }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = z1; }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map("map p: R^2 -> R^1 { p1 = x1 }"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_map(""); }) == ErrorKind::Parse);
  }

  TEST_CASE("symbolic derivative of the radius") {
    const Expr r = Expr::sqrt(Expr::pow(X(0), 2) + Expr::pow(X(1), 2) + Expr::pow(X(2), 2));
    const Expr dr = derivative(r, 0);
    CHECK(real_at(dr, {1, 2, 2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    const double h = 1e-6;
    const double fd = (real_at(r, {1 + h, 2, 2}) - real_at(r, {1 - h, 2, 2})) / (2 * h);
    CHECK(std::abs(fd - 1.0 / 3.0) < 1e-8);
  }

  TEST_CASE("quotient rule and constants") {
    const Expr q = derivative(X(0) / X(1), 1);
    CHECK(real_at(q, {3, 2}) == doctest::Approx(-3.0 / 4.0));
    CHECK(derivative(K(5), 0).is_zero());
    CHECK(derivative(X(1), 0).is_zero());
    CHECK(derivative(X(0), 0).is_one());
  }

  TEST_CASE("float evaluation") {
    CHECK(real_at(Expr::pow(X(0), 2), {3.0}) == 9.0);
    const SmoothMap h = stereo();
    const std::vector<double> p = {1, 0, -1};
    const auto v = eval_map(h, p);
    CHECK(v[0] == doctest::Approx(1.0 / (std::sqrt(2.0) + 1.0)).epsilon(1e-12));
    CHECK(v[0] == doctest::Approx(0.41421356).epsilon(1e-8));
    CHECK(v[1] == 0.0);
  }

  TEST_CASE("guard violation is a singular-point error") {
    const SmoothMap h = stereo();
    const std::vector<double> p = {0, 0, 1};
    CHECK(kind_of([&] { (void)eval_map(h, p); }) == ErrorKind::Singular);
    CHECK(min_guard(h, p) <= 0.0);
  }

  TEST_CASE("domain errors") {
    const std::vector<double> p = {-1.0};
    CHECK(kind_of([&] { (void)eval_float(Expr::sqrt(X(0)), p); }) == ErrorKind::Domain);
    const std::vector<double> zero = {0.0};
    CHECK(kind_of([&] { (void)eval_float(K(1) / X(0), zero); }) == ErrorKind::Singular);
  }

  TEST_CASE("lowering") {
    const ComplexPoly p = lower_to_poly(X(0) * X(1) + K(1), 2, Layout::Real);
    CHECK(p.size() == 2);
    const ComplexPoly c = lower_to_poly(X(0) * Expr::conj(X(3)), 4, Layout::Complex);
    CHECK(c == parse_polynomial("z1*zb4", 4, Layout::Complex));
    try {
      (void)lower_to_poly(Expr::sqrt(X(0)), 1, Layout::Real);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPolynomial);
      CHECK(std::string(e.what()).find("sqrt") != std::string::npos);
    }
  }

  TEST_CASE("constant folding") {
    CHECK((K(2) * K(3)).is_constant());
    CHECK((X(0) * K(1)).op() == Expr::Op::Var);
    CHECK((X(0) + K(0)).op() == Expr::Op::Var);
  }

  TEST_CASE("property: float evaluation agrees with exact evaluation") {
    test::Gen g(31);
    const std::vector<std::string> names = {"x1", "x2", "x3"};
    for (int t = 0; t < 100; ++t) {
      const RealPolyMap phi = g.real_map(3, 1, 4);
      const SmoothMap s = to_smooth(phi);
      std::vector<Rational> a;
      std::vector<double> ad;
      for (int k = 0; k < 3; ++k) {
        const Rational v(g.integer(-40, 40), g.integer(1, 4));
        a.push_back(v);
        ad.push_back(v.to_double());
      }
      const double exact = evaluate(phi[0], a).to_double();
      const double approx = eval_float(s.components[0], ad).real();
      CHECK(std::abs(exact - approx) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }

  TEST_CASE("property: symbolic derivatives agree with central differences") {
    for (const auto& entry : catalog()) {
      if (entry.kind != CatalogEntry::Kind::Smooth) continue;
      const SmoothMap phi = std::get<SmoothMap>(parse_map(entry.definition));
      Box box(phi.domain_dim, {-2.0, 2.0});
      const auto points = sample_points(phi, 100, 7, box);
      for (std::size_t k = 0; k < phi.codomain_dim(); ++k)
        for (std::size_t j = 0; j < phi.domain_dim; ++j) {
          const Expr d = derivative(phi.components[k], j);
          for (const auto& p : points) {
            const double h = 1e-6;
            auto plus = p, minus = p;
            plus[j] += h;
            minus[j] -= h;
            const double fd = (eval_float(phi.components[k], plus).real() -
                               eval_float(phi.components[k], minus).real()) / (2 * h);
            const double sym = eval_float(d, p).real();
            CHECK(std::abs(fd - sym) <= 1e-6 * std::max(1.0, std::abs(sym)));
          }
        }
    }
  }

  TEST_CASE("property: parse, render, parse is a fixed point") {
    test::Gen g(32);
    for (int t = 0; t < 50; ++t) {
      const RealPolyMap phi = g.real_map(3, 2, 3);
      const std::string src = to_source(phi, "phi");
      const auto back = std::get<RealPolyMap>(parse_map(src));
      CHECK(back == phi);
      CHECK(to_source(back, "phi") == src);
    }
    for (int t = 0; t < 50; ++t) {
      const ComplexPolyMap phi = g.complex_map(2, 2, 3);
      const std::string src = to_source(phi, "phi");
      const auto back = std::get<ComplexPolyMap>(parse_map(src));
      CHECK(back == phi);
      CHECK(to_source(back, "phi") == src);
    }
    const MapSource h = parse_map_source(kStereo);
    const std::string once = to_source(to_smooth(h));
    CHECK(to_source(std::get<SmoothMap>(parse_map(once))) == once);
  }
}
