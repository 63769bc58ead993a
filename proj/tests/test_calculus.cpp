#include <doctest.h>

#include "hmlift/calculus.hpp"
#include "hmlift/maps.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace hmlift;
using test::cpoly;
using test::rpoly;

namespace {
const GaussianRational I = GaussianRational::i();

RationalMatrix constant_matrix(const RealPolyMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      REQUIRE(m(i, j).is_constant());
      out(i, j) = m(i, j).constant_term();
    }
  return out;
}

const char* const kQrComplex =
    "map Qr: C^8 -> C^2 { Qr1 = z3*z5 - zb4*z6 + z1*z7 - z2*zb8; Qr2 = z4*z5 + zb3*z6 + z2*zb7 + z1*z8; }";
}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("Jacobian of the real identification of z conj(w)") {
    const RealPolyMatrix j = jacobian(real_identification(test::catalog_complex("ex1.4.i-zwbar")));
    const char* const rows[2][4] = {{"x3", "x4", "x1", "x2"}, {"-x4", "x3", "x2", "-x1"}};
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 4; ++b) CHECK(j(a, b) == rpoly(rows[a][b], 4));
  }

  TEST_CASE("Jacobian of a linear map is its matrix") {
    test::Gen g(51);
    const RationalMatrix l = g.matrix(3, 4);
    CHECK(constant_matrix(jacobian(linear_map(l))) == l);
  }

  TEST_CASE("Jacobian of a quadratic map has rows 2 X^t A_i") {
    test::Gen g(52);
    const QuadraticMap q(3, {g.symmetric(3), g.symmetric(3)});
    const RealPolyMatrix j = jacobian(from_quadratic(q));
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t c = 0; c < 3; ++c) {
        RealPoly expected(3);
        for (std::size_t r = 0; r < 3; ++r)
          expected += RealPoly::constant(3, Layout::Real, Rational(2) * q.matrices()[k](r, c)) *
                      RealPoly::variable(3, Layout::Real, r);
        CHECK(j(k, c) == expected);
      }
  }

  TEST_CASE("Hessian examples") {
    const RealPolyMatrix h = hessian(rpoly("x1*x2", 2));
    CHECK(constant_matrix(h) == RationalMatrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    const RealPolyMatrix hh = hessian(test::catalog_real("ex1.4.ii-hopf-construction")[0]);
    RationalMatrix d(4, 4);
    d(0, 0) = d(1, 1) = Rational(2);
    d(2, 2) = d(3, 3) = Rational(-2);
    CHECK(constant_matrix(hh) == d);
    CHECK(hessian(rpoly("3*x1 - x2 + 7", 2)).is_zero());
  }

  TEST_CASE("Laplacian examples") {
    CHECK(laplacian(rpoly("x1^2 - x2^2", 2)).is_zero());
    CHECK(laplacian(rpoly("x1^2 + x2^2", 2)) == RealPoly::constant(2, Layout::Real, 4));
    const RealPolyMap qr = real_identification(test::complex_map(kQrComplex));
    for (const auto& l : laplacian_map(qr)) CHECK(l.is_zero());
  }

  TEST_CASE("Wirtinger Jacobians of the quaternion product") {
    const ComplexPolyMap q = test::catalog_complex("ex1.4.iii-quaternion");
    const ComplexPolyMatrix w = wirtinger_jacobian(q);
    CHECK(w(0, 0) == cpoly("z3", 4));
    CHECK(w(0, 1) == cpoly("-zb4", 4));
    CHECK(w(0, 2) == cpoly("z1", 4));
    CHECK(w(0, 3).is_zero());
    const ComplexPolyMatrix a = antiholomorphic_jacobian(q);
    CHECK(a(0, 3) == cpoly("-z2", 4));
    CHECK(antiholomorphic_jacobian(test::catalog_complex("ex1.4.i-zw")).is_zero());
  }

  TEST_CASE("complex gradient examples") {
    const auto g = complex_gradient(identity_map(2));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == ComplexPoly::constant(2, Layout::Real, 1));
    CHECK(g[1] == ComplexPoly::constant(2, Layout::Real, I));

    const RealPolyMap phi = real_identification(test::catalog_complex("ex3.7-R16-to-C"));
    const auto grad = complex_gradient(phi);
    REQUIRE(grad.size() == 16);
    // (z, w) = (0,0,1,0, 1,0,0,1) in interleaved real coordinates.
    std::vector<GaussianRational> x(16, GaussianRational(0));
    x[4] = x[8] = x[14] = 1;
    const std::vector<GaussianRational> expected = {1, I, 0, 0, 0, 0, 1, I, 0, 0, 1, I, 0, 0, 0, 0};
    for (std::size_t j = 0; j < 16; ++j) CHECK(evaluate(grad[j], x) == expected[j]);

    const RealPolyMap constant(2, {RealPoly::constant(2, Layout::Real, 3), RealPoly(2)});
    for (const auto& p : complex_gradient(constant)) CHECK(p.is_zero());
    try {
      (void)complex_gradient(identity_map(3));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Shape);
    }
  }

  TEST_CASE("property: Hessians are symmetric and trace to the Laplacian") {
    test::Gen g(53);
    for (int t = 0; t < 150; ++t) {
      const RealPoly p = g.poly(4, 4, 6);
      const RealPolyMatrix h = hessian(p);
      CHECK(h.is_symmetric());
      RealPoly trace(4);
      for (std::size_t i = 0; i < 4; ++i) trace += h(i, i);
      CHECK(trace == laplacian(p));
    }
  }

  TEST_CASE("property: holomorphic Jacobians have Cauchy-Riemann blocks") {
    test::Gen g(54);
    for (int t = 0; t < 60; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
      const ComplexPolyMap phi = g.holomorphic_map(m, n, 3);
      REQUIRE(antiholomorphic_jacobian(phi).is_zero());
      const RealPolyMatrix j = jacobian(real_identification(phi));
      const ComplexPolyMatrix w = wirtinger_jacobian(phi);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          const RealPolyMap ab = real_identification(ComplexPolyMap(m, {w(a, b)}));
          CHECK(j(2 * a, 2 * b) == ab[0]);
          CHECK(j(2 * a, 2 * b + 1) == -ab[1]);
          CHECK(j(2 * a + 1, 2 * b) == ab[1]);
          CHECK(j(2 * a + 1, 2 * b + 1) == ab[0]);
        }
    }
  }
}
