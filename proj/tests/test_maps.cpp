#include <doctest.h>

#include "hmlift/calculus.hpp"
#include "hmlift/maps.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace hmlift;
using test::cpoly;
using test::rpoly;

namespace {

std::vector<RealPoly> rpolys(std::initializer_list<const char*> texts, std::size_t n) {
  std::vector<RealPoly> out;
  for (const char* t : texts) out.push_back(rpoly(t, n));
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}
}  // namespace

TEST_SUITE("maps") {
  TEST_CASE("real identification of z conj(w)") {
    const RealPolyMap r = real_identification(test::catalog_complex("ex1.4.i-zwbar"));
    CHECK(r.domain_dim() == 4);
    CHECK(r.components() == rpolys({"x1*x3 + x2*x4", "x2*x3 - x1*x4"}, 4));
  }

  TEST_CASE("real identification of z is the identity of R^2") {
    CHECK(real_identification(test::complex_map("map f: C -> C { f1 = z1; }")) == identity_map(2));
    CHECK(complexify(identity_map(2)) == test::complex_map("map f: C -> C { f1 = z1; }"));
  }

  TEST_CASE("quaternion product Jacobian is the x-block of the lift matrix") {
    const RealPolyMap q = real_identification(test::catalog_complex("ex1.4.iii-quaternion"));
    const RealPolyMatrix j = jacobian(q);
    const char* const rows[4][8] = {
        {"x5", "-x6", "-x7", "-x8", "x1", "-x2", "-x3", "-x4"},
        {"x6", "x5", "x8", "-x7", "x2", "x1", "-x4", "x3"},
        {"x7", "-x8", "x5", "x6", "x3", "x4", "x1", "-x2"},
        {"x8", "x7", "-x6", "x5", "x4", "-x3", "x2", "x1"},
    };
    REQUIRE(j.rows() == 4);
    REQUIRE(j.cols() == 8);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 8; ++b) CHECK(j(a, b) == rpoly(rows[a][b], 8));
  }

  TEST_CASE("complexify of the real lift gives the complex form of Q_r") {
    const RealPolyMap qr = real_identification(
        test::complex_map("map Qr: C^8 -> C^2 { Qr1 = z3*z5 - zb4*z6 + z1*z7 - z2*zb8;"
                          " Qr2 = z4*z5 + zb3*z6 + z2*zb7 + z1*z8; }"));
    const ComplexPolyMap back = complexify(qr);
    CHECK(back[0] == cpoly("z3*z5 - zb4*z6 + z1*z7 - z2*zb8", 8));
    CHECK(back[1] == cpoly("z4*z5 + zb3*z6 + z2*zb7 + z1*z8", 8));
  }

  TEST_CASE("complexify needs even dimensions") {
    CHECK(kind_of([] { (void)complexify(identity_map(3)); }) == ErrorKind::Dimension);
    CHECK(kind_of([] { (void)complexify(RealPolyMap(2, rpolys({"x1"}, 2))); }) == ErrorKind::Dimension);
  }

  TEST_CASE("composition examples") {
    const ComplexPolyMap phi = test::catalog_complex("ex3.7-R16-to-C");
    const ComplexPolyMap zw = test::complex_map("map m: C^2 -> C { m1 = z1*z2; }");
    const ComplexPolyMap qr = test::complex_map(
        "map Qr: C^8 -> C^2 { Qr1 = z3*z5 - zb4*z6 + z1*z7 - z2*zb8;"
        " Qr2 = z4*z5 + zb3*z6 + z2*zb7 + z1*z8; }");
    CHECK(compose(zw, qr) == phi);

    const RealPolyMap sq(1, rpolys({"x1^2"}, 1));
    const RealPolyMap shift(1, rpolys({"x1 + 1"}, 1));
    CHECK(compose(sq, shift).components() == rpolys({"x1^2 + 2*x1 + 1"}, 1));
    CHECK(kind_of([&] { (void)compose(sq, identity_map(2)); }) == ErrorKind::Dimension);
  }

  TEST_CASE("to_quadratic examples") {
    const QuadraticMap zw = to_quadratic(real_identification(test::catalog_complex("ex1.4.i-zw")));
    RationalMatrix a1(4, 4), a2(4, 4);
    a1(0, 2) = a1(2, 0) = Rational(1, 2);
    a1(1, 3) = a1(3, 1) = Rational(-1, 2);
    a2(0, 3) = a2(3, 0) = Rational(1, 2);
    a2(1, 2) = a2(2, 1) = Rational(1, 2);
    CHECK(zw.matrices()[0] == a1);
    CHECK(zw.matrices()[1] == a2);

    const QuadraticMap hopf = to_quadratic(test::catalog_real("ex1.4.ii-hopf-construction"));
    RationalMatrix d(4, 4);
    d(0, 0) = d(1, 1) = Rational(1);
    d(2, 2) = d(3, 3) = Rational(-1);
    CHECK(hopf.matrices()[0] == d);

    CHECK(kind_of([] { (void)to_quadratic(RealPolyMap(1, rpolys({"x1^2 + x1"}, 1))); }) == ErrorKind::Shape);
    try {
      (void)to_quadratic(RealPolyMap(2, rpolys({"x1*x2", "x1^3"}, 2)));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
  }

  TEST_CASE("asymmetric quadratic matrices are rejected") {
    RationalMatrix a(2, 2);
    a(0, 1) = Rational(1);
    CHECK(kind_of([&] { (void)QuadraticMap(2, {a}); }) == ErrorKind::InvariantViolation);
  }

  TEST_CASE("property: real identification preserves evaluation") {
    test::Gen g(41);
    for (int t = 0; t < 60; ++t) {
      const ComplexPolyMap phi = g.complex_map(2, 2, 3);
      const RealPolyMap r = real_identification(phi);
      const std::vector<Rational> x = g.rational_point(4);
      const std::vector<GaussianRational> z = {GaussianRational(x[0], x[1]), GaussianRational(x[2], x[3])};
      const GaussianVector w = evaluate(phi, z);
      const RationalVector u = evaluate(r, x);
      CHECK(w[0] == GaussianRational(u[0], u[1]));
      CHECK(w[1] == GaussianRational(u[2], u[3]));
    }
  }

  TEST_CASE("property: complexify round trips") {
    test::Gen g(42);
    for (int t = 0; t < 50; ++t) {
      const ComplexPolyMap phi = g.complex_map(2, 2, 3);
      CHECK(complexify(real_identification(phi)) == phi);
      const RealPolyMap r = g.real_map(4, 2, 3);
      CHECK(real_identification(complexify(r)) == r);
    }
  }

  TEST_CASE("property: composition is associative with identity") {
    test::Gen g(43);
    for (int t = 0; t < 40; ++t) {
      const RealPolyMap a = g.real_map(2, 2, 2), b = g.real_map(3, 2, 2), c = g.real_map(2, 3, 2);
      CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
      CHECK(compose(a, identity_map(2)) == a);
      CHECK(compose(identity_map(2), a) == a);
    }
  }

  TEST_CASE("property: complex composition agrees with the real route") {
    test::Gen g(44);
    for (int t = 0; t < 40; ++t) {
      const ComplexPolyMap psi = g.complex_map(2, 1, 2), phi = g.complex_map(1, 2, 2);
      CHECK(real_identification(compose(psi, phi)) ==
            compose(real_identification(psi), real_identification(phi)));
    }
  }

  TEST_CASE("property: quadratic round trip and Euler identity") {
    test::Gen g(45);
    for (int t = 0; t < 50; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.integer(1, 5));
      std::vector<RationalMatrix> mats;
      for (int k = 0; k < 3; ++k) mats.push_back(g.symmetric(m));
      const QuadraticMap q(m, mats);
      const RealPolyMap phi = from_quadratic(q);
      CHECK(to_quadratic(phi) == q);
      const RealPolyMatrix j = jacobian(phi);
      for (std::size_t k = 0; k < phi.codomain_dim(); ++k) {
        CHECK(is_homogeneous(phi[k], 2));
        RealPoly euler(m);
        for (std::size_t i = 0; i < m; ++i) euler += j(k, i) * RealPoly::variable(m, Layout::Real, i);
        CHECK(euler == RealPoly::constant(m, Layout::Real, 2) * phi[k]);
      }
    }
  }

  TEST_CASE("linear maps and rendering") {
    const RationalMatrix l = {{Rational(1), Rational(2)}, {Rational(0), Rational(-1)}};
    const RealPolyMap lin = linear_map(l);
    CHECK(lin.components() == rpolys({"x1 + 2*x2", "-x2"}, 2));
    CHECK(render(lin).find("x1 + 2*x2") != std::string::npos);
    CHECK(test::real_map(to_source(lin, "lin")) == lin);
  }
}
