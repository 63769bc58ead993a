#include <doctest.h>

#include <cmath>

#include "hmlift/lift.hpp"
#include "hmlift/maps.hpp"
#include "hmlift/numeric.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace hmlift;

namespace {
SmoothMap stereo() { return test::catalog_smooth("ex1.4.iv-hyperbolic-stereographic"); }
Box cube(std::size_t n, double a) { return Box(n, {-a, a}); }
}  // namespace

TEST_SUITE("numeric") {
  TEST_CASE("stereographic map is a harmonic morphism numerically") {
    const SmoothMap h = stereo();
    const auto pts = sample_points(h, 100, 1, cube(3, 2));
    REQUIRE(pts.size() == 100);
    for (const auto& p : pts) CHECK(min_guard(h, p) >= kGuardMargin);
    const ResidualReport r = numeric_check(h, pts);
    CHECK(r.pass);
    CHECK(r.worst_residual() <= 1e-8);
    CHECK(!r.witness);
    CHECK(r.fd_mismatch < kFiniteDifferenceMismatch);
  }

  TEST_CASE("lift of the stereographic map is not HWC") {
    const SmoothMap lift = numeric_complete_lift(stereo());
    CHECK(lift.domain_dim == 6);
    CHECK(lift.guards.size() == 1);
    Box box = cube(3, 2);
    box.insert(box.end(), 3, {-1.0, 1.0});
    const ResidualReport r = numeric_check(lift, sample_points(lift, 100, 2, box));
    CHECK(!r.pass);
    CHECK(r.conformality_residual >= kNumericFailThreshold);
    CHECK(r.max_laplacian_residual() <= 1e-8);
    CHECK(r.failing_check == "conformality");
    CHECK(r.witness.has_value());
  }

  TEST_CASE("non-harmonic polynomial fails with Laplacian residual 2") {
    const SmoothMap f = to_smooth(test::real_map("map f: R^2 -> R^2 { f1 = x1^2; f2 = x2; }"));
    const ResidualReport r = numeric_check(f, sample_points(f, 10, 3, cube(2, 1)));
    CHECK(!r.pass);
    CHECK(r.laplacian_residuals[0] == doctest::Approx(2.0));
    CHECK(r.failing_check == "laplacian");
  }

  TEST_CASE("orthogonal projection passes with unit dilation") {
    const SmoothMap p = to_smooth(test::catalog_real("ex1.4.v-orthogonal-projection"));
    const ResidualReport r = numeric_check(p, sample_points(p, 20, 4, cube(5, 1)));
    CHECK(r.pass);
    CHECK(r.worst_residual() <= 1e-15);
    CHECK(r.min_lambda2 == doctest::Approx(1.0));
    CHECK(r.max_lambda2 == doctest::Approx(1.0));
  }

  TEST_CASE("lift of a linear map passes") {
    const SmoothMap l = to_smooth(test::real_map("map l: R^2 -> R^2 { l1 = x1 - x2; l2 = x1 + x2; }"));
    const SmoothMap lift = numeric_complete_lift(l);
    CHECK(numeric_check(lift, sample_points(lift, 20, 5, cube(4, 1))).pass);
  }

  TEST_CASE("smooth lift agrees with the exact lift") {
    const RealPolyMap phi = test::real_map("map f: R^2 -> R^2 { f1 = x1^2 - x2^2; f2 = 2*x1*x2; }");
    const SmoothMap lift = numeric_complete_lift(to_smooth(phi));
    const RealPolyMap exact = complete_lift_real(phi);
    test::Gen g(91);
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> a;
      std::vector<double> ad;
      for (int k = 0; k < 4; ++k) {
        a.emplace_back(g.integer(-20, 20), g.integer(1, 8));
        ad.push_back(a.back().to_double());
      }
      const auto v = eval_map(lift, ad);
      const RationalVector e = evaluate(exact, a);
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(std::abs(v[k] - e[k].to_double()) <= 1e-12 * std::max(1.0, std::abs(e[k].to_double())));
    }
  }

  TEST_CASE("sampling edge cases") {
    const SmoothMap h = stereo();
    CHECK(sample_points(h, 0, 1, cube(3, 2)).empty());
    try {
      // Inside the excluded ray up to a sliver narrower than the guard margin.
      (void)sample_points(h, 10, 1, Box{{0.0, 1e-12}, {0.0, 1e-12}, {1.0, 2.0}});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SamplingFailure);
    }
    CHECK_THROWS_AS(sample_points(h, 1, 1, cube(2, 1)), Error);
  }

  TEST_CASE("guard violations raise singular errors") {
    const SmoothMap h = stereo();
    try {
      (void)numeric_check(h, {{0.0, 0.0, 1.0}});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Singular);
    }
  }

  TEST_CASE("property: identical seeds give identical reports") {
    const SmoothMap h = stereo();
    const auto a = sample_points(h, 30, 11, cube(3, 2));
    const auto b = sample_points(h, 30, 11, cube(3, 2));
    CHECK(a == b);
    CHECK(!(a == sample_points(h, 30, 12, cube(3, 2))));
    const ResidualReport ra = numeric_check(h, a), rb = numeric_check(h, b);
    CHECK(ra.laplacian_residuals == rb.laplacian_residuals);
    CHECK(ra.conformality_residual == rb.conformality_residual);
  }

  TEST_CASE("property: exact harmonic morphisms have tiny numeric residuals") {
    for (const char* id : {"ex1.4.i-zw", "ex1.4.i-zwbar", "ex1.4.iii-quaternion"}) {
      const SmoothMap s = to_smooth(real_identification(test::catalog_complex(id)));
      const ResidualReport r = numeric_check(s, sample_points(s, 50, 13, cube(s.domain_dim, 1)));
      CHECK_MESSAGE(r.worst_residual() <= 1e-10, id);
    }
    const SmoothMap hopf = to_smooth(test::catalog_real("ex1.4.ii-hopf-construction"));
    CHECK(numeric_check(hopf, sample_points(hopf, 50, 14, cube(4, 1))).worst_residual() <= 1e-10);
  }
}
