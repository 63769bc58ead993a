#include <doctest.h>

#include <algorithm>

#include "hmlift/kaehler.hpp"
#include "hmlift/maps.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/reference.hpp"

using namespace hmlift;
using test::kI;

namespace {
RealPolyMap phi_real() { return real_identification(test::catalog_complex("ex3.7-R16-to-C")); }

std::vector<GaussianVector> first(std::size_t n) {
  auto pts = test::reference_points();
  pts.resize(n);
  return pts;
}
}  // namespace

TEST_SUITE("kaehler") {
  TEST_CASE("exact gradients agree with the independent oracle") {
    const RealPolyMap phi = phi_real();
    for (const auto& p : test::reference_points()) CHECK(gradient_at(phi, p) == test::oracle_gradient(p));
  }

  TEST_CASE("published gradients match except one entry") {
    const RealPolyMap phi = phi_real();
    const auto pts = test::reference_points();
    const auto refs = test::reference_gradients();
    std::vector<std::pair<std::size_t, std::size_t>> mismatches;
    for (std::size_t c = 0; c < pts.size(); ++c) {
      const GaussianVector g = gradient_at(phi, pts[c]);
      for (std::size_t t = 0; t < 16; ++t)
        if (!(g[t] == refs[c][t])) mismatches.emplace_back(c, t);
    }
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0] == std::pair<std::size_t, std::size_t>{7, 7});
    CHECK(gradient_at(phi, pts[7])[7] == -kI);
    CHECK(refs[7][7] == kI);
  }

  TEST_CASE("gradient examples") {
    const RealPolyMap phi = phi_real();
    const auto refs = test::reference_gradients();
    CHECK(gradient_at(phi, test::reference_points()[1]) == refs[1]);
    CHECK(gradient_at(phi, test::reference_points()[8]) == refs[8]);
    const RealPolyMap constant(4, {RealPoly::constant(4, Layout::Real, 2), RealPoly(4)});
    const GaussianVector p = {kI, GaussianRational(1)};
    for (const auto& v : gradient_at(constant, p)) CHECK(v.is_zero());
    const GaussianVector short_point = {kI};
    CHECK_THROWS_AS(gradient_at(constant, short_point), Error);
  }

  TEST_CASE("first eight reference points: orthogonal, isotropic, rank seven") {
    const KaehlerReport r = span_report(phi_real(), first(8));
    CHECK(r.pairwise_orthogonal);
    CHECK(r.isotropy_ok);
    CHECK(r.rank == 7);
    CHECK(r.verdict == KaehlerReport::Verdict::Inconclusive);
    // The dependency found by elimination: -g1 - i g2 - i g3 + g4 + g7 + g8 = 0.
    const auto& g = r.gradients;
    for (std::size_t t = 0; t < 16; ++t)
      CHECK((-g[0][t] - kI * g[1][t] - kI * g[2][t] + g[3][t] + g[6][t] + g[7][t]).is_zero());
  }

  TEST_CASE("all nine reference points reach rank eight only") {
    const KaehlerReport r = span_report(phi_real(), test::reference_points());
    CHECK(r.rank == 8);
    CHECK(r.half_dim == 8);
    CHECK(r.verdict == KaehlerReport::Verdict::Inconclusive);
    CHECK(r.isotropy_ok);
    CHECK(r.rank_history == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 7, 8});
    // Ninth gradient is not in the span of the first eight.
    const GaussianMatrix rows = GaussianMatrix::from_rows(std::vector<GaussianVector>(r.gradients.begin(), r.gradients.begin() + 8));
    CHECK(!span_contains(rows, std::span<const GaussianRational>(r.gradients[8])));
  }

  TEST_CASE("the printed eighth vector is not orthogonal to the first") {
    const auto refs = test::reference_gradients();
    CHECK(bilinear_dot(std::span<const GaussianRational>(refs[0]), std::span<const GaussianRational>(refs[7])) ==
          GaussianRational(-2));
  }

  TEST_CASE("search certifies the map is not Kaehler") {
    const KaehlerReport r = search_points(phi_real(), 500, 1);
    CHECK(r.rank >= 9);
    CHECK(r.verdict == KaehlerReport::Verdict::NotKaehlerCertified);
    CHECK(std::string(to_string(r.verdict)) == "not_kaehler_certified");
    CHECK(r.isotropy_ok);
    for (const auto& p : r.sample_points) CHECK(gradient_at(phi_real(), p) == test::oracle_gradient(p));
  }

  TEST_CASE("search is deterministic") {
    const KaehlerReport a = search_points(phi_real(), 200, 9);
    const KaehlerReport b = search_points(phi_real(), 200, 9);
    CHECK(a.sample_points == b.sample_points);
    CHECK(a.rank == b.rank);
  }

  TEST_CASE("trivial maps stay inconclusive") {
    const RealPolyMap z1 = real_identification(test::complex_map("map f: C^2 -> C { f1 = z1; }"));
    const KaehlerReport a = search_points(z1, 100, 3);
    CHECK(a.rank == 1);
    CHECK(a.verdict == KaehlerReport::Verdict::Inconclusive);
    const RealPolyMap c(4, {RealPoly::constant(4, Layout::Real, 1), RealPoly(4)});
    const KaehlerReport b = search_points(c, 100, 3);
    CHECK(b.rank == 0);
    CHECK(b.verdict == KaehlerReport::Verdict::Inconclusive);
    const RealPolyMap zw = real_identification(test::catalog_complex("ex1.4.i-zw"));
    CHECK(search_points(zw, 200, 4).rank <= 2);
  }

  TEST_CASE("property: rank is monotone, permutation invariant and stable") {
    const RealPolyMap phi = phi_real();
    test::Gen g(81);
    auto pts = search_points(phi, 500, 1).sample_points;
    const auto extra = test::reference_points();
    pts.insert(pts.end(), extra.begin(), extra.end());
    const KaehlerReport base = span_report(phi, pts);
    CHECK(std::is_sorted(base.rank_history.begin(), base.rank_history.end()));
    CHECK(base.verdict == KaehlerReport::Verdict::NotKaehlerCertified);
    for (int t = 0; t < 5; ++t) {
      auto shuffled = pts;
      std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
      const KaehlerReport r = span_report(phi, shuffled);
      CHECK(r.rank == base.rank);
      CHECK(std::is_sorted(r.rank_history.begin(), r.rank_history.end()));
    }
  }

  TEST_CASE("property: gradients of catalog harmonic morphisms to C are isotropic") {
    test::Gen g(82);
    const GaussianRational alphabet[] = {0, 1, -1, kI, -kI, GaussianRational(1) - kI};
    for (const char* id : {"ex1.4.i-zw", "ex1.4.i-zwbar", "ex3.7-R16-to-C"}) {
      const RealPolyMap phi = real_identification(test::catalog_complex(id));
      for (int t = 0; t < 10; ++t) {
        GaussianVector p;
        for (std::size_t k = 0; k < phi.domain_dim() / 2; ++k) p.push_back(alphabet[g.integer(0, 5)]);
        const GaussianVector v = gradient_at(phi, p);
        CHECK_MESSAGE(bilinear_dot(std::span<const GaussianRational>(v), std::span<const GaussianRational>(v)).is_zero(), id);
      }
    }
  }

  TEST_CASE("Jacobian ranks are recorded per point") {
    const KaehlerReport r = span_report(phi_real(), test::reference_points());
    REQUIRE(r.jacobian_ranks.size() == 9);
    for (auto k : r.jacobian_ranks) CHECK(k <= 2);
  }
}
