#include "hmlift/kaehler.hpp"

#include <random>

#include "hmlift/calculus.hpp"
#include "hmlift/error.hpp"

namespace hmlift {

const char* to_string(KaehlerReport::Verdict v) {
  return v == KaehlerReport::Verdict::NotKaehlerCertified ? "not_kaehler_certified" : "inconclusive";
}

namespace {

void check_shape(const RealPolyMap& phi) {
  if (phi.codomain_dim() != 2) throw Error(ErrorKind::Shape, "Kaehler checks need a map to C (two real components)");
  if (phi.domain_dim() % 2 != 0) throw Error(ErrorKind::Dimension, "Kaehler checks need an even-dimensional domain");
}

GaussianVector real_coordinates(std::span<const GaussianRational> point) {
  GaussianVector x;
  x.reserve(2 * point.size());
  for (const auto& z : point) {
    x.emplace_back(z.real());
    x.emplace_back(z.imag());
  }
  return x;
}

class GradientField {
 public:
  explicit GradientField(const RealPolyMap& phi) : phi_(phi) {
    check_shape(phi);
    for (auto& g : complex_gradient(phi)) grad_.push_back(std::move(g));
  }

  std::size_t complex_dim() const { return phi_.domain_dim() / 2; }

  GaussianVector at(std::span<const GaussianRational> point) const {
    if (point.size() != complex_dim())
      throw Error(ErrorKind::Dimension, "point has " + std::to_string(point.size()) + " complex coordinates, expected " +
                                            std::to_string(complex_dim()));
    const GaussianVector x = real_coordinates(point);
    GaussianVector out;
    out.reserve(grad_.size());
    for (const auto& g : grad_) out.push_back(evaluate(g, std::span<const GaussianRational>(x)));
    return out;
  }

  std::size_t jacobian_rank(std::span<const GaussianRational> point) const {
    const GaussianVector xg = real_coordinates(point);
    RationalVector x;
    for (const auto& v : xg) x.push_back(v.real());
    RationalMatrix j(2, phi_.domain_dim());
    for (std::size_t c = 0; c < phi_.domain_dim(); ++c) {
      j(0, c) = grad_[c].is_zero() ? Rational(0) : evaluate(real_part(grad_[c]), std::span<const Rational>(x));
      j(1, c) = grad_[c].is_zero() ? Rational(0) : evaluate(imag_part(grad_[c]), std::span<const Rational>(x));
    }
    return rank(j);
  }

 private:
  const RealPolyMap& phi_;
  std::vector<ComplexPoly> grad_;
};

void finish(KaehlerReport& r) {
  const std::size_t n = r.gradients.size();
  r.bilinear = GaussianMatrix(n, n);
  r.isotropy_ok = true;
  r.pairwise_orthogonal = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const GaussianRational d = bilinear_dot(std::span<const GaussianRational>(r.gradients[a]),
                                              std::span<const GaussianRational>(r.gradients[b]));
      r.bilinear(a, b) = d;
      r.bilinear(b, a) = d;
      if (!d.is_zero()) (a == b ? r.isotropy_ok : r.pairwise_orthogonal) = false;
    }
  r.verdict = r.rank > r.half_dim ? KaehlerReport::Verdict::NotKaehlerCertified
                                  : KaehlerReport::Verdict::Inconclusive;
}

}  // namespace

GaussianVector gradient_at(const RealPolyMap& phi, std::span<const GaussianRational> point) {
  return GradientField(phi).at(point);
}

KaehlerReport span_report(const RealPolyMap& phi, const std::vector<GaussianVector>& points) {
  const GradientField field(phi);
  KaehlerReport r;
  r.half_dim = field.complex_dim();
  GaussianMatrix span(0, phi.domain_dim());
  for (const auto& p : points) {
    r.sample_points.push_back(p);
    r.gradients.push_back(field.at(p));
    r.jacobian_ranks.push_back(field.jacobian_rank(p));
    span.append_row(r.gradients.back());
    r.rank_history.push_back(rank(span));
  }
  r.rank = r.rank_history.empty() ? 0 : r.rank_history.back();
  finish(r);
  return r;
}

KaehlerReport search_points(const RealPolyMap& phi, std::size_t budget, std::uint64_t seed) {
  const GradientField field(phi);
  const GaussianRational alphabet[] = {
      GaussianRational(0),
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational::i(),
      -GaussianRational::i(),
      GaussianRational(Rational(1), Rational(-1)),
  };
  std::mt19937_64 rng(seed);
  KaehlerReport r;
  r.half_dim = field.complex_dim();
  GaussianMatrix span(0, phi.domain_dim());
  for (std::size_t trial = 0; trial < budget && r.rank <= r.half_dim; ++trial) {
    GaussianVector p;
    for (std::size_t k = 0; k < field.complex_dim(); ++k) p.push_back(alphabet[rng() % std::size(alphabet)]);
    GaussianVector g = field.at(p);
    GaussianMatrix candidate = span;
    candidate.append_row(g);
    const std::size_t new_rank = rank(candidate);
    if (new_rank <= r.rank) continue;
    span = std::move(candidate);
    r.rank = new_rank;
    r.sample_points.push_back(std::move(p));
    r.gradients.push_back(std::move(g));
    r.jacobian_ranks.push_back(field.jacobian_rank(r.sample_points.back()));
    r.rank_history.push_back(new_rank);
  }
  finish(r);
  return r;
}

}  // namespace hmlift
