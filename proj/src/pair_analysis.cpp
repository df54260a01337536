#include "pairwalk/pair_analysis.hpp"

#include <cmath>

namespace pairwalk {

namespace {

Vector pair_vector(int dim, PairState p) {
  if (p.a >= dim || p.b >= dim)
    throw Error(ErrorCode::InvalidParameter, "pair state vertex out of range");
  Vector v = Vector::Zero(dim);
  v(p.a) = 1.0;
  v(p.b) = -1.0;
  return v;
}

Vector projected_pair(const Matrix& e, PairState p) {
  return e.col(p.a) - e.col(p.b);
}

/// Oscillatory factor of the total-graph entry formula for one base theta.
Complex theta_factor(double theta, int r, double t) {
  const double disc = static_cast<double>(r + 2) * (r + 2) - 4.0 * theta;
  if (disc < 1e-12)
    throw Error(ErrorCode::Unsupported, "degenerate theta with (r+2)^2 = 4*theta");
  const double delta = std::sqrt(disc);
  const Complex phase = std::exp(Complex(0.0, -t * (r + 2.0 * theta + 2.0) / 2.0));
  return phase * Complex(std::cos(delta * t / 2.0),
                         (2.0 - r) / delta * std::sin(delta * t / 2.0));
}

/// Splits the decomposition for the bipartite branch: every index except the
/// top one (asserted to be 2r) is oscillatory; the 2r projector contributes
/// the pure exp(-3itr) term.
int bipartite_top_index(const SpectralDecomposition& dec, int r) {
  const int last = dec.count() - 1;
  if (std::abs(dec.eigenvalues[static_cast<std::size_t>(last)] - 2.0 * r) > 1e-6)
    throw Error(ErrorCode::Internal, "bipartite regular base must end at eigenvalue 2r");
  return last;
}

}  // namespace

PairState::PairState(int a_, int b_) : a(a_), b(b_) {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidParameter, "pair state needs vertices >= 0");
  if (a == b) throw Error(ErrorCode::InvalidParameter, "pair state needs two distinct vertices");
}

double default_support_tolerance() { return 1e-7 * std::sqrt(2.0); }

std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, PairState p, double tol) {
  std::vector<int> support;
  for (int j = 0; j < dec.count(); ++j)
    if (projected_pair(dec.projectors[static_cast<std::size_t>(j)], p).norm() > tol)
      support.push_back(j);
  if (support.empty())
    throw Error(ErrorCode::NumericFailure,
                "empty eigenvalue support; support tolerance is misconfigured");
  return support;
}

std::optional<SignPartition> strongly_cospectral(const SpectralDecomposition& dec, PairState p1,
                                                 PairState p2, double tol) {
  if (p1.same_unordered(p2))
    throw Error(ErrorCode::InvalidParameter, "strong cospectrality needs two distinct pair states");
  SignPartition partition;
  for (int j = 0; j < dec.count(); ++j) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    const Vector v1 = projected_pair(e, p1);
    const Vector v2 = projected_pair(e, p2);
    const bool in1 = v1.norm() > tol;
    const bool in2 = v2.norm() > tol;
    if (!in1 && !in2) continue;
    if (in1 != in2) return std::nullopt;  // supports differ
    const double d_plus = (v1 - v2).norm();
    const double d_minus = (v1 + v2).norm();
    if (d_plus <= tol && d_minus > 10.0 * tol)
      partition.plus.push_back(j);
    else if (d_minus <= tol && d_plus > 10.0 * tol)
      partition.minus.push_back(j);
    else
      return std::nullopt;
  }
  return partition;
}

Amplitude pair_amplitude(const SpectralDecomposition& dec, PairState p1, PairState p2, double t) {
  Complex total{0.0, 0.0};
  for (int j = 0; j < dec.count(); ++j) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    const double overlap = e(p1.a, p2.a) - e(p1.a, p2.b) - e(p1.b, p2.a) + e(p1.b, p2.b);
    total += std::exp(Complex(0.0, -t * dec.eigenvalues[static_cast<std::size_t>(j)])) * overlap;
  }
  const Complex value = 0.5 * total;
  return Amplitude{value, std::abs(value)};
}

Complex total_vertex_amplitude(const SpectralDecomposition& base_dec,
                               const std::optional<Bipartition>& bipartition, int a, int b, int r,
                               double t) {
  const int dim = base_dec.dimension();
  if (a < 0 || a >= dim || b < 0 || b >= dim)
    throw Error(ErrorCode::InvalidParameter, "base vertex out of range");
  const int skip = bipartition ? bipartite_top_index(base_dec, r) : -1;
  Complex total{0.0, 0.0};
  for (int j = 0; j < base_dec.count(); ++j) {
    const double entry = base_dec.projectors[static_cast<std::size_t>(j)](a, b);
    if (j == skip) {
      total += std::exp(Complex(0.0, -3.0 * t * r)) * entry;
    } else {
      total += theta_factor(base_dec.eigenvalues[static_cast<std::size_t>(j)], r, t) * entry;
    }
  }
  return total;
}

Amplitude total_pair_amplitude(const SpectralDecomposition& base_dec,
                               const std::optional<Bipartition>& bipartition, PairState p1,
                               PairState p2, int r, double t) {
  const int dim = base_dec.dimension();
  if (p1.a >= dim || p1.b >= dim || p2.a >= dim || p2.b >= dim)
    throw Error(ErrorCode::InvalidParameter, "pair state must use base vertices");
  const int skip = bipartition ? bipartite_top_index(base_dec, r) : -1;
  Complex total{0.0, 0.0};
  for (int j = 0; j < base_dec.count(); ++j) {
    const Matrix& e = base_dec.projectors[static_cast<std::size_t>(j)];
    const double overlap = e(p1.a, p2.a) - e(p1.a, p2.b) - e(p1.b, p2.a) + e(p1.b, p2.b);
    if (j == skip) {
      total += std::exp(Complex(0.0, -3.0 * t * r)) * overlap;
    } else {
      total += theta_factor(base_dec.eigenvalues[static_cast<std::size_t>(j)], r, t) * overlap;
    }
  }
  const Complex value = 0.5 * total;
  return Amplitude{value, std::abs(value)};
}

}  // namespace pairwalk
