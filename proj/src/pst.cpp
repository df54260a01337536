#include "pairwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace pairwalk {

FieldClass classify_support(const std::vector<ExactScalar>& values) {
  if (values.empty())
    throw Error(ErrorCode::InvalidParameter, "cannot classify an empty support");

  FieldClass fc;
  const bool any_surd = std::any_of(values.begin(), values.end(),
                                    [](const ExactScalar& v) { return !v.is_rational(); });
  if (!any_surd) {
    for (const auto& v : values) {
      if (!v.is_integer()) {
        fc.kind = FieldClass::Kind::Incompatible;
        fc.reason = "non-integral rational eigenvalue " + v.str();
        return fc;
      }
    }
    fc.kind = FieldClass::Kind::AllIntegers;
    fc.delta = 1;
    return fc;
  }

  for (const auto& v : values) {
    if (v.is_rational()) {
      fc.kind = FieldClass::Kind::Incompatible;
      fc.reason = "support mixes integers and quadratic irrationals";
      return fc;
    }
  }
  const std::int64_t delta = values.front().surd_delta();
  const std::int64_t x = values.front().surd_x();
  const std::int64_t parity = ((values.front().surd_y() % 2) + 2) % 2;
  for (const auto& v : values) {
    if (v.surd_delta() != delta) {
      fc.kind = FieldClass::Kind::Incompatible;
      fc.reason = "support mixes fields Q(sqrt(" + std::to_string(delta) + ")) and Q(sqrt(" +
                  std::to_string(v.surd_delta()) + "))";
      return fc;
    }
    if (v.surd_x() != x) {
      fc.kind = FieldClass::Kind::Incompatible;
      fc.reason = "quadratic eigenvalues do not share the rational part x";
      return fc;
    }
    if (((v.surd_y() % 2) + 2) % 2 != parity) {
      fc.kind = FieldClass::Kind::Incompatible;
      fc.reason = "quadratic coefficients y_j have mixed parity";
      return fc;
    }
  }
  fc.kind = FieldClass::Kind::Quadratic;
  fc.shared_x = x;
  fc.delta = delta;
  for (const auto& v : values) fc.ys.push_back(v.surd_y());
  return fc;
}

namespace {

PSTCertificate refuse(PairState p1, PairState p2, const std::string& condition,
                      const std::string& reason) {
  PSTCertificate cert;
  cert.verdict = false;
  cert.pair1 = p1;
  cert.pair2 = p2;
  cert.violated_condition = condition;
  cert.violation_reason = reason;
  return cert;
}

}  // namespace

PSTCertificate certify_pst(const ExactSpectrum& spectrum, PairState p1, PairState p2, double tol) {
  if (spectrum.entries.empty())
    throw Error(ErrorCode::CertificationUnavailable, "spectrum carries no exact eigenvalues");
  if (p1.same_unordered(p2))
    throw Error(ErrorCode::InvalidParameter, "certification needs two distinct pair states");

  const SpectralDecomposition dec = spectrum.numeric();

  // (i) strong cospectrality, numerically, with the signed partition.
  const auto partition = strongly_cospectral(dec, p1, p2, tol);
  if (!partition)
    return refuse(p1, p2, "i", "pair states are not Laplacian strongly cospectral");

  // Fixed-state necessary condition: transfer needs both signs present.
  if (partition->plus.empty() || partition->minus.empty())
    return refuse(p1, p2, "fixed-state",
                  partition->plus.empty() ? "every support eigenvalue carries sign -"
                                          : "every support eigenvalue carries sign +");

  // Support ordered descending: theta_0 > theta_1 > ... > theta_l.
  struct SupportEntry {
    ExactScalar value = ExactScalar::integer(0);
    bool in_plus = false;
  };
  std::vector<SupportEntry> support;
  for (int j : partition->plus)
    support.push_back({spectrum.entries[static_cast<std::size_t>(j)].value, true});
  for (int j : partition->minus)
    support.push_back({spectrum.entries[static_cast<std::size_t>(j)].value, false});
  std::sort(support.begin(), support.end(), [](const SupportEntry& a, const SupportEntry& b) {
    return b.value.less_value(a.value);
  });

  // The sign sets depend on the orientation of the pair representatives;
  // picking e_d - e_c instead of e_c - e_d swaps them wholesale. Normalize to
  // the orientation placing theta_0 in the plus set, which condition (iii)
  // demands of any transferring pair.
  const bool flipped = !support.front().in_plus;
  if (flipped)
    for (auto& s : support) s.in_plus = !s.in_plus;

  // (ii) number-field compatibility.
  std::vector<ExactScalar> values;
  for (const auto& s : support) values.push_back(s.value);
  const FieldClass fc = classify_support(values);
  if (fc.kind == FieldClass::Kind::Incompatible)
    return refuse(p1, p2, "ii", fc.reason);

  // (iii) gcd/parity rule on q_j = (theta_0 - theta_j)/sqrt(delta).
  std::vector<std::int64_t> q(support.size(), 0);
  if (fc.kind == FieldClass::Kind::AllIntegers) {
    const std::int64_t top = support.front().value.as_integer();
    for (std::size_t j = 0; j < support.size(); ++j)
      q[j] = top - support[j].value.as_integer();
  } else {
    const std::int64_t y0 = fc.ys.empty() ? 0 : support.front().value.surd_y();
    for (std::size_t j = 0; j < support.size(); ++j)
      q[j] = (y0 - support[j].value.surd_y()) / 2;
  }
  std::int64_t g = 0;
  for (std::int64_t qj : q)
    if (qj != 0) g = std::gcd(g, qj);
  if (g == 0)
    throw Error(ErrorCode::Internal, "support collapsed to a single eigenvalue after sign split");
  for (std::size_t j = 0; j < support.size(); ++j) {
    const bool even = ((q[j] / g) % 2) == 0;
    if (even != support[j].in_plus)
      return refuse(p1, p2, "iii",
                    "eigenvalue " + support[j].value.str() + " has (theta_0-theta_j)/(g sqrt(delta)) " +
                        (even ? "even" : "odd") + " but sign " + (support[j].in_plus ? "+" : "-"));
  }

  PSTCertificate cert;
  cert.verdict = true;
  cert.pair1 = p1;
  cert.pair2 = p2;
  for (const auto& s : support) {
    cert.support.push_back(s.value);
    (s.in_plus ? cert.predicted_plus : cert.predicted_minus).push_back(s.value);
  }
  cert.g = g;
  cert.delta = fc.delta;
  cert.t0 = std::numbers::pi / (static_cast<double>(g) * std::sqrt(static_cast<double>(fc.delta)));
  cert.fidelity_at_t0 = pair_amplitude(dec, p1, p2, cert.t0).fidelity;
  cert.fidelity_at_half_t0 = pair_amplitude(dec, p1, p2, cert.t0 / 2.0).fidelity;
  if (cert.fidelity_at_t0 < 1.0 - 1e-8)
    throw Error(ErrorCode::Internal,
                "exact certificate not confirmed numerically; tolerances are misconfigured");
  return cert;
}

std::optional<PairState> find_pst_partner_at(const SpectralDecomposition& dec, PairState p,
                                             double t, double fidelity_threshold) {
  const int n = dec.dimension();
  ComplexVector w = ComplexVector::Zero(n);
  for (int j = 0; j < dec.count(); ++j) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    w += std::exp(Complex(0.0, -t * dec.eigenvalues[static_cast<std::size_t>(j)])) *
         (e.col(p.a) - e.col(p.b));
  }
  int c = 0, d = 1;
  for (int v = 0; v < n; ++v) {
    if (std::abs(w(v)) > std::abs(w(c))) { d = c; c = v; }
    else if (v != c && std::abs(w(v)) > std::abs(w(d))) { d = v; }
  }
  PairState candidate(std::min(c, d), std::max(c, d));
  const Complex overlap = 0.5 * (w(candidate.a) - w(candidate.b));
  if (std::abs(overlap) < fidelity_threshold) return std::nullopt;
  return candidate;
}

ScanReport scan_all_pairs_pst(const ExactSpectrum& spectrum, double tol) {
  const int n = spectrum.dimension;
  if (n > 60)
    throw Error(ErrorCode::TooLarge,
                "exhaustive pair-state scan is guarded to 60 vertices; certify chosen pairs instead");

  std::vector<PairState> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  ScanReport report;
  report.dimension = n;
  report.pair_states = static_cast<int>(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      ++report.pairs_examined;
      PSTCertificate cert = certify_pst(spectrum, pairs[i], pairs[j], tol);
      if (cert.verdict) report.certified.push_back(std::move(cert));
    }
  return report;
}

}  // namespace pairwalk
