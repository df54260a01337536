#include "pairwalk/pgst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pairwalk {

const char* pgst_hypothesis_name(PGSTHypothesis h) {
  switch (h) {
    case PGSTHypothesis::None: return "none";
    case PGSTHypothesis::NonBipartite: return "non-bipartite";
    case PGSTHypothesis::BipartiteSameSide: return "bipartite-same-side";
    case PGSTHypothesis::BipartiteCrossSide: return "bipartite-cross-side";
  }
  return "none";
}

HypothesisReport pgst_hypotheses(const Graph& g, const ExactSpectrum& base, PairState p1,
                                 PairState p2, double tol) {
  const auto r_opt = g.regularity();
  if (!r_opt || *r_opt <= 2)
    throw Error(ErrorCode::Unsupported, "hypothesis check needs an r-regular base with r > 2");
  const int r = *r_opt;

  HypothesisReport report;
  auto check = [&report](const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, detail});
    return passed;
  };

  const PSTCertificate cert = certify_pst(base, p1, p2, tol);
  const bool pst_at_half_pi =
      cert.verdict && cert.delta == 1 && cert.g == 2;  // t0 = pi/(g sqrt(delta)) = pi/2
  check("base-pst-at-pi-over-2", pst_at_half_pi,
        cert.verdict ? "base PST at t0 = pi/" + std::to_string(cert.g) +
                           (cert.delta == 1 ? "" : " sqrt(" + std::to_string(cert.delta) + ")")
                     : "no base PST: condition (" + cert.violated_condition + ") fails");

  const bool r_plus_1_absent = !base.contains(ExactScalar::integer(r + 1));
  check("r-plus-1-not-eigenvalue", r_plus_1_absent,
        "r+1 = " + std::to_string(r + 1) + (r_plus_1_absent ? " absent from" : " present in") +
            " the base spectrum");

  if (!g.is_bipartite()) {
    const bool divisible = (r + 2) % 4 == 0;
    check("(r+2)/4-integer", divisible, "(r+2)/4 = " + std::to_string(r + 2) + "/4");
    if (pst_at_half_pi && r_plus_1_absent && divisible)
      report.applicable = PGSTHypothesis::NonBipartite;
    return report;
  }

  const Bipartition& sides = *g.bipartition();
  if (sides.same_side(p1.a, p1.b)) {
    const bool divisible = (r + 2) % 4 == 0;
    check("(r+2)/4-integer", divisible, "(r+2)/4 = " + std::to_string(r + 2) + "/4");
    if (pst_at_half_pi && r_plus_1_absent && divisible)
      report.applicable = PGSTHypothesis::BipartiteSameSide;
  } else {
    const bool half_int = (3 * r) % 2 == 0;
    const bool quarter_int = (5 * r + 2) % 4 == 0;
    const bool same_parity =
        half_int && quarter_int && ((3 * r / 2) % 2 == ((5 * r + 2) / 4) % 2);
    check("3r/2-integer", half_int, "3r/2 = " + std::to_string(3 * r) + "/2");
    check("(5r+2)/4-integer", quarter_int, "(5r+2)/4 = " + std::to_string(5 * r + 2) + "/4");
    check("equal-parity", same_parity,
          half_int && quarter_int
              ? std::to_string(3 * r / 2) + " vs " + std::to_string((5 * r + 2) / 4)
              : "not both integers");
    if (pst_at_half_pi && r_plus_1_absent && same_parity)
      report.applicable = PGSTHypothesis::BipartiteCrossSide;
  }
  return report;
}

std::vector<double> candidate_times(std::int64_t ell_max) {
  if (ell_max < 0) throw Error(ErrorCode::InvalidParameter, "ell_max must be nonnegative");
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(ell_max) + 1);
  for (std::int64_t ell = 0; ell <= ell_max; ++ell)
    times.push_back((4.0 * static_cast<double>(ell) + 0.5) * std::numbers::pi);
  return times;
}

PGSTReport search_pgst(const SpectralDecomposition& base_dec,
                       const std::optional<Bipartition>& bipartition, int r,
                       const PGSTQuery& query) {
  if (query.epsilon <= 0.0 || query.epsilon >= 1.0)
    throw Error(ErrorCode::InvalidParameter, "epsilon must lie in (0, 1)");
  if (query.ell_max < 0)
    throw Error(ErrorCode::InvalidParameter, "ell_max must be nonnegative");

  auto fidelity_at = [&](double t) {
    return total_pair_amplitude(base_dec, bipartition, query.pair1, query.pair2, r, t).fidelity;
  };

  PGSTReport report;
  report.best_fidelity = -1.0;
  const double target = 1.0 - query.epsilon;
  for (std::int64_t ell = 0; ell <= query.ell_max; ++ell) {
    const double t = (4.0 * static_cast<double>(ell) + 0.5) * std::numbers::pi;
    const double f = fidelity_at(t);
    if (f > report.best_fidelity) {
      report.best_fidelity = f;
      report.best_time = t;
      report.best_ell = ell;
      report.trace.push_back({ell, t, f});
    }
    if (report.best_fidelity >= target) break;
  }

  if (query.refine) {
    // Golden-section polish in a ±pi/8 window around the best candidate.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = report.best_time - std::numbers::pi / 8.0;
    double hi = report.best_time + std::numbers::pi / 8.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = fidelity_at(x1), f2 = fidelity_at(x2);
    for (int iter = 0; iter < 40; ++iter) {
      if (f1 < f2) {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + gr * (hi - lo); f2 = fidelity_at(x2);
      } else {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - gr * (hi - lo); f1 = fidelity_at(x1);
      }
    }
    const double t_ref = (f1 > f2) ? x1 : x2;
    const double f_ref = std::max(f1, f2);
    if (f_ref > report.best_fidelity) {
      report.best_fidelity = f_ref;
      report.best_time = t_ref;
      report.trace.push_back({report.best_ell, t_ref, f_ref});
    }
  }

  report.target_reached = report.best_fidelity >= target;
  return report;
}

double kronecker_quality(std::int64_t ell, const std::vector<double>& deltas) {
  double worst = 0.0;
  for (double d : deltas) {
    if (d <= 0.0) throw Error(ErrorCode::InvalidParameter, "deltas must be positive");
    const long double angle =
        static_cast<long double>(d) * (4.0L * static_cast<long double>(ell) + 0.5L) *
        std::numbers::pi_v<long double> / 2.0L;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    long double rem = std::fmod(angle, two_pi);
    if (rem < 0) rem += two_pi;
    const long double dist = std::min(rem, two_pi - rem);
    worst = std::max(worst, static_cast<double>(dist));
  }
  return worst;
}

}  // namespace pairwalk
