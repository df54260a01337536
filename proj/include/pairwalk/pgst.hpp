#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairwalk/pair_analysis.hpp"
#include "pairwalk/pst.hpp"

namespace pairwalk {

struct PGSTQuery {
  PairState pair1, pair2;
  double epsilon = 0.05;        // early exit once fidelity >= 1 - epsilon
  std::int64_t ell_max = 100000;
  bool refine = false;          // golden-section polish around the best candidate
};

struct TraceEntry {
  std::int64_t ell = 0;
  double time = 0.0;
  double fidelity = 0.0;
};

enum class PGSTHypothesis { None, NonBipartite, BipartiteSameSide, BipartiteCrossSide };

const char* pgst_hypothesis_name(PGSTHypothesis h);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Which sufficient condition for pretty good pair state transfer on T(G)
/// applies to the given base pair, with the individual checks that led there.
struct HypothesisReport {
  PGSTHypothesis applicable = PGSTHypothesis::None;
  std::vector<HypothesisCheck> checks;
};

/// Evaluates the sufficient conditions: base PST at pi/2 between the pairs,
/// r+1 absent from the base spectrum, and the divisibility/parity conditions
/// ((r+2)/4 integral; or, for bipartite cross-side pairs, 3r/2 and (5r+2)/4
/// integers of equal parity).
HypothesisReport pgst_hypotheses(const Graph& g, const ExactSpectrum& base, PairState p1,
                                 PairState p2, double tol);

/// Candidate times t = (4*ell + 1/2)*pi for ell = 0..ell_max, ascending.
std::vector<double> candidate_times(std::int64_t ell_max);

struct PGSTReport {
  double best_time = 0.0;
  double best_fidelity = 0.0;
  std::int64_t best_ell = 0;
  std::vector<TraceEntry> trace;  // strictly improving best-so-far records
  PGSTHypothesis hypothesis = PGSTHypothesis::None;  // filled by the caller
  bool target_reached = false;
};

/// Enumerates the candidate-time family, evaluating the closed-form total
/// pair amplitude at each time; deterministic for a fixed query. The search
/// is unconditional; hypothesis checking is recorded separately.
PGSTReport search_pgst(const SpectralDecomposition& base_dec,
                       const std::optional<Bipartition>& bipartition, int r,
                       const PGSTQuery& query);

/// Diagnostic phase-alignment score: max_j dist(delta_j (4*ell+1/2) pi / 2,
/// 2 pi Z). Small scores predict high candidate fidelity.
double kronecker_quality(std::int64_t ell, const std::vector<double>& deltas);

}  // namespace pairwalk
