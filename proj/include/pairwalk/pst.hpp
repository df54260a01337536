#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairwalk/pair_analysis.hpp"
#include "pairwalk/spectral.hpp"

namespace pairwalk {

/// Number-field classification of an eigenvalue support set: all integers,
/// all quadratic integers (x + y_j sqrt(delta))/2 over one field with shared
/// x and same-parity y_j, or incompatible with perfect pair state transfer.
struct FieldClass {
  enum class Kind { AllIntegers, Quadratic, Incompatible };

  Kind kind = Kind::Incompatible;
  std::int64_t shared_x = 0;      // Quadratic only
  std::int64_t delta = 1;         // Quadratic only (>1); 1 for AllIntegers
  std::vector<std::int64_t> ys;   // Quadratic only, aligned with the input
  std::string reason;             // Incompatible only
};

FieldClass classify_support(const std::vector<ExactScalar>& values);

struct PSTCertificate {
  bool verdict = false;
  PairState pair1, pair2;

  // Populated on verdict yes.
  std::vector<ExactScalar> support;  // descending: theta_0 > ... > theta_l
  std::vector<ExactScalar> predicted_plus;
  std::vector<ExactScalar> predicted_minus;
  std::int64_t g = 0;
  std::int64_t delta = 1;
  double t0 = 0.0;
  double fidelity_at_t0 = 0.0;
  double fidelity_at_half_t0 = 0.0;

  // Populated on verdict no: which condition failed ("i", "ii", "iii",
  // "fixed-state") and why.
  std::string violated_condition;
  std::string violation_reason;
};

/// Exact certification of Laplacian perfect pair state transfer between two
/// distinct pair states, per the three-condition characterization: strong
/// cospectrality, support number-field compatibility, and the gcd/parity
/// rule on (theta_0 - theta_j)/sqrt(delta). Verdict yes is confirmed by a
/// direct fidelity evaluation at t0 = pi/(g sqrt(delta)).
PSTCertificate certify_pst(const ExactSpectrum& spectrum, PairState p1, PairState p2, double tol);

struct ScanReport {
  int dimension = 0;
  int pair_states = 0;
  std::int64_t pairs_examined = 0;
  std::vector<PSTCertificate> certified;  // verdict-yes certificates, lexicographic order
};

/// Exhaustive PST certification over all unordered pairs of distinct pair
/// states. Guarded to dimension <= 60.
ScanReport scan_all_pairs_pst(const ExactSpectrum& spectrum, double tol);

/// If U(t)(e_a - e_b) is (up to phase) another pair-state vector, returns
/// that pair; suited to reading off PST partners at a known transfer time
/// without an all-pairs scan.
std::optional<PairState> find_pst_partner_at(const SpectralDecomposition& dec, PairState p,
                                             double t, double fidelity_threshold = 1.0 - 1e-9);

}  // namespace pairwalk
