#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pairwalk/families.hpp"
#include "pairwalk/pgst.hpp"
#include "pairwalk/pst.hpp"

namespace pairwalk {

using Json = nlohmann::json;

Json graph_summary_json(const BuiltGraph& built);
Json spectrum_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                   double tolerance);
Json support_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                  PairState p, double tol);
Json cospectral_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                     PairState p1, PairState p2, double tol);
Json amplitude_json(PairState p1, PairState p2, double t, const Amplitude& a);
Json certificate_json(const PSTCertificate& cert);
Json scan_json(const ScanReport& report);
Json hypothesis_json(const HypothesisReport& report);
Json pgst_report_json(const PGSTQuery& query, const PGSTReport& report,
                      const std::optional<HypothesisReport>& hypotheses);

/// Two-column CSV ("time,fidelity") of pair fidelities over an inclusive
/// uniform time grid.
std::string fidelity_sweep_csv(const SpectralDecomposition& dec, PairState p1, PairState p2,
                               double t0, double t1, int steps);

}  // namespace pairwalk
