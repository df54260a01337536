#include "pairwalk/report.hpp"

#include <sstream>

namespace pairwalk {

namespace {

Json eigenvalue_ref(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                    int j) {
  Json ref;
  ref["numeric"] = dec.eigenvalues[static_cast<std::size_t>(j)];
  if (exact) ref["exact"] = exact->entries[static_cast<std::size_t>(j)].value.str();
  return ref;
}

Json pair_json(PairState p) { return Json::array({p.a, p.b}); }

}  // namespace

Json graph_summary_json(const BuiltGraph& built) {
  const Graph& g = built.graph;
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  const auto r = g.regularity();
  j["regular"] = r ? Json(*r) : Json(nullptr);
  if (g.is_bipartite()) {
    const Bipartition& sides = *g.bipartition();
    j["bipartite"] = true;
    j["bipartition_sizes"] = Json::array({sides.side_size(0), sides.side_size(1)});
  } else {
    j["bipartite"] = false;
  }
  if (!built.family.empty()) {
    j["family"] = built.family;
    Json params(Json::value_t::object);
    for (const auto& [k, v] : built.params) params[k] = v;
    j["params"] = params;
    if (built.base) {
      Json base;
      base["family"] = built.base_family;
      Json base_params(Json::value_t::object);
      for (const auto& [k, v] : built.base_params) base_params[k] = v;
      base["params"] = base_params;
      j["base"] = base;
    }
  }
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  if (!built.labels.empty()) {
    Json labels = Json::array();
    for (const auto& label : built.labels) {
      Json l;
      l["index"] = label.index;
      if (label.origin == VertexOrigin::BaseVertex) {
        l["origin"] = "vertex";
        l["vertex"] = label.base_vertex;
      } else {
        l["origin"] = "edge";
        l["edge"] = Json::array({label.base_edge.first, label.base_edge.second});
      }
      labels.push_back(l);
    }
    j["labels"] = labels;
  }
  return j;
}

Json spectrum_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                   double tolerance) {
  Json j;
  Json values = Json::array();
  for (int i = 0; i < dec.count(); ++i) {
    Json entry;
    entry["numeric"] = dec.eigenvalues[static_cast<std::size_t>(i)];
    entry["multiplicity"] = dec.multiplicity(i);
    if (exact) entry["exact"] = exact->entries[static_cast<std::size_t>(i)].value.str();
    values.push_back(entry);
  }
  j["eigenvalues"] = values;
  j["tolerance"] = tolerance;
  if (exact)
    j["exact_source"] =
        exact->source == ExactSource::IntegerBase ? "integer-base" : "total-closed-form";
  else
    j["exact_source"] = nullptr;
  return j;
}

Json support_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                  PairState p, double tol) {
  Json j;
  j["pair"] = pair_json(p);
  Json support = Json::array();
  for (int idx : eigenvalue_support(dec, p, tol)) support.push_back(eigenvalue_ref(dec, exact, idx));
  j["support"] = support;
  j["tolerance"] = tol;
  return j;
}

Json cospectral_json(const SpectralDecomposition& dec, const std::optional<ExactSpectrum>& exact,
                     PairState p1, PairState p2, double tol) {
  Json j;
  j["pair"] = pair_json(p1);
  j["partner"] = pair_json(p2);
  j["tolerance"] = tol;
  const auto partition = strongly_cospectral(dec, p1, p2, tol);
  j["strongly_cospectral"] = partition.has_value();
  if (partition) {
    Json plus = Json::array(), minus = Json::array(), support = Json::array();
    for (int idx : partition->plus) plus.push_back(eigenvalue_ref(dec, exact, idx));
    for (int idx : partition->minus) minus.push_back(eigenvalue_ref(dec, exact, idx));
    std::vector<int> all = partition->plus;
    all.insert(all.end(), partition->minus.begin(), partition->minus.end());
    std::sort(all.begin(), all.end());
    for (int idx : all) support.push_back(eigenvalue_ref(dec, exact, idx));
    j["plus"] = plus;
    j["minus"] = minus;
    j["support"] = support;
  }
  return j;
}

Json amplitude_json(PairState p1, PairState p2, double t, const Amplitude& a) {
  Json j;
  j["pair"] = pair_json(p1);
  j["partner"] = pair_json(p2);
  j["time"] = t;
  j["value"] = Json{{"re", a.value.real()}, {"im", a.value.imag()}};
  j["fidelity"] = a.fidelity;
  return j;
}

Json certificate_json(const PSTCertificate& cert) {
  Json j;
  j["pair"] = pair_json(cert.pair1);
  j["partner"] = pair_json(cert.pair2);
  j["verdict"] = cert.verdict ? "yes" : "no";
  if (cert.verdict) {
    Json support = Json::array(), plus = Json::array(), minus = Json::array();
    Json support_numeric = Json::array();
    for (const auto& v : cert.support) {
      support.push_back(v.str());
      support_numeric.push_back(v.value());
    }
    for (const auto& v : cert.predicted_plus) plus.push_back(v.str());
    for (const auto& v : cert.predicted_minus) minus.push_back(v.str());
    j["support"] = support;
    j["support_numeric"] = support_numeric;
    j["plus"] = plus;
    j["minus"] = minus;
    j["g"] = cert.g;
    j["delta"] = cert.delta;
    j["t0"] = cert.t0;
    j["fidelity_at_t0"] = cert.fidelity_at_t0;
    j["fidelity_at_half_t0"] = cert.fidelity_at_half_t0;
    j["violation"] = nullptr;
  } else {
    j["violation"] = Json{{"condition", cert.violated_condition},
                          {"reason", cert.violation_reason}};
  }
  return j;
}

Json scan_json(const ScanReport& report) {
  Json j;
  j["dimension"] = report.dimension;
  j["pair_states"] = report.pair_states;
  j["pairs_examined"] = report.pairs_examined;
  j["count"] = report.certified.size();
  Json certified = Json::array();
  for (const auto& cert : report.certified) certified.push_back(certificate_json(cert));
  j["certified"] = certified;
  return j;
}

Json hypothesis_json(const HypothesisReport& report) {
  Json j;
  j["applicable"] = pgst_hypothesis_name(report.applicable);
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Json pgst_report_json(const PGSTQuery& query, const PGSTReport& report,
                      const std::optional<HypothesisReport>& hypotheses) {
  Json j;
  j["pair"] = pair_json(query.pair1);
  j["partner"] = pair_json(query.pair2);
  j["epsilon"] = query.epsilon;
  j["ell_max"] = query.ell_max;
  j["refine"] = query.refine;
  j["best_time"] = report.best_time;
  j["best_fidelity"] = report.best_fidelity;
  j["best_ell"] = report.best_ell;
  j["target_reached"] = report.target_reached;
  if (hypotheses)
    j["hypotheses"] = hypothesis_json(*hypotheses);
  else
    j["hypotheses"] = nullptr;
  Json trace = Json::array();
  for (const auto& entry : report.trace)
    trace.push_back(Json{{"ell", entry.ell}, {"time", entry.time}, {"fidelity", entry.fidelity}});
  j["trace"] = trace;
  return j;
}

std::string fidelity_sweep_csv(const SpectralDecomposition& dec, PairState p1, PairState p2,
                               double t0, double t1, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidParameter, "sweep needs at least one step");
  std::ostringstream out;
  out << "time,fidelity\n";
  out.precision(17);
  for (int i = 0; i <= steps; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps);
    out << t << "," << pair_amplitude(dec, p1, p2, t).fidelity << "\n";
  }
  return out.str();
}

}  // namespace pairwalk
