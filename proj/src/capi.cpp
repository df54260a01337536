#include "pairwalk/pairwalk.h"

#include <cstring>
#include <memory>
#include <numbers>

#include "pairwalk/report.hpp"
#include "pairwalk/theorem_cases.hpp"

namespace {

using namespace pairwalk;

thread_local std::string g_last_error;

pw_status map_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return PW_ERR_INVALID_PARAMETER;
    case ErrorCode::InvalidMatrix: return PW_ERR_INVALID_MATRIX;
    case ErrorCode::NumericFailure: return PW_ERR_NUMERIC_FAILURE;
    case ErrorCode::Unsupported: return PW_ERR_UNSUPPORTED;
    case ErrorCode::CertificationUnavailable: return PW_ERR_CERTIFICATION_UNAVAILABLE;
    case ErrorCode::TooLarge: return PW_ERR_TOO_LARGE;
    case ErrorCode::Internal: return PW_ERR_INTERNAL;
  }
  return PW_ERR_INTERNAL;
}

template <typename Fn>
pw_status guarded(Fn&& fn) {
  try {
    fn();
    return PW_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_error(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

}  // namespace

struct pw_graph {
  pairwalk::BuiltGraph built;
};

struct pw_spectrum {
  pairwalk::SpectralDecomposition dec;
  std::optional<pairwalk::ExactSpectrum> exact;
  double grouping_tolerance = 0.0;
};

extern "C" {

const char* pw_version(void) { return "0.1.0"; }

const char* pw_status_name(pw_status status) {
  switch (status) {
    case PW_OK: return "ok";
    case PW_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case PW_ERR_INVALID_MATRIX: return "invalid-matrix";
    case PW_ERR_NUMERIC_FAILURE: return "numeric-failure";
    case PW_ERR_UNSUPPORTED: return "unsupported";
    case PW_ERR_CERTIFICATION_UNAVAILABLE: return "certification-unavailable";
    case PW_ERR_TOO_LARGE: return "too-large";
    case PW_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* pw_last_error(void) { return g_last_error.c_str(); }

void pw_string_free(char* s) { delete[] s; }

pw_status pw_graph_build(const char* family, const char* params, const char* base_family,
                         const char* base_params, pw_graph** out) {
  return guarded([&] {
    require(family && out, "family and out must be non-null");
    *out = new pw_graph{build_family_graph(family, params ? params : "",
                                           base_family ? base_family : "",
                                           base_params ? base_params : "")};
  });
}

pw_status pw_graph_from_edge_list(const char* text, pw_graph** out) {
  return guarded([&] {
    require(text && out, "text and out must be non-null");
    BuiltGraph built{Graph::from_edge_list_text(text), "", {}, std::nullopt, "", {}, {}};
    *out = new pw_graph{std::move(built)};
  });
}

void pw_graph_free(pw_graph* g) { delete g; }

pw_status pw_graph_vertex_count(const pw_graph* g, int32_t* out) {
  return guarded([&] {
    require(g && out, "graph and out must be non-null");
    *out = g->built.graph.vertex_count();
  });
}

pw_status pw_graph_edge_count(const pw_graph* g, int32_t* out) {
  return guarded([&] {
    require(g && out, "graph and out must be non-null");
    *out = g->built.graph.edge_count();
  });
}

pw_status pw_graph_summary_json(const pw_graph* g, char** json_out) {
  return guarded([&] {
    require(g && json_out, "graph and out must be non-null");
    *json_out = dup_string(graph_summary_json(g->built).dump());
  });
}

pw_status pw_spectrum_compute(const pw_graph* g, double grouping_tol, pw_spectrum** out) {
  return guarded([&] {
    require(g && out, "graph and out must be non-null");
    const Matrix l = g->built.graph.laplacian();
    const double tol = grouping_tol > 0.0 ? grouping_tol : default_grouping_tolerance(l);
    auto spectrum = std::make_unique<pw_spectrum>();
    spectrum->grouping_tolerance = tol;
    spectrum->exact = preferred_exact_spectrum(g->built, 1e-8);
    if (spectrum->exact)
      spectrum->dec = spectrum->exact->numeric();
    else
      spectrum->dec = eigendecompose_symmetric(l, tol);
    *out = spectrum.release();
  });
}

void pw_spectrum_free(pw_spectrum* s) { delete s; }

pw_status pw_spectrum_json(const pw_spectrum* s, char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    *json_out = dup_string(spectrum_json(s->dec, s->exact, s->grouping_tolerance).dump());
  });
}

pw_status pw_support_json(const pw_spectrum* s, int32_t a, int32_t b, double tol,
                          char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    const double t = tol > 0.0 ? tol : default_support_tolerance();
    *json_out = dup_string(support_json(s->dec, s->exact, PairState(a, b), t).dump());
  });
}

pw_status pw_cospectral_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c, int32_t d,
                             double tol, char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    const double t = tol > 0.0 ? tol : default_support_tolerance();
    *json_out = dup_string(
        cospectral_json(s->dec, s->exact, PairState(a, b), PairState(c, d), t).dump());
  });
}

pw_status pw_amplitude_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c, int32_t d,
                            double time, char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    const PairState p1(a, b), p2(c, d);
    *json_out =
        dup_string(amplitude_json(p1, p2, time, pair_amplitude(s->dec, p1, p2, time)).dump());
  });
}

pw_status pw_amplitude_sweep_csv(const pw_spectrum* s, int32_t a, int32_t b, int32_t c, int32_t d,
                                 double t0, double t1, int32_t steps, char** csv_out) {
  return guarded([&] {
    require(s && csv_out, "spectrum and out must be non-null");
    *csv_out = dup_string(fidelity_sweep_csv(s->dec, PairState(a, b), PairState(c, d), t0, t1,
                                             steps));
  });
}

pw_status pw_certify_pst_json(const pw_spectrum* s, int32_t a, int32_t b, int32_t c, int32_t d,
                              double tol, char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    if (!s->exact)
      throw Error(ErrorCode::CertificationUnavailable,
                  "no exact spectrum: eigenvalues are not all integers and no total-graph "
                  "closed form applies");
    const double t = tol > 0.0 ? tol : default_support_tolerance();
    *json_out = dup_string(
        certificate_json(certify_pst(*s->exact, PairState(a, b), PairState(c, d), t)).dump());
  });
}

pw_status pw_scan_pst_json(const pw_spectrum* s, double tol, char** json_out) {
  return guarded([&] {
    require(s && json_out, "spectrum and out must be non-null");
    if (!s->exact)
      throw Error(ErrorCode::CertificationUnavailable,
                  "no exact spectrum: eigenvalues are not all integers and no total-graph "
                  "closed form applies");
    const double t = tol > 0.0 ? tol : default_support_tolerance();
    *json_out = dup_string(scan_json(scan_all_pairs_pst(*s->exact, t)).dump());
  });
}

pw_status pw_search_pgst_json(const pw_graph* g, int32_t a, int32_t b, int32_t c, int32_t d,
                              double epsilon, int64_t ell_max, int32_t refine, double tol,
                              char** json_out) {
  return guarded([&] {
    require(g && json_out, "graph and out must be non-null");
    const Graph& base = g->built.graph;
    const auto r = base.regularity();
    if (!r || *r <= 1)
      throw Error(ErrorCode::Unsupported, "PGST search needs an r-regular base graph with r > 1");
    const double support_tol = tol > 0.0 ? tol : default_support_tolerance();

    PGSTQuery query;
    query.pair1 = PairState(a, b);
    query.pair2 = PairState(c, d);
    query.epsilon = epsilon;
    query.ell_max = ell_max;
    query.refine = refine != 0;

    const auto exact = exact_integer_spectrum(base, 1e-8);
    SpectralDecomposition dec;
    if (exact) {
      dec = exact->numeric();
    } else {
      const Matrix l = base.laplacian();
      dec = eigendecompose_symmetric(l, default_grouping_tolerance(l));
    }

    std::optional<HypothesisReport> hypotheses;
    if (exact && *r > 2)
      hypotheses = pgst_hypotheses(base, *exact, query.pair1, query.pair2, support_tol);

    PGSTReport report = search_pgst(dec, base.bipartition(), *r, query);
    if (hypotheses) report.hypothesis = hypotheses->applicable;
    *json_out = dup_string(pgst_report_json(query, report, hypotheses).dump());
  });
}

pw_status pw_theorem_cases_json(char** json_out) {
  return guarded([&] {
    require(json_out, "out must be non-null");
    Json cases = Json::array();
    for (const auto& tc : theorem_case_registry())
      cases.push_back(Json{{"case", tc.id}, {"kind", tc.kind}, {"description", tc.description}});
    *json_out = dup_string(cases.dump());
  });
}

pw_status pw_verify_theorem_json(const char* case_id, const char* params, char** json_out) {
  return guarded([&] {
    require(case_id && json_out, "case id and out must be non-null");
    const ParamMap overrides = parse_params(params ? params : "");
    const TheoremCaseResult result = run_theorem_case(case_id, overrides);
    for (const auto& tc : theorem_case_registry())
      if (tc.id == case_id) {
        *json_out = dup_string(theorem_result_json(tc, result).dump());
        return;
      }
    throw Error(ErrorCode::Internal, "case ran but is missing from the registry");
  });
}

}  // extern "C"
