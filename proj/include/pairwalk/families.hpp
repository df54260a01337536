#pragma once

#include <map>
#include <optional>
#include <string>

#include "pairwalk/graph.hpp"
#include "pairwalk/spectral.hpp"

namespace pairwalk {

using ParamMap = std::map<std::string, std::string>;

/// Parses "k=v,k=v,..." (list-valued entries use ':' between items).
ParamMap parse_params(const std::string& text);

/// A graph built from a named family, keeping the construction recipe and,
/// for total graphs, the base graph and the vertex labels.
struct BuiltGraph {
  Graph graph;
  std::string family;
  ParamMap params;
  std::optional<Graph> base;  // total graphs built from a base family
  std::string base_family;
  ParamMap base_params;
  std::vector<TotalGraphLabel> labels;  // nonempty only for total graphs
};

/// Families: complete(n), cycle(n), circulant(n, s=a:b:...), cocktail(m),
/// hypercube(d), petersen, total (requires base_family/base_params).
BuiltGraph build_family_graph(const std::string& family, const std::string& params,
                              const std::string& base_family = "",
                              const std::string& base_params = "");

/// Parses a compact fixture descriptor "family", "family:params", or
/// "total:base=FAMILY,<base params>".
BuiltGraph build_fixture(const std::string& descriptor);

/// Best available exact spectrum for a built graph: the total-graph closed
/// form when the graph was built as a total graph over an integer-spectrum
/// regular base (r > 1), otherwise the rounded-and-verified integer spectrum
/// of the graph itself; nullopt when neither applies.
std::optional<ExactSpectrum> preferred_exact_spectrum(const BuiltGraph& built, double tol);

}  // namespace pairwalk
