#include "pairwalk/families.hpp"

#include <sstream>

namespace pairwalk {

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidParameter, "parameter '" + item + "' is not of the form k=v");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

namespace {

int param_int(const ParamMap& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw Error(ErrorCode::InvalidParameter, "missing parameter '" + key + "'");
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParameter, "parameter '" + key + "' is not an integer");
  }
}

std::vector<int> param_int_list(const ParamMap& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw Error(ErrorCode::InvalidParameter, "missing parameter '" + key + "'");
  std::vector<int> out;
  std::stringstream in(it->second);
  std::string item;
  while (std::getline(in, item, ':')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameter, "list parameter '" + key + "' has non-integer item");
    }
  }
  return out;
}

Graph build_primitive(const std::string& family, const ParamMap& params) {
  if (family == "complete") return Graph::complete(param_int(params, "n"));
  if (family == "cycle") {
    const int n = param_int(params, "n");
    return Graph::circulant(n, {1, n - 1});
  }
  if (family == "circulant")
    return Graph::circulant(param_int(params, "n"), param_int_list(params, "s"));
  if (family == "cocktail") return Graph::cocktail_party(param_int(params, "m"));
  if (family == "hypercube") return Graph::hypercube(param_int(params, "d"));
  if (family == "petersen") return Graph::petersen();
  throw Error(ErrorCode::InvalidParameter, "unknown graph family '" + family + "'");
}

}  // namespace

BuiltGraph build_family_graph(const std::string& family, const std::string& params,
                              const std::string& base_family, const std::string& base_params) {
  if (family == "total") {
    if (base_family.empty())
      throw Error(ErrorCode::InvalidParameter, "family 'total' needs a base family");
    const ParamMap base_map = parse_params(base_params);
    Graph base = build_primitive(base_family, base_map);
    TotalGraph t = total_graph(base);
    return BuiltGraph{std::move(t.graph), family,   parse_params(params), std::move(base),
                      base_family,        base_map, std::move(t.labels)};
  }
  if (!base_family.empty())
    throw Error(ErrorCode::InvalidParameter, "base family is only meaningful for family 'total'");
  const ParamMap map = parse_params(params);
  return BuiltGraph{build_primitive(family, map), family, map, std::nullopt, "", {}, {}};
}

std::optional<ExactSpectrum> preferred_exact_spectrum(const BuiltGraph& built, double tol) {
  if (built.base) {
    const auto r = built.base->regularity();
    if (r && *r > 1) {
      const auto base_exact = exact_integer_spectrum(*built.base, tol);
      if (base_exact) return total_exact_spectrum(*built.base, *base_exact);
    }
  }
  return exact_integer_spectrum(built.graph, tol);
}

BuiltGraph build_fixture(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  const std::string family = descriptor.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  if (family == "total") {
    // "total:base=FAMILY,<base params>" — peel the base= key off.
    ParamMap map = parse_params(params);
    const auto it = map.find("base");
    if (it == map.end())
      throw Error(ErrorCode::InvalidParameter, "total fixture needs base=FAMILY");
    const std::string base_family = it->second;
    map.erase(it);
    std::string rest;
    for (const auto& [k, v] : map) rest += (rest.empty() ? "" : ",") + k + "=" + v;
    return build_family_graph("total", "", base_family, rest);
  }
  return build_family_graph(family, params);
}

}  // namespace pairwalk
