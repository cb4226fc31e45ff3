#pragma once

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "hermispec/error.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/polynomial.hpp"
#include "hermispec/spectra.hpp"
#include "hermispec/switching.hpp"

namespace hermispec {

using Json = nlohmann::json;

/// {"n": int, "undirected": [[u,v],...] with u<v, "arcs": [[tail,head],...]}
inline Json graph_to_json(const MixedGraph& g) {
  Json u = Json::array();
  for (auto [a, b] : g.undirected()) u.push_back({a, b});
  Json a = Json::array();
  for (auto [t, h] : g.arcs()) a.push_back({t, h});
  return {{"n", g.order()}, {"undirected", u}, {"arcs", a}};
}

inline MixedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("graph: field 'n' must be an integer");
  const int n = j["n"].get<int>();
  auto pairs = [&](const char* field, bool ordered) {
    std::vector<Edge> out;
    if (!j.contains(field)) return out;
    const auto& arr = j[field];
    if (!arr.is_array()) throw ParseError(std::string("graph: field '") + field + "' must be an array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto& p = arr[k];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ParseError(std::string("graph: ") + field + "[" + std::to_string(k) + "] must be a pair of integers");
      const int a = p[0].get<int>();
      const int b = p[1].get<int>();
      if (!ordered && a >= b)
        throw ParseError(std::string("graph: ") + field + "[" + std::to_string(k) + "] needs u < v");
      out.emplace_back(a, b);
    }
    return out;
  };
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "n" && it.key() != "undirected" && it.key() != "arcs")
      throw ParseError("graph: unknown field '" + it.key() + "'");
  return MixedGraph::build(n, pairs("undirected", false), pairs("arcs", true));
}

/// Parses text, reporting line and column of syntax errors.
inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

/// Vertex -> "1" | "-1" | "i" | "-i".
inline Json theta_to_json(const SwitchingFunction& t) {
  Json j = Json::object();
  for (int v = 0; v < t.size(); ++v) j[std::to_string(v)] = t(v).to_string();
  return j;
}

inline SwitchingFunction theta_from_json(const Json& j, int n) {
  if (!j.is_object()) throw ParseError("theta: expected an object");
  SwitchingFunction t = SwitchingFunction::identity(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= n) throw ParseError("theta: bad vertex key '" + it.key() + "'");
    if (!it.value().is_string()) throw ParseError("theta[" + it.key() + "] must be a string");
    try {
      t.theta[v] = GaussianUnit::parse(it.value().get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("theta[" + it.key() + "]: " + e.what());
    }
    seen[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError("theta: missing vertex " + std::to_string(v));
  return t;
}

/// Constant term first; coefficients outside int64 are written as strings.
inline Json poly_to_json(const IntPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j.push_back(static_cast<long long>(c));
    else
      j.push_back(c.str());
  }
  return j;
}

inline IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array");
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (x.is_number_integer())
      c.emplace_back(x.get<long long>());
    else if (x.is_string())
      c.emplace_back(x.get<std::string>());
    else
      throw ParseError("polynomial: coefficients must be integers");
  }
  return IntPolynomial(std::move(c));
}

inline Json spectrum_to_json(const Spectrum& s) {
  Json j{{"values", s.values}};
  if (s.exact) {
    Json e = Json::array();
    for (const auto& t : *s.exact) e.push_back({t.p, t.q});
    j["exact"] = e;
  }
  return j;
}

}  // namespace hermispec
