#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hermispec/enumerate.hpp"
#include "hermispec/error.hpp"
#include "hermispec/families.hpp"
#include "hermispec/graph_json.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/registry.hpp"

namespace hermispec {

/// Named-graph grammar, components joined by '+':
///   P:n  C:n  C1:n  C2:n  D:n  K:n  Gt:t  Gttm:t,t+m  Theta:p,q,r  E:r  Y1:r  Y2:r
///   (x) for a registry letter x (or (x#2) for an alternate class)
///   a path to a graph JSON file, or inline graph JSON starting with '{'
inline const char* named_grammar_help() {
  return "P:n C:n C1:n C2:n D:n K:n Gt:t Gttm:t,t+m Theta:p,q,r E:r Y1:r Y2:r (letter), joined by '+'; "
         "or a graph JSON file / inline JSON";
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<int> parse_params(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("'" + what + "': empty parameter");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError("'" + what + "': parameter '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline MixedGraph parse_component(const std::string& raw, const Registry* reg) {
  const std::string c = trim(raw);
  if (c.empty()) throw ParseError("empty graph component");
  if (c.front() == '(') {
    if (c.back() != ')' || c.size() < 3) throw ParseError("'" + c + "': letter names look like (o)");
    const std::string name = c.substr(1, c.size() - 2);
    if (!reg) throw InvalidArgument("letter graph " + c + " needs a registry");
    return reg->get(name);
  }
  const auto colon = c.find(':');
  if (colon == std::string::npos) throw ParseError("'" + c + "': expected FAMILY:params, (letter) or JSON");
  const std::string fam = c.substr(0, colon);
  const auto p = parse_params(c.substr(colon + 1), c);
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw ParseError("'" + c + "': " + fam + " takes " + std::to_string(k) + " parameter(s)");
  };
  using namespace families;
  if (fam == "P") return need(1), path(p[0]);
  if (fam == "C") return need(1), cycle(p[0], 0);
  if (fam == "C1") return need(1), cycle(p[0], 1);
  if (fam == "C2") return need(1), cycle(p[0], 2);
  if (fam == "D") return need(1), d_n(p[0]);
  if (fam == "K") return need(1), complete(p[0]);
  if (fam == "Gt") return need(1), g_t(p[0]);
  if (fam == "Gttm") return need(2), g_t_tm(p[0], p[1]);
  if (fam == "Theta") return need(3), theta(p[0], p[1], p[2]);
  if (fam == "Y1") return need(1), y1(p[0]);
  if (fam == "Y2") return need(1), y2(p[0]);
  if (fam == "E") {
    need(1);
    const std::string key = "E" + std::to_string(p[0]);
    if (reg && reg->has(key)) return reg->get(key);
    return e_r(p[0]);
  }
  throw ParseError("'" + c + "': unknown family '" + fam + "'");
}

}  // namespace detail

/// Parses the named-graph grammar; components become a disjoint union in order.
inline MixedGraph parse_graph_spec(const std::string& text, const Registry* reg = nullptr) {
  const std::string t = detail::trim(text);
  if (t.empty()) throw ParseError("empty graph specification");
  if (t.front() == '{') return graph_from_json(parse_json_text(t, "inline graph"));
  if (t.find(':') == std::string::npos && t.front() != '(' && std::filesystem::exists(t)) {
    std::ifstream in(t);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(parse_json_text(ss.str(), t));
  }
  std::vector<MixedGraph> parts;
  // getline would drop a trailing empty piece, so a dangling '+' must be caught here.
  std::size_t from = 0;
  for (;;) {
    const auto plus = t.find('+', from);
    parts.push_back(detail::parse_component(t.substr(from, plus == std::string::npos ? std::string::npos : plus - from), reg));
    if (plus == std::string::npos) break;
    from = plus + 1;
  }
  return disjoint_union(parts);
}

struct NamedGraph {
  std::string name;
  MixedGraph graph;
};

/// Components allowed in guided mode: the connected graphs whose eigenvalues all lie in (-2,2)
/// with simple multiplicity, as listed in the admissible catalog, up to `max_order` vertices.
inline std::vector<NamedGraph> admissible_catalog(int max_order, const Registry& reg) {
  using namespace families;
  std::vector<NamedGraph> out;
  for (int k = 1; k <= max_order; ++k) out.push_back({"P:" + std::to_string(k), path(k)});
  for (int k = 3; k <= max_order; ++k) out.push_back({"C1:" + std::to_string(k), cycle(k, 1)});
  for (int k = 4; k <= max_order; ++k) out.push_back({"D:" + std::to_string(k), d_n(k)});
  for (int t = 1; t + 4 <= max_order; ++t) out.push_back({"Gt:" + std::to_string(t), g_t(t)});
  for (int t = 1; t + 4 <= max_order; ++t)
    for (int tm = t; 4 + t + tm <= max_order; ++tm)
      out.push_back({"Gttm:" + std::to_string(t) + "," + std::to_string(tm), g_t_tm(t, tm)});
  for (char l : admissible_letters())
    for (auto& [name, g] : reg.letter_variants(l))
      if (g.order() <= max_order) out.push_back({"(" + name + ")", g});
  return out;
}

/// Reverse lookup from class keys to catalog names.
class Namer {
 public:
  Namer(ClassIndex& index, const Registry* reg) : index_(index), reg_(reg) {}

  /// Name of a connected graph, or empty if not in the naming catalog.
  std::string name_connected(const MixedGraph& g) {
    extend(g.order());
    const auto k = index_.key_of_connected(g);
    auto it = names_.find(k);
    return it == names_.end() ? std::string() : it->second;
  }

  /// "P:2 + (o)" style; unnamed components are written as inline JSON.
  std::string name(const MixedGraph& g) {
    std::vector<std::string> parts;
    for (const auto& comp : g.simple().components()) {
      const auto sub = induced_subgraph(g, comp);
      auto n = name_connected(sub);
      parts.push_back(n.empty() ? graph_to_json(sub).dump() : n);
    }
    // Families, then letters, then inline JSON; family members by parameters.
    auto rank = [](const std::string& s) { return s.empty() ? 0 : s.front() == '(' ? 1 : s.front() == '{' ? 2 : 0; };
    std::sort(parts.begin(), parts.end(), [&](const std::string& a, const std::string& b) {
      if (rank(a) != rank(b)) return rank(a) < rank(b);
      const auto fa = a.substr(0, a.find(':'));
      const auto fb = b.substr(0, b.find(':'));
      if (fa != fb || rank(a) != 0) return a < b;
      try {
        return detail::parse_params(a.substr(a.find(':') + 1), a) < detail::parse_params(b.substr(b.find(':') + 1), b);
      } catch (const ParseError&) {
        return a < b;  // converse suffix
      }
    });
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
    return out;
  }

 private:
  void add(const std::string& name, const MixedGraph& g) {
    const auto k = index_.key_of_connected(g);
    names_.emplace(k, name);
    const auto kc = index_.key_of_connected(g.converse());
    if (kc != k) names_.emplace(kc, name + "^c");
  }

  void extend(int order) {
    using namespace families;
    for (int n = built_ + 1; n <= order; ++n) {
      add("P:" + std::to_string(n), path(n));
      if (n >= 3) {
        add("C:" + std::to_string(n), cycle(n, 0));
        add("C1:" + std::to_string(n), cycle(n, 1));
        add("C2:" + std::to_string(n), cycle(n, 2));
      }
      if (n >= 4) add("D:" + std::to_string(n), d_n(n));
      if (n >= 5) add("Gt:" + std::to_string(n - 4), g_t(n - 4));
      for (int t = 1; 2 * t <= n - 4; ++t) add("Gttm:" + std::to_string(t) + "," + std::to_string(n - 4 - t), g_t_tm(t, n - 4 - t));
      if (n >= 4 && n <= 8) add("E:" + std::to_string(n - 2), e_r(n - 2));
      if (n >= 4 && n <= 6) add("K:" + std::to_string(n), complete(n));
      if (reg_)
        for (const auto& [k, g] : reg_->graphs())
          if (g.order() == n && !k.empty() && k[0] != 'E') add("(" + k + ")", g);
    }
    built_ = std::max(built_, order);
  }

  ClassIndex& index_;
  const Registry* reg_;
  int built_ = 0;
  std::map<ClassKey, std::string> names_;
};

}  // namespace hermispec
