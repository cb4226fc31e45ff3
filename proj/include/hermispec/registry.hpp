#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hermispec/error.hpp"
#include "hermispec/graph_json.hpp"
#include "hermispec/mixed_graph.hpp"

namespace hermispec {

#ifndef HERMISPEC_DATA_DIR
#define HERMISPEC_DATA_DIR "data"
#endif

inline std::string default_registry_path() { return std::string(HERMISPEC_DATA_DIR) + "/registry.json"; }

/// Reconstructed named graphs keyed by name ("o", "p", ..., "E3"), stored as graph JSON.
/// A letter with several matching classes keeps the extras as "o#2", "o#3", ...
class Registry {
 public:
  Registry() = default;

  static Registry load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open registry file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const Json j = parse_json_text(ss.str(), path);
    if (!j.is_object() || !j.contains("graphs") || !j["graphs"].is_object())
      throw ParseError(path + ": registry needs an object field 'graphs'");
    Registry r;
    for (auto it = j["graphs"].begin(); it != j["graphs"].end(); ++it) {
      try {
        r.graphs_.emplace(it.key(), graph_from_json(it.value()));
      } catch (const Error& e) {
        throw ParseError(path + ": graphs." + it.key() + ": " + e.what());
      }
    }
    if (j.contains("notes") && j["notes"].is_object())
      for (auto it = j["notes"].begin(); it != j["notes"].end(); ++it) r.notes_[it.key()] = it.value().get<std::string>();
    return r;
  }

  Json to_json() const {
    Json g = Json::object();
    for (const auto& [k, v] : graphs_) g[k] = graph_to_json(v);
    Json j{{"graphs", g}};
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write registry file '" + path + "'");
    out << to_json().dump(2) << "\n";
  }

  bool has(const std::string& name) const { return graphs_.count(name) > 0; }
  const MixedGraph& get(const std::string& name) const {
    auto it = graphs_.find(name);
    if (it == graphs_.end())
      throw InvalidArgument("registry has no graph '" + name + "'; run `hermispec reconstruct --write` first");
    return it->second;
  }
  void put(const std::string& name, MixedGraph g) { graphs_[name] = std::move(g); }
  void note(const std::string& name, std::string text) { notes_[name] = std::move(text); }
  const std::map<std::string, MixedGraph>& graphs() const { return graphs_; }
  const std::map<std::string, std::string>& notes() const { return notes_; }

  /// Every registry entry for a letter: "o", "o#2", ...
  std::vector<std::pair<std::string, MixedGraph>> letter_variants(char letter) const {
    std::vector<std::pair<std::string, MixedGraph>> out;
    const std::string base(1, letter);
    for (const auto& [k, v] : graphs_)
      if (k == base || k.rfind(base + "#", 0) == 0) out.emplace_back(k, v);
    return out;
  }

 private:
  std::map<std::string, MixedGraph> graphs_;
  std::map<std::string, std::string> notes_;
};

}  // namespace hermispec
