#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hermispec/canonical.hpp"
#include "hermispec/charpoly.hpp"
#include "hermispec/error.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/simple_graph.hpp"
#include "hermispec/switching.hpp"

namespace hermispec {

/// Worker count from HERMISPEC_THREADS (default 1).
inline int thread_count() {
  if (const char* s = std::getenv("HERMISPEC_THREADS")) {
    const int k = std::atoi(s);
    if (k >= 1) return std::min(k, 64);
  }
  return 1;
}

/// Runs f(i) for i in [0, count) on up to thread_count() threads.
/// Callers write results to slot i, which keeps merges order-independent.
template <class F>
void parallel_for(std::size_t count, F&& f) {
  const int t = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), std::max<std::size_t>(count, 1));
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(t)) f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Switching-and-relabeling class of a connected mixed graph: canonical underlying graph
/// plus the smallest chord-gain code in its automorphism orbit.
struct ClassKey {
  std::vector<std::uint64_t> underlying;
  std::uint64_t gains = 0;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// Keys of the components, sorted; equal iff the graphs agree up to relabeling and switching.
using GraphKey = std::vector<ClassKey>;

struct SwitchingClass {
  MixedGraph representative;
  ClassKey key;
  IntPolynomial phi;
};

/// Connected underlying graphs by (order, size) and their switching classes, cached.
class ClassIndex {
 public:
  static constexpr int kMaxChords = 12;

  /// Connected simple graphs up to isomorphism, each in canonical form, sorted by certificate.
  const std::vector<SimpleGraph>& connected(int n, int m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const auto key = std::make_pair(n, m);
    if (auto it = graphs_.find(key); it != graphs_.end()) return it->second;
    std::vector<SimpleGraph> out;
    if (n >= 1 && m >= n - 1 && m <= n * (n - 1) / 2) {
      std::map<std::vector<std::uint64_t>, SimpleGraph> found;
      if (m == n - 1) {
        if (n == 1) {
          found.emplace(canonical_labeling(SimpleGraph(1)).certificate, SimpleGraph(1));
        } else {
          for (const auto& t : connected(n - 1, n - 2))
            for (int v = 0; v < n - 1; ++v) {
              SimpleGraph g(n);
              for (auto [a, b] : t.edges()) g.add_edge(a, b);
              g.add_edge(v, n - 1);
              insert_canonical(found, g);
            }
        }
      } else {
        for (const auto& h : connected(n, m - 1))
          for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
              if (h.has_edge(u, v)) continue;
              SimpleGraph g = h;
              g.add_edge(u, v);
              insert_canonical(found, g);
            }
      }
      for (auto& [c, g] : found) out.push_back(std::move(g));
    }
    return graphs_.emplace(key, std::move(out)).first->second;
  }

  /// Realizable switching classes on every connected (n, m) underlying graph.
  const std::vector<SwitchingClass>& classes(int n, int m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const auto key = std::make_pair(n, m);
    if (auto it = classes_.find(key); it != classes_.end()) return it->second;
    const auto& gs = connected(n, m);
    std::vector<std::vector<SwitchingClass>> slots(gs.size());
    // Workers must not take mu_: this thread holds it for the whole call.
    std::vector<const Info*> infos;
    for (const auto& g : gs) infos.push_back(&info(g));
    parallel_for(gs.size(), [&](std::size_t i) { slots[i] = classes_from(*infos[i]); });
    std::vector<SwitchingClass> out;
    for (auto& s : slots)
      for (auto& c : s) out.push_back(std::move(c));
    return classes_.emplace(key, std::move(out)).first->second;
  }

  /// Realizable classes on one connected underlying graph given in canonical form.
  std::vector<SwitchingClass> classes_on(const SimpleGraph& g) { return classes_from(info(g)); }

  /// Class key of a connected mixed graph.
  ClassKey key_of_connected(const MixedGraph& x) {
    const auto lab = canonical_labeling(x.simple());
    const MixedGraph y = x.relabeled(lab.labeling);
    const Info& in = info(y.simple());
    const auto nf = forest_normal_form(GainGraph(y));
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < nf.chord_gains.size(); ++k)
      code |= static_cast<std::uint64_t>(nf.chord_gains[k]) << (2 * k);
    // Smallest code in the orbit.
    std::set<std::uint64_t> orbit{code};
    std::vector<std::uint64_t> stack{code};
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      for (const auto& gamma : in.gens) {
        const auto d = image(in, c, gamma);
        if (orbit.insert(d).second) stack.push_back(d);
      }
    }
    return {in.cert, *orbit.begin()};
  }

  GraphKey key_of(const MixedGraph& x) {
    GraphKey k;
    for (const auto& comp : x.simple().components()) k.push_back(key_of_connected(induced_subgraph(x, comp)));
    std::sort(k.begin(), k.end());
    return k;
  }

  /// Same graph up to relabeling and switching.
  bool equivalent(const MixedGraph& a, const MixedGraph& b) {
    return a.order() == b.order() && a.size() == b.size() && key_of(a) == key_of(b);
  }

 private:
  struct Info {
    SimpleGraph g;
    std::vector<std::uint64_t> cert;
    std::vector<std::vector<int>> gens;
    SpanningForest forest;
    GainGraph base;
  };

  static void insert_canonical(std::map<std::vector<std::uint64_t>, SimpleGraph>& found, const SimpleGraph& g) {
    auto lab = canonical_labeling(g);
    if (found.count(lab.certificate)) return;
    found.emplace(std::move(lab.certificate), g.relabeled(lab.labeling));
  }

  /// g must be in canonical form.
  const Info& info(const SimpleGraph& g) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto lab = canonical_labeling(g);
    if (auto it = info_.find(lab.certificate); it != info_.end()) return it->second;
    if (g.relabeled(lab.labeling) != g) throw ConsistencyError("ClassIndex: graph is not in canonical form");
    Info in;
    in.g = g;
    in.cert = lab.certificate;
    in.gens = std::move(lab.generators);
    GainGraph base(g.order());
    for (auto [u, v] : g.edges()) base.set(u, v, 0);
    in.forest = spanning_forest(base);
    in.base = base;
    return info_.emplace(in.cert, std::move(in)).first->second;
  }

  static std::vector<SwitchingClass> classes_from(const Info& in) {
    const std::size_t c = in.forest.chords.size();
    if (c > kMaxChords) throw GuardExceeded("too many chords for gain-class enumeration");
    const std::uint64_t total = std::uint64_t{1} << (2 * c);
    std::vector<bool> seen(total, false);
    std::vector<SwitchingClass> out;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (seen[code]) continue;
      std::vector<std::uint64_t> stack{code};
      seen[code] = true;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const auto& gamma : in.gens) {
          const auto y = image(in, x, gamma);
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      const GainGraph gg = gain_graph(in, code);
      if (auto t = find_admissible_switching(gg)) {
        MixedGraph rep = gg.switched(*t).to_mixed();
        auto phi = char_poly_exact(rep);
        out.push_back({std::move(rep), {in.cert, code}, std::move(phi)});
      }
    }
    return out;
  }

  static GainGraph gain_graph(const Info& in, std::uint64_t code) {
    GainGraph g = in.base;
    for (std::size_t k = 0; k < in.forest.chords.size(); ++k)
      g.set(in.forest.chords[k].first, in.forest.chords[k].second, static_cast<int>((code >> (2 * k)) & 3U));
    return g;
  }

  /// Code of the class obtained by relabeling with gamma.
  static std::uint64_t image(const Info& in, std::uint64_t code, const std::vector<int>& gamma) {
    const GainGraph g = gain_graph(in, code);
    GainGraph h(g.order());
    for (auto [u, v] : g.edges()) h.set(gamma[u], gamma[v], g.exponent(u, v));
    const auto nf = forest_normal_form(h);
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < nf.chord_gains.size(); ++k) out |= static_cast<std::uint64_t>(nf.chord_gains[k]) << (2 * k);
    return out;
  }

  std::recursive_mutex mu_;
  std::map<std::pair<int, int>, std::vector<SimpleGraph>> graphs_;
  std::map<std::pair<int, int>, std::vector<SwitchingClass>> classes_;
  std::map<std::vector<std::uint64_t>, Info> info_;
};

}  // namespace hermispec
