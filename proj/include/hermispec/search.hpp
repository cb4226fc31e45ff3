#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hermispec/canonical.hpp"
#include "hermispec/charpoly.hpp"
#include "hermispec/cycles.hpp"
#include "hermispec/enumerate.hpp"
#include "hermispec/error.hpp"
#include "hermispec/families.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/named.hpp"
#include "hermispec/polynomial.hpp"
#include "hermispec/registry.hpp"
#include "hermispec/spectra.hpp"

namespace hermispec {

enum class SearchMode { Free, Guided };

inline const char* to_string(SearchMode m) { return m == SearchMode::Free ? "free" : "guided"; }

/// Order is exact. Size is exact when set. Guided mode draws components from the admissible catalog.
struct SearchConstraints {
  static constexpr int kFreeMaxOrder = 10;
  static constexpr int kGuidedMaxOrder = 30;

  int order = 0;
  std::optional<int> size;
  std::optional<int> max_degree;
  bool connected = false;
  std::optional<int> max_corank;
  /// Catalog families ("P", "C1", "D", "Gt", "Gttm") or letters ("o", "(o)"); empty means all.
  std::vector<std::string> whitelist;
  SearchMode mode = SearchMode::Free;
  int max_order = kFreeMaxOrder;

  void validate(const Registry* reg = nullptr) const {
    if (order < 1) throw InvalidArgument("search: order must be positive");
    if (size && *size < 0) throw InvalidArgument("search: size must be non-negative");
    if (max_degree && *max_degree < 1) throw InvalidArgument("search: max_degree must be positive");
    if (max_corank && *max_corank < 0) throw InvalidArgument("search: max_corank must be non-negative");
    if (max_order < 1) throw InvalidArgument("search: max_order must be positive");
    static const std::set<std::string> fams{"P", "C1", "D", "Gt", "Gttm"};
    for (const auto& w : whitelist) {
      if (fams.count(w)) continue;
      std::string l = w;
      if (l.size() >= 2 && l.front() == '(' && l.back() == ')') l = l.substr(1, l.size() - 2);
      if (!reg || !reg->has(l)) throw InvalidArgument("search: whitelist entry '" + w + "' is not a catalog family or registry letter");
    }
  }
};

/// A connected component candidate.
struct Component {
  std::string name;
  MixedGraph graph;
  ClassKey key;
  IntPolynomial phi;
};

struct Mate {
  MixedGraph graph;
  IntPolynomial phi;
  GraphKey key;
  std::string certificate;
  std::string name;
  /// The converse is a different class with the same spectrum; it is folded into this entry.
  bool converse_distinct = false;
};

struct MateReport {
  MixedGraph target;
  IntPolynomial phi;
  SearchMode mode = SearchMode::Free;
  std::vector<Mate> mates;
  bool exhaustive = false;
  bool catalog_complete = false;
  /// The converse of the target is cospectral but not switching-equivalent to it.
  bool target_converse_distinct = false;
  std::vector<std::string> notes;
};

enum class Verdict { DHS, NotDHS, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::DHS: return "DHS";
    case Verdict::NotDHS: return "NotDHS";
    default: return "Inconclusive";
  }
}

struct DhsResult {
  Verdict verdict = Verdict::Inconclusive;
  MateReport report;
  std::string reason;
};

/// Component keys in hex: "n.rows.colors:gains" per component, joined by '|'.
inline std::string key_certificate(const GraphKey& k) {
  std::ostringstream os;
  os << std::hex;
  for (std::size_t c = 0; c < k.size(); ++c) {
    if (c) os << '|';
    for (std::size_t w = 0; w < k[c].underlying.size(); ++w) os << (w ? "." : "") << k[c].underlying[w];
    os << ':' << k[c].gains;
  }
  return os.str();
}

/// Holds the class index, the registry and the cached guided catalog.
class SearchContext {
 public:
  explicit SearchContext(const Registry* reg = nullptr) : reg_(reg), namer_(index_, reg) {}

  ClassIndex& index() { return index_; }
  const Registry* registry() const { return reg_; }
  Namer& namer() { return namer_; }

  /// Connected classes of every order up to c.order, filtered by c; guided mode uses the catalog.
  /// `size_cap` bounds component size.
  std::vector<Component> components(const SearchConstraints& c, int size_cap) {
    std::vector<Component> out;
    if (c.mode == SearchMode::Guided) {
      for (const auto& comp : catalog(c.order))
        if (admit(c, comp.graph, c.whitelist.empty() || whitelisted(c, comp.name)) && comp.graph.size() <= size_cap)
          out.push_back(comp);
      return out;
    }
    for (int n = c.connected ? c.order : 1; n <= c.order; ++n)
      for (int m = n - 1; m <= std::min(n * (n - 1) / 2, size_cap); ++m) {
        if (c.max_corank && m - n + 1 > *c.max_corank) break;
        for (const auto& cls : index_.classes(n, m))
          if (admit(c, cls.representative, true)) out.push_back({"", cls.representative, cls.key, cls.phi});
      }
    return out;
  }

  /// The admissible catalog up to `max_order`, deduplicated by class, with exact char polys.
  const std::vector<Component>& catalog(int max_order) {
    if (max_order <= catalog_order_) return catalog_;
    std::set<ClassKey> seen;
    for (const auto& c : catalog_) seen.insert(c.key);
    Registry empty;
    for (auto& ng : admissible_catalog(max_order, reg_ ? *reg_ : empty)) {
      if (ng.graph.order() <= catalog_order_) continue;
      auto key = index_.key_of_connected(ng.graph);
      if (!seen.insert(key).second) continue;
      auto phi = char_poly_exact(ng.graph);
      catalog_.push_back({ng.name, std::move(ng.graph), std::move(key), std::move(phi)});
    }
    catalog_order_ = max_order;
    return catalog_;
  }

  std::string name_of(const MixedGraph& g) { return namer_.name(g); }

 private:
  static bool admit(const SearchConstraints& c, const MixedGraph& g, bool listed) {
    if (!listed) return false;
    if (c.max_degree && g.max_degree() > *c.max_degree) return false;
    return true;
  }

  static bool whitelisted(const SearchConstraints& c, const std::string& name) {
    std::string fam = name.substr(0, name.find(':'));
    std::string letter;
    if (!name.empty() && name.front() == '(') letter = name.substr(1, name.find_first_of("#)") - 1);
    for (const auto& w : c.whitelist) {
      if (w == fam || w == name) return true;
      if (!letter.empty() && (w == letter || w == "(" + letter + ")")) return true;
    }
    return false;
  }

  ClassIndex index_;
  const Registry* reg_;
  Namer namer_;
  std::vector<Component> catalog_;
  int catalog_order_ = 0;
};

namespace detail {

/// Visits each multiset of components (nondecreasing indices) with total order n and,
/// when set, total size m and total corank at most `corank`.
inline void for_each_multiset(const std::vector<Component>& comps, int n, std::optional<int> m, std::optional<int> corank,
                              bool connected, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t start, int rn, int rm, int rk) {
    if (rn == 0) {
      if (!m || rm == 0) visit(chosen);
      return;
    }
    for (std::size_t i = start; i < comps.size(); ++i) {
      const int cn = comps[i].graph.order();
      const int cm = comps[i].graph.size();
      const int ck = cm - cn + 1;
      if (cn > rn || (connected && cn != n)) continue;
      if (m && cm > rm) continue;
      if (corank && ck > rk) continue;
      // The rest must fit in rn - cn vertices.
      if (m) {
        const int left = rn - cn;
        if (rm - cm > left * (left - 1) / 2) continue;
      }
      chosen.push_back(i);
      rec(i, rn - cn, rm - cm, rk - ck);
      chosen.pop_back();
    }
  };
  rec(0, n, m.value_or(0), corank.value_or(0));
}

}  // namespace detail

/// Calls visit(graph) once per switching-and-relabeling class satisfying c.
/// Components come in order of the enumeration index (order, size, class key); returns the count.
inline std::size_t enumerate_up_to_switching(SearchContext& ctx, const SearchConstraints& c,
                                             const std::function<void(const MixedGraph&)>& visit,
                                             std::size_t limit = 5'000'000) {
  c.validate(ctx.registry());
  if (c.order > (c.mode == SearchMode::Free ? std::min(c.max_order, SearchConstraints::kFreeMaxOrder)
                                           : std::min(c.max_order, SearchConstraints::kGuidedMaxOrder)))
    throw GuardExceeded("enumeration order " + std::to_string(c.order) + " exceeds the cap for " + to_string(c.mode) + " mode");
  const int cap = c.size.value_or(c.order * (c.order - 1) / 2);
  const auto comps = ctx.components(c, cap);
  std::size_t count = 0;
  detail::for_each_multiset(comps, c.order, c.size, c.max_corank, c.connected, [&](const std::vector<std::size_t>& pick) {
    if (++count > limit) throw GuardExceeded("enumeration produced more than " + std::to_string(limit) + " graphs");
    std::vector<MixedGraph> parts;
    for (auto i : pick) parts.push_back(comps[i].graph);
    visit(disjoint_union(parts));
  });
  return count;
}

/// Cospectral graphs with the target's order and size that are not switching-equivalent to it
/// under any relabeling. Free mode is exhaustive up to the free order cap.
inline MateReport find_mates(SearchContext& ctx, const MixedGraph& target, SearchConstraints c) {
  auto& index = ctx.index();
  MateReport rep;
  rep.target = target;
  rep.phi = char_poly_exact(target);
  rep.mode = c.mode;
  c.order = target.order();
  c.size = target.size();
  c.validate(ctx.registry());
  const int cap_order = c.mode == SearchMode::Free ? std::min(c.max_order, SearchConstraints::kFreeMaxOrder)
                                                   : std::min(c.max_order, SearchConstraints::kGuidedMaxOrder);
  if (c.order > cap_order)
    throw GuardExceeded("target order " + std::to_string(c.order) + " exceeds the " + to_string(c.mode) + " search cap " +
                        std::to_string(cap_order));
  const int n = c.order;
  const int m = *c.size;

  // Components must divide the target polynomial.
  std::vector<Component> comps;
  for (auto& comp : ctx.components(c, m))
    if (divides(comp.phi, rep.phi)) comps.push_back(std::move(comp));

  // Group interchangeable components by (phi, order, size).
  std::map<std::tuple<IntPolynomial, int, int>, std::vector<std::size_t>> by_shape;
  for (std::size_t i = 0; i < comps.size(); ++i)
    by_shape[{comps[i].phi, comps[i].graph.order(), comps[i].graph.size()}].push_back(i);
  struct Group {
    IntPolynomial phi;
    int order;
    int size;
    std::vector<std::size_t> members;
  };
  std::vector<Group> groups;
  for (auto& [k, v] : by_shape) groups.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});

  const GraphKey tkey = index.key_of(target);
  const GraphKey tckey = index.key_of(target.converse());
  rep.target_converse_distinct = tckey != tkey;

  std::map<GraphKey, Mate> found;
  constexpr std::size_t kLimit = 200'000;
  auto emit = [&](const std::vector<std::size_t>& pick) {
    if (found.size() >= kLimit) throw GuardExceeded("more than " + std::to_string(kLimit) + " mates");
    GraphKey key;
    std::vector<MixedGraph> parts;
    for (auto i : pick) {
      key.push_back(comps[i].key);
      parts.push_back(comps[i].graph);
    }
    std::sort(key.begin(), key.end());
    if (key == tkey || key == tckey || found.count(key)) return;
    Mate mt;
    mt.graph = disjoint_union(parts);
    mt.phi = rep.phi;
    mt.key = key;
    found.emplace(key, std::move(mt));
  };

  // Choose group multiplicities against the quotient, then expand members within each group.
  std::vector<std::pair<std::size_t, int>> mult;
  std::function<void(std::vector<std::size_t>&, std::size_t)> expand = [&](std::vector<std::size_t>& pick, std::size_t gi) {
    if (gi == mult.size()) {
      emit(pick);
      return;
    }
    const auto& mem = groups[mult[gi].first].members;
    const int need = mult[gi].second;
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int left) {
      if (left == 0) {
        expand(pick, gi + 1);
        return;
      }
      for (std::size_t j = from; j < mem.size(); ++j) {
        pick.push_back(mem[j]);
        choose(j, left - 1);
        pick.pop_back();
      }
    };
    choose(0, need);
  };
  std::function<void(std::size_t, const IntPolynomial&, int, int)> rec = [&](std::size_t start, const IntPolynomial& q, int rn,
                                                                            int rm) {
    if (rn == 0) {
      if (rm == 0) {
        std::vector<std::size_t> pick;
        expand(pick, 0);
      }
      return;
    }
    for (std::size_t g = start; g < groups.size(); ++g) {
      const auto& gr = groups[g];
      if (gr.order > rn || gr.size > rm) continue;
      if (c.connected && gr.order != n) continue;
      const int left = rn - gr.order;
      if (rm - gr.size > left * (left - 1) / 2) continue;
      auto next = exact_quotient(q, gr.phi);
      if (!next) continue;
      if (!mult.empty() && mult.back().first == g)
        ++mult.back().second;
      else
        mult.emplace_back(g, 1);
      rec(g, *next, left, rm - gr.size);
      if (--mult.back().second == 0) mult.pop_back();
    }
  };
  rec(0, rep.phi, n, m);

  // Fold converse pairs into one entry.
  std::vector<GraphKey> order;
  for (auto& [k, v] : found) order.push_back(k);
  std::set<GraphKey> dropped;
  for (const auto& k : order) {
    if (dropped.count(k)) continue;
    auto& mt = found.at(k);
    const auto ck = index.key_of(mt.graph.converse());
    if (ck != k && found.count(ck)) {
      mt.converse_distinct = true;
      dropped.insert(ck);
    }
  }
  for (auto& [k, v] : found) {
    if (dropped.count(k)) continue;
    v.certificate = key_certificate(k);
    v.name = ctx.name_of(v.graph);
    rep.mates.push_back(std::move(v));
  }

  if (c.mode == SearchMode::Free) {
    rep.exhaustive = !c.max_degree && !c.max_corank && !c.connected;
    if (!rep.exhaustive) rep.notes.push_back("constraints restrict the search space");
  } else {
    rep.exhaustive = false;
    const bool admissible = count_roots_in(rep.phi, Rational(-2), Rational(2)) == rep.phi.degree() && is_square_free(rep.phi);
    rep.catalog_complete = admissible && ctx.registry() && c.whitelist.empty();
    rep.notes.push_back("components restricted to the admissible catalog");
    if (!admissible) rep.notes.push_back("target spectrum is not simple inside (-2,2); catalog does not cover all mates");
    if (!ctx.registry()) rep.notes.push_back("no registry loaded; letter graphs skipped");
  }
  if (rep.target_converse_distinct) rep.notes.push_back("converse of the target is a distinct cospectral class");
  return rep;
}

/// DHS only when the free search covered the whole order/size space and found no mates.
inline DhsResult is_dhs(SearchContext& ctx, const MixedGraph& target, const SearchConstraints& c) {
  DhsResult r;
  try {
    r.report = find_mates(ctx, target, c);
  } catch (const GuardExceeded& e) {
    r.report.target = target;
    r.report.phi = char_poly_exact(target);
    r.report.mode = c.mode;
    r.verdict = Verdict::Inconclusive;
    r.reason = e.what();
    return r;
  }
  if (!r.report.mates.empty()) {
    r.verdict = Verdict::NotDHS;
    r.reason = std::to_string(r.report.mates.size()) + " mate class(es)";
  } else if (r.report.exhaustive) {
    r.verdict = Verdict::DHS;
    r.reason = "exhaustive search found no mates";
  } else {
    r.verdict = Verdict::Inconclusive;
    r.reason = "search was not exhaustive";
  }
  return r;
}

/// Smallest expected-mate key set comparison modulo converse.
inline bool same_mates_modulo_converse(ClassIndex& index, const std::vector<Mate>& found, const std::vector<MixedGraph>& expected,
                                       std::string* detail = nullptr) {
  std::vector<std::pair<GraphKey, GraphKey>> want;
  for (const auto& g : expected) want.emplace_back(index.key_of(g), index.key_of(g.converse()));
  std::vector<bool> used(want.size(), false);
  bool ok = true;
  for (const auto& m : found) {
    bool hit = false;
    for (std::size_t k = 0; k < want.size() && !hit; ++k)
      if (!used[k] && (m.key == want[k].first || m.key == want[k].second)) used[k] = hit = true;
    if (!hit) {
      ok = false;
      if (detail) *detail += "unexpected mate " + m.name + "; ";
    }
  }
  for (std::size_t k = 0; k < want.size(); ++k)
    if (!used[k]) {
      ok = false;
      if (detail) *detail += "missing expected mate #" + std::to_string(k + 1) + "; ";
    }
  return ok;
}

// ---------------------------------------------------------------------------------------------
// Reconstruction of the admissible letter graphs.

/// Order and size of a letter graph from its closed-form spectrum: size = -c_{n-2}.
inline std::pair<int, int> letter_shape(char letter) {
  const auto phi = poly_from_terms(detail::letter_terms(letter));
  const int n = phi.degree();
  return {n, static_cast<int>(-phi.coeff(n - 2))};
}

/// Every connected switching class of the given order and size with char poly `fingerprint`.
inline std::vector<MixedGraph> reconstruct_admissible(ClassIndex& index, const IntPolynomial& fingerprint, int order, int size) {
  std::vector<MixedGraph> out;
  for (const auto& c : index.classes(order, size))
    if (c.phi == fingerprint) out.push_back(c.representative);
  return out;
}

inline std::vector<MixedGraph> reconstruct_admissible(ClassIndex& index, char letter) {
  const auto [n, m] = letter_shape(letter);
  return reconstruct_admissible(index, poly_from_terms(detail::letter_terms(letter)), n, m);
}

namespace detail {

inline bool has_induced_cycle(const MixedGraph& g, int length, GaussianUnit value) {
  for (const auto& c : all_cycles(g))
    if (c.length() == length && (c.value == value || c.value == value.conj()) && is_induced(g, c)) return true;
  return false;
}

}  // namespace detail

/// Structural side conditions that pick the drawn graph of each letter among spectral matches:
/// g, h contain an induced C2_6; o..v contain an induced C2_4 but no induced C2_6 and are not
/// the cycle C1_n; k contains a C1_3; w, y, z are trees.
inline bool letter_structure_ok(char letter, const MixedGraph& g) {
  const auto minus_one = GaussianUnit::minus_one();
  const auto i = GaussianUnit::i();
  switch (letter) {
    case 'g':
    case 'h': return detail::has_induced_cycle(g, 6, minus_one);
    case 'k': return detail::has_induced_cycle(g, 3, i);
    case 'w':
    case 'y':
    case 'z': return g.size() == g.order() - 1;
    default: {
      if (g.size() == g.order() && all_cycles(g).size() == 1 && all_cycles(g)[0].length() == g.order()) return false;
      return detail::has_induced_cycle(g, 4, minus_one) && !detail::has_induced_cycle(g, 6, minus_one);
    }
  }
}

struct LetterReconstruction {
  char letter = 0;
  int order = 0;
  int size = 0;
  std::size_t spectral_matches = 0;
  std::vector<MixedGraph> selected;
};

inline LetterReconstruction reconstruct_letter(ClassIndex& index, char letter) {
  LetterReconstruction r;
  r.letter = letter;
  std::tie(r.order, r.size) = letter_shape(letter);
  const auto all = reconstruct_admissible(index, letter);
  r.spectral_matches = all.size();
  for (const auto& g : all)
    if (letter_structure_ok(letter, g)) r.selected.push_back(g);
  return r;
}

/// Letters (first class as "x", further as "x#2", ...) and E_2..E_8.
inline Registry build_registry(ClassIndex& index) {
  Registry reg;
  for (char l : admissible_letters()) {
    const auto r = reconstruct_letter(index, l);
    if (r.selected.empty()) throw ConsistencyError(std::string("no class reproduces the spectrum of letter ") + l);
    for (std::size_t k = 0; k < r.selected.size(); ++k)
      reg.put(std::string(1, l) + (k ? "#" + std::to_string(k + 1) : ""), r.selected[k]);
    reg.note(std::string(1, l), "order " + std::to_string(r.order) + ", size " + std::to_string(r.size) + ", " +
                                    std::to_string(r.spectral_matches) + " spectral match(es), " +
                                    std::to_string(r.selected.size()) + " with the drawn structure");
  }
  for (int s = 2; s <= 8; ++s) reg.put("E" + std::to_string(s), families::e_r(s));
  return reg;
}

// ---------------------------------------------------------------------------------------------
// (-2,2)-out campaigns.

struct OutReport {
  std::string family;
  std::size_t classes = 0;
  std::size_t out = 0;
  std::vector<MixedGraph> counterexamples;
  bool skipped = false;
  std::string note;

  bool passed() const { return !skipped && classes > 0 && out == classes; }
};

/// "deg4-order5", "theta:p,q,r", "K4", "Y2", "drawn-only".
inline std::vector<std::string> out_campaign_families() {
  return {"deg4-order5", "theta:2,3,3", "theta:2,3,4", "theta:2,4,5", "theta:2,5,5", "theta:2,5,6",
          "theta:2,5,7", "theta:3,4,4", "theta:3,4,5", "theta:3,4,6", "K4"};
}

inline OutReport replicate_out_campaign(ClassIndex& index, const std::string& family) {
  OutReport r;
  r.family = family;
  auto check = [&](const MixedGraph& g, const IntPolynomial& phi) {
    ++r.classes;
    if (is_out(phi))
      ++r.out;
    else
      r.counterexamples.push_back(g);
  };
  auto on_underlying = [&](const MixedGraph& u) {
    for (const auto& c : index.classes_on(canonical_form(u.simple()))) check(c.representative, c.phi);
  };
  if (family == "deg4-order5") {
    for (int m = 4; m <= 10; ++m)
      for (const auto& c : index.classes(5, m))
        if (c.representative.max_degree() == 4) check(c.representative, c.phi);
    r.note = "connected underlying graphs only";
  } else if (family.rfind("theta:", 0) == 0) {
    const auto p = detail::parse_params(family.substr(6), family);
    if (p.size() != 3) throw InvalidArgument("theta campaign needs p,q,r");
    on_underlying(families::theta(p[0], p[1], p[2]));
  } else if (family == "K4") {
    on_underlying(families::complete(4));
  } else if (family == "Y2") {
    for (int rr = 3; rr <= 10; ++rr) {
      const auto g = families::y2(rr);
      const auto phi = char_poly_exact(g);
      if (eval_at(phi, 2) != 0) r.note += "phi(Y2," + std::to_string(rr) + ",2) != 0; ";
      check(g, phi);
    }
  } else if (family == "drawn-only") {
    r.skipped = true;
    r.note = "these graphs exist only as drawings; not replicated";
  } else {
    throw InvalidArgument("unknown out campaign '" + family + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------------------------
// Explicit cospectrality identities.

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

inline std::vector<IdentityCheck> verify_family_identities(SearchContext& ctx) {
  using namespace families;
  std::vector<IdentityCheck> out;
  const Registry* reg = ctx.registry();
  auto spec = [&](const std::string& s) { return parse_graph_spec(s, reg); };
  auto same = [&](const std::string& a, const std::string& b) {
    IdentityCheck c;
    c.name = "Spec(" + a + ") = Spec(" + b + ")";
    try {
      const auto ga = spec(a);
      const auto gb = spec(b);
      c.holds = char_poly_exact(ga) == char_poly_exact(gb);
      if (c.holds && ctx.index().equivalent(ga, gb)) {
        c.holds = false;
        c.detail = "graphs are switching-equivalent";
      }
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };
  auto list = [&](const std::string& target, const std::vector<std::string>& mates) {
    IdentityCheck c;
    c.name = "mates(" + target + ") = {";
    for (std::size_t k = 0; k < mates.size(); ++k) c.name += (k ? ", " : "") + mates[k];
    c.name += "}";
    try {
      std::vector<MixedGraph> want;
      for (const auto& s : mates) want.push_back(spec(s));
      SearchConstraints sc;
      sc.mode = SearchMode::Guided;
      sc.max_order = SearchConstraints::kGuidedMaxOrder;
      const auto rep = find_mates(ctx, spec(target), sc);
      c.holds = same_mates_modulo_converse(ctx.index(), rep.mates, want, &c.detail);
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };
  auto s = [](int v) { return std::to_string(v); };

  for (int k = 1; k <= 8; ++k) same("P:" + s(4 * k + 1), "P:" + s(2 * k) + " + C1:" + s(2 * k + 1));
  for (int k = 2; k <= 8; ++k) {
    same("P:" + s(4 * k + 3), "Gttm:" + s(k - 1) + "," + s(2 * k) + " + P:" + s(k));
    same("P:" + s(4 * k + 3), "C1:" + s(2 * k + 2) + " + P:" + s(2 * k + 1));
  }
  same("P:7", "Gt:2 + P:1");
  for (int n = 3; n <= 10; ++n) {
    same("C:" + s(2 * n), "C:" + s(n) + " + C2:" + s(n));
    same("C2:" + s(2 * n), "C1:" + s(n) + " + C1:" + s(n));
  }
  for (int r = 3; r <= 8; ++r) {
    same("C:" + s(2 * r), "P:" + s(r - 1) + " + E:" + s(r - 1));
    same("C2:" + s(2 * r), "Gttm:" + s(r - 2) + "," + s(r - 2));
  }
  same("P:14", "P:2 + P:4 + (u)");
  same("P:14", "P:2 + P:4 + (h)");
  list("P:14", {"P:2 + P:4 + (u)", "P:2 + P:4 + (h)"});
  list("P:5", {"C1:3 + P:2"});
  list("P:9", {"C1:5 + P:4"});
  list("P:13", {"C1:7 + P:6", "(p) + P:6"});
  list("P:17", {"C1:9 + P:8", "C1:9 + P:2 + (o)", "(v) + P:8 + P:1", "(v) + (o) + P:2 + P:1"});
  list("P:21", {"C1:11 + P:10"});
  list("P:25", {"C1:13 + P:12"});
  list("P:29", {"C1:15 + P:14", "C1:15 + P:2 + P:4 + (u)", "C1:15 + P:2 + P:4 + (h)", "(z) + P:14 + (t)",
                "(z) + P:2 + P:4 + (u) + (t)", "(z) + P:2 + P:4 + (h) + (t)"});
  same("C1:7", "(p)");
  same("C1:9", "(v) + P:1");
  same("C1:12", "C1:4 + (q)");
  same("C1:15", "(z) + (t)");
  return out;
}

}  // namespace hermispec
