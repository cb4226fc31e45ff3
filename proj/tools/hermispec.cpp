#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hermispec/hermispec.hpp"

using namespace hermispec;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  std::string registry = default_registry_path();
  double tol = 1e-9;
};

Registry load_registry(const Options& o) {
  if (!std::filesystem::exists(o.registry)) return {};
  return Registry::load(o.registry);
}

std::string fmt_value(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << (std::abs(v) < 5e-13 ? 0.0 : v);
  return os.str();
}

void print(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

/// Closed form of a single-family spec like "C1:12" or "(o)", if it has one.
std::optional<Spectrum> closed_form_of(const std::string& spec) {
  const auto s = detail::trim(spec);
  if (s.find('+') != std::string::npos || s.empty() || s.front() == '{') return std::nullopt;
  try {
    if (s.front() == '(') return closed_form(s);
    const auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    return closed_form(s.substr(0, colon), detail::parse_params(s.substr(colon + 1), s));
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json mate_report_json(const MateReport& r) {
  Json mates = Json::array();
  for (const auto& m : r.mates)
    mates.push_back({{"name", m.name}, {"graph", graph_to_json(m.graph)}, {"certificate", m.certificate},
                     {"converse_distinct", m.converse_distinct}});
  return {{"target", graph_to_json(r.target)},
          {"charpoly", poly_to_json(r.phi)},
          {"mode", to_string(r.mode)},
          {"exhaustive", r.exhaustive},
          {"catalog_complete", r.catalog_complete},
          {"target_converse_distinct", r.target_converse_distinct},
          {"mates", mates},
          {"notes", r.notes}};
}

std::string mate_report_text(const MateReport& r) {
  std::ostringstream os;
  os << "mode: " << to_string(r.mode) << (r.exhaustive ? " (exhaustive)" : " (not exhaustive)") << "\n";
  os << "charpoly: " << r.phi.to_string() << "\n";
  os << "mates: " << r.mates.size() << "\n";
  for (const auto& m : r.mates) os << "  " << m.name << (m.converse_distinct ? "  [converse is a distinct class]" : "") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

SearchConstraints constraints(bool guided, std::optional<int> max_order) {
  SearchConstraints c;
  c.mode = guided ? SearchMode::Guided : SearchMode::Free;
  c.max_order = max_order.value_or(guided ? SearchConstraints::kGuidedMaxOrder : SearchConstraints::kFreeMaxOrder);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian spectra of mixed graphs: spectra, switching classes, cospectral mates.\n"
               "Graphs: " + std::string(named_grammar_help())};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--registry", o.registry, "registry of reconstructed graphs")->capture_default_str();
  app.add_option("--tol", o.tol, "numeric tolerance")->capture_default_str()->check(CLI::PositiveNumber);

  std::string g1, g2;
  bool free_mode = false, guided = false;
  std::optional<int> max_order;
  auto add_mode = [&](CLI::App* s) {
    auto* f = s->add_flag("--free", free_mode, "exhaustive search over all graphs (order <= 10)");
    auto* g = s->add_flag("--guided", guided, "components from the admissible catalog (order <= 30)");
    f->excludes(g);
    s->add_option("--max-order", max_order, "order cap")->check(CLI::PositiveNumber);
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, with the closed form when one is known");
  spectrum->add_option("graph", g1, "graph")->required();
  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  charpoly->add_option("graph", g1, "graph")->required();
  std::string method = "exact";
  charpoly->add_option("--method", method, "exact | elementary | expansion")
      ->check(CLI::IsMember({"exact", "elementary", "expansion"}))
      ->capture_default_str();
  auto* canon = app.add_subcommand("canonicalize", "switching class key; cycle type for unicyclic graphs");
  canon->add_option("graph", g1, "graph")->required();
  auto* equiv = app.add_subcommand("equivalent", "switching equivalence, at fixed labels and up to relabeling");
  equiv->add_option("graph1", g1, "graph")->required();
  equiv->add_option("graph2", g2, "graph")->required();
  auto* cosp = app.add_subcommand("cospectral", "exact cospectrality");
  cosp->add_option("graph1", g1, "graph")->required();
  cosp->add_option("graph2", g2, "graph")->required();
  auto* mates = app.add_subcommand("mates", "cospectral mates");
  mates->add_option("graph", g1, "graph")->required();
  add_mode(mates);
  auto* dhs = app.add_subcommand("dhs", "is the graph determined by its Hermitian spectrum");
  dhs->add_option("graph", g1, "graph")->required();
  add_mode(dhs);
  auto* out = app.add_subcommand("out-check", "(-2,2)-out test for a graph or a campaign family");
  out->add_option("graph", g1, "graph");
  std::vector<std::string> campaigns;
  bool all_campaigns = false;
  out->add_option("--campaign", campaigns, "deg4-order5 | theta:p,q,r | K4 | Y2 | drawn-only");
  out->add_flag("--all", all_campaigns, "every listed campaign");
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
  bool verify_all = false;
  std::vector<int> criteria;
  verify->add_flag("--all", verify_all, "every check (default)");
  verify->add_option("--criterion", criteria, "single check id")->check(CLI::Range(1, ClaimRunner::count()));
  auto* recon = app.add_subcommand("reconstruct", "rebuild the registry of letter graphs and E_r");
  bool write = false;
  recon->add_flag("--write", write, "write the registry file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Registry reg = load_registry(o);
    auto parse = [&](const std::string& s) { return parse_graph_spec(s, &reg); };

    if (spectrum->parsed()) {
      const auto g = parse(g1);
      const auto s = eigenvalues(g, std::min(o.tol, 1e-11));
      Json j{{"order", g.order()}, {"values", s.values}};
      std::ostringstream os;
      for (double v : s.values) os << fmt_value(v) << "\n";
      if (auto cf = closed_form_of(g1)) {
        if (!same_values(cf->values, s.values, o.tol))
          throw ConsistencyError("closed form disagrees with the computed spectrum");
        Json terms = Json::array();
        std::ostringstream ts;
        for (const auto& t : *cf->exact) {
          terms.push_back({t.p, t.q});
          ts << (terms.size() > 1 ? ", " : "") << "2cos(" << t.p << "pi/" << t.q << ")";
        }
        j["closed_form"] = terms;
        os << "closed form: " << ts.str() << "\n";
      }
      print(o, j, os.str());
      return kOk;
    }
    if (charpoly->parsed()) {
      const auto g = parse(g1);
      IntPolynomial p;
      if (method == "exact") p = char_poly_exact(g);
      if (method == "elementary") p = char_poly_elementary(g);
      if (method == "expansion") p = g.order() == 0 ? IntPolynomial::constant(1) : schwenk_vertex(g, 0);
      print(o, {{"order", g.order()}, {"method", method}, {"coefficients", poly_to_json(p)}, {"text", p.to_string()}},
            p.to_string() + "\n");
      return kOk;
    }
    if (canon->parsed()) {
      const auto g = parse(g1);
      SearchContext ctx(&reg);
      const auto key = ctx.index().key_of(g);
      Json j{{"certificate", key_certificate(key)}, {"components", key.size()}, {"name", ctx.name_of(g)}};
      std::ostringstream os;
      os << "name: " << ctx.name_of(g) << "\ncertificate: " << key_certificate(key) << "\n";
      const auto st = structure(g);
      if (st.components.size() == 1 && st.corank == 1) {
        const auto c = canonicalize_unicyclic(g);
        j["cycle_type"] = to_string(c.type.tag);
        j["cycle_order"] = c.type.order;
        j["theta"] = theta_to_json(c.theta);
        j["representative"] = graph_to_json(c.representative);
        os << "cycle type: " << to_string(c.type.tag) << " (length " << c.type.order << ")\n";
        os << "representative: " << graph_to_json(c.representative).dump() << "\n";
      }
      print(o, j, os.str());
      return kOk;
    }
    if (equiv->parsed()) {
      const auto a = parse(g1);
      const auto b = parse(g2);
      SearchContext ctx(&reg);
      std::optional<SwitchingFunction> w;
      if (a.order() == b.order() && underlying_graph(a) == underlying_graph(b)) w = switching_witness(a, b);
      const bool relabeled = ctx.index().equivalent(a, b);
      Json j{{"fixed_labels", w.has_value()}, {"up_to_relabeling", relabeled}};
      if (w) j["theta"] = theta_to_json(*w);
      std::ostringstream os;
      os << "fixed labels: " << (w ? "equivalent" : "not equivalent") << "\n";
      if (w) os << "theta: " << theta_to_json(*w).dump() << "\n";
      os << "up to relabeling: " << (relabeled ? "equivalent" : "not equivalent") << "\n";
      print(o, j, os.str());
      return kOk;
    }
    if (cosp->parsed()) {
      const auto a = parse(g1);
      const auto b = parse(g2);
      const bool same = char_poly_exact(a) == char_poly_exact(b);
      print(o, {{"cospectral", same}}, std::string(same ? "cospectral" : "not cospectral") + "\n");
      return kOk;
    }
    if (mates->parsed() || dhs->parsed()) {
      const auto g = parse(g1);
      SearchContext ctx(&reg);
      const auto c = constraints(guided, max_order);
      if (mates->parsed()) {
        const auto r = find_mates(ctx, g, c);
        print(o, mate_report_json(r), mate_report_text(r));
      } else {
        const auto r = is_dhs(ctx, g, c);
        print(o, {{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"report", mate_report_json(r.report)}},
              std::string(to_string(r.verdict)) + " (" + r.reason + ")\n" + mate_report_text(r.report));
      }
      return kOk;
    }
    if (out->parsed()) {
      if (all_campaigns) campaigns = out_campaign_families();
      if (campaigns.empty() == g1.empty()) throw InvalidArgument("out-check takes a graph or --campaign/--all");
      if (!g1.empty()) {
        const auto g = parse(g1);
        const auto phi = char_poly_exact(g);
        const int inside = count_roots_in(phi, Rational(-2), Rational(2));
        const bool res = inside < phi.degree();
        print(o, {{"out", res}, {"roots_inside", inside}, {"order", g.order()}},
              std::string(res ? "out" : "not out") + " (" + std::to_string(inside) + " of " + std::to_string(phi.degree()) +
                  " eigenvalues in (-2,2))\n");
        return kOk;
      }
      ClassIndex index;
      Json arr = Json::array();
      std::ostringstream os;
      bool all_ok = true;
      for (const auto& fam : campaigns) {
        const auto r = replicate_out_campaign(index, fam);
        Json ce = Json::array();
        for (const auto& g : r.counterexamples) ce.push_back(graph_to_json(g));
        arr.push_back({{"family", r.family}, {"classes", r.classes}, {"out", r.out}, {"skipped", r.skipped},
                       {"passed", r.passed()}, {"counterexamples", ce}, {"note", r.note}});
        os << std::left << std::setw(14) << r.family << std::right << std::setw(6) << r.classes << " classes  "
           << std::setw(6) << r.out << " out  " << (r.skipped ? "skipped" : r.passed() ? "ok" : "COUNTEREXAMPLE")
           << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
        for (const auto& g : r.counterexamples) os << "    " << graph_to_json(g).dump() << "\n";
        all_ok = all_ok && (r.skipped || r.passed());
      }
      print(o, {{"campaigns", arr}}, os.str());
      return all_ok ? kOk : kClaimFailed;
    }
    if (verify->parsed()) {
      if (criteria.empty())
        for (int k = 1; k <= ClaimRunner::count(); ++k) criteria.push_back(k);
      ClaimRunner runner(reg);
      Json arr = Json::array();
      std::ostringstream os;
      bool all_ok = true;
      for (int id : criteria) {
        const auto r = runner.run(id);
        all_ok = all_ok && r.ok();
        arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"within_budget", r.within_budget()},
                       {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}, {"detail", r.detail}});
        os << std::setw(3) << r.id << "  " << (r.ok() ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(2)
           << std::setw(8) << r.seconds << "s  " << std::left << std::setw(56) << r.title << std::right << "  " << r.detail
           << "\n";
      }
      print(o, {{"checks", arr}, {"all_passed", all_ok}}, os.str());
      return all_ok ? kOk : kClaimFailed;
    }
    if (recon->parsed()) {
      ClassIndex index;
      const Registry built = build_registry(index);
      std::ostringstream os;
      for (const auto& [k, v] : built.notes()) os << std::setw(3) << k << "  " << v << "\n";
      if (write) {
        std::filesystem::create_directories(std::filesystem::path(o.registry).parent_path());
        built.save(o.registry);
        os << "wrote " << o.registry << "\n";
      }
      print(o, built.to_json(), os.str());
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailed;
  }
  return kUsage;
}
