#pragma once

// Command-line front end. run() parses argv-style arguments and writes to the given streams.
//
// Exit codes: 0 success or positive decision, 1 negative decision, 2 inconclusive
// (search budget), 3 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggraph/algebra.hpp"
#include "ggraph/errors.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/ikn.hpp"
#include "ggraph/incidence.hpp"
#include "ggraph/multigraph.hpp"
#include "ggraph/recognition.hpp"

namespace ggraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default search budget, overridden by GGRAPH_BUDGET.
inline std::uint64_t default_budget() {
  const char* env = std::getenv("GGRAPH_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("budget");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("GGRAPH_BUDGET must be a positive integer, got \"") + env + "\"");
  }
}

namespace detail {

struct GroupArgs {
  std::string group;
  std::string gens;
  bool loops = false;
};

inline void add_group_options(CLI::App* app, GroupArgs& a, bool with_loops = true) {
  app->add_option("-g,--group", a.group, "group spec: Z<n>, Z<m>xZ<n>, S<n>, perm:<d>:<cycles>,..")->required();
  app->add_option("-s,--gens", a.gens, "comma-separated generator multiset")->required();
  if (with_loops) app->add_flag("--loops", a.loops, "build Ψ(G,S) instead of Φ(G,S)");
}

inline GGraph build_from(const GroupArgs& a) {
  GroupPtr g = share(parse_group(a.group));
  auto gens = parse_element_list(*g, a.gens);
  if (gens.empty()) throw UsageError("generator multiset is empty");
  return a.loops ? build_psi(g, gens) : build_phi(g, gens);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, path + ": " + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string names(const FiniteGroup& g, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + g.element_name(xs[i]);
  return s;
}

inline void print_graph(std::ostream& out, const Multigraph& g, const std::string& format) {
  if (format == "dot")
    out << export_dot(g);
  else
    out << to_json(g).dump() << "\n";
}

inline void ggraph_summary(std::ostream& out, const GGraph& gg) {
  const FiniteGroup& G = gg.G();
  out << "format: 1\n";
  out << "group: " << G.name() << " (order " << G.order() << ")\n";
  out << "generators: " << names(G, gg.gens.elements()) << "\n";
  out << "loops: " << yes_no(gg.with_loops) << "\n";
  out << "vertices: " << gg.vertex_count() << "\n";
  out << "edges: " << gg.edge_count() << "\n";
  for (int i = 0; i < gg.level_count(); ++i) {
    const Level& lv = gg.levels[static_cast<std::size_t>(i)];
    out << "level " << i << ": <" << G.element_name(lv.gen.element) << "> occurrence " << lv.gen.occurrence << ", "
        << lv.cosets.size() << " cosets of size " << element_order(G, lv.gen.element) << "\n";
  }
  out << "simple: " << yes_no(gg.multigraph().is_simple()) << "\n";
  out << "components: " << connected_components(gg.multigraph()).size() << "\n";
}

inline void multigraph_summary(std::ostream& out, const Multigraph& g) {
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "simple: " << yes_no(g.is_simple()) << "\n";
  out << "bipartite: " << yes_no(is_bipartite(g).has_value()) << "\n";
  out << "components: " << connected_components(g).size() << "\n";
}

inline void print_report(std::ostream& out, const std::vector<CheckResult>& items) {
  for (const CheckResult& c : items) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"G-graphs: construction, recognition, incidence graphs and IK_n certificates", "ggraph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format = "summary";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("-o,--output", format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };

  // ggraph build|verify|witness
  detail::GroupArgs ga;
  auto* gg_cmd = app.add_subcommand("ggraph", "build and check Φ(G,S) / Ψ(G,S)");
  gg_cmd->require_subcommand(1);
  auto* gg_build = gg_cmd->add_subcommand("build", "build the G-graph");
  detail::add_group_options(gg_build, ga);
  add_format(gg_build, {"summary", "json", "dot"});
  auto* gg_verify = gg_cmd->add_subcommand("verify", "check the five structure properties");
  detail::add_group_options(gg_verify, ga);
  auto* gg_witness = gg_cmd->add_subcommand("witness", "print the shifts witness (H = shifts, C = C_e) as JSON");
  detail::add_group_options(gg_witness, ga);

  auto* comp_cmd = app.add_subcommand("components", "component analysis of Φ(G,S)");
  detail::add_group_options(comp_cmd, ga);

  int km = 0, kn = 0, kl = 0;
  auto* kmn_cmd = app.add_subcommand("kmn", "realise K^l_{m,n} as an abelian G-graph");
  kmn_cmd->add_option("m", km)->required()->check(CLI::PositiveNumber);
  kmn_cmd->add_option("n", kn)->required()->check(CLI::PositiveNumber);
  kmn_cmd->add_option("l", kl)->required()->check(CLI::PositiveNumber);
  add_format(kmn_cmd, {"summary", "json", "dot"});

  // incidence build|preimage
  std::string graph_path;
  auto* inc_cmd = app.add_subcommand("incidence", "incidence graphs");
  inc_cmd->require_subcommand(1);
  auto* inc_build = inc_cmd->add_subcommand("build", "incidence graph of a multigraph or of a G-graph");
  inc_build->add_option("--graph", graph_path, "multigraph JSON file");
  inc_build->add_option("-g,--group", ga.group, "group spec");
  inc_build->add_option("-s,--gens", ga.gens, "generator multiset");
  inc_build->add_flag("--loops", ga.loops, "use Ψ(G,S)");
  add_format(inc_build, {"summary", "json", "dot"});
  auto* inc_pre = inc_cmd->add_subcommand("preimage", "Γ' with Φ(G,{s,t}) ≅ IΓ' when o(t) = 2");
  detail::add_group_options(inc_pre, ga, false);
  add_format(inc_pre, {"summary", "json", "dot"});

  std::string bs, bt;
  bool only_nec = false, only_suf = false;
  auto* bip_cmd = app.add_subcommand("bipartite-test", "is IΦ(<s,t>,{s,t}) a G-graph?");
  bip_cmd->add_option("-g,--group", ga.group, "group spec")->required();
  bip_cmd->add_option("-s", bs, "first generator")->required();
  bip_cmd->add_option("-t", bt, "second generator")->required();
  auto* nec_flag = bip_cmd->add_flag("--necessary", only_nec, "only the necessary-condition search");
  bip_cmd->add_flag("--sufficient", only_suf, "only the homomorphism search")->excludes(nec_flag);
  add_format(bip_cmd, {"summary", "json"});

  std::string witness_path;
  bool rec_loops = false, rec_reconstruct = false;
  auto* rec_cmd = app.add_subcommand("recognize", "check the characterisation for a given (H, C)");
  rec_cmd->add_option("--graph", graph_path, "multigraph JSON file")->required();
  rec_cmd->add_option("--witness", witness_path, "witness JSON file")->required();
  rec_cmd->add_flag("--loops", rec_loops, "characterisation with loops (Ψ)");
  rec_cmd->add_flag("--reconstruct", rec_reconstruct, "reconstruct (H,S) and verify the isomorphism");
  add_format(rec_cmd, {"summary", "json"});

  // ikn verify|search|table
  int ikn_n = 0;
  std::string tau_text;
  bool s_all = false, s_canon = false, s_first = false, s_confirm = false, v_full = false;
  std::uint64_t budget = 0;
  auto* ikn_cmd = app.add_subcommand("ikn", "IK_n certificates");
  ikn_cmd->require_subcommand(1);
  auto* ikn_verify = ikn_cmd->add_subcommand("verify", "check a τ certificate");
  ikn_verify->add_option("n", ikn_n)->required()->check(CLI::Range(2, 1000));
  ikn_verify->add_option("--tau", tau_text, "τ in cycle notation")->required();
  ikn_verify->add_flag("--full", v_full, "also build Φ(<σ,τ>,{σ,τ}) and check the necessary conditions");
  add_format(ikn_verify, {"summary", "json"});
  auto* ikn_search = ikn_cmd->add_subcommand("search", "search for τ certificates");
  ikn_search->add_option("n", ikn_n)->required()->check(CLI::Range(2, 1000));
  auto* f_first = ikn_search->add_flag("--first", s_first, "stop at the first certificate (default)");
  auto* f_all = ikn_search->add_flag("--all", s_all, "all certificates")->excludes(f_first);
  ikn_search->add_flag("--canonical", s_canon, "all certificates up to m_a-conjugation")->excludes(f_first)->excludes(f_all);
  ikn_search->add_flag("--confirm", s_confirm, "search even when an arithmetic obstruction applies");
  ikn_search->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
  add_format(ikn_search, {"summary", "json"});
  int nmax = 0;
  auto* ikn_table = ikn_cmd->add_subcommand("table", "outcome for every n up to nmax");
  ikn_table->add_option("nmax", nmax)->required()->check(CLI::Range(2, 200));
  ikn_table->add_option("--budget", budget, "node budget per n")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::uint64_t search_budget = budget ? budget : default_budget();

    if (gg_build->parsed()) {
      const GGraph gg = detail::build_from(ga);
      if (format == "summary")
        detail::ggraph_summary(out, gg);
      else if (format == "json")
        out << to_json(gg).dump() << "\n";
      else
        out << export_dot(gg.multigraph());
      return kExitOk;
    }
    if (gg_verify->parsed()) {
      const GGraph gg = detail::build_from(ga);
      const StructureReport rep = verify_structure(gg);
      out << "format: 1\n";
      detail::print_report(out, {rep.items.begin(), rep.items.end()});
      return rep.all_pass() ? kExitOk : kExitNegative;
    }
    if (gg_witness->parsed()) {
      const GGraph gg = detail::build_from(ga);
      out << witness_to_json(shifts_of(gg)).dump() << "\n";
      return kExitOk;
    }
    if (comp_cmd->parsed()) {
      const GGraph gg = detail::build_from(ga);
      IsoOptions opts;
      opts.node_budget = search_budget;
      const ComponentReport rep = component_analysis(gg, opts);
      out << "format: 1\n";
      out << "components: " << rep.count << "\n";
      out << "index [G:<S>]: " << rep.expected_count << "\n";
      for (std::size_t i = 0; i < rep.components.size(); ++i)
        out << "component " << i << ": " << rep.components[i].size() << " vertices, labels {"
            << detail::names(gg.G(), rep.cosets[i]) << "}\n";
      out << "labels are right cosets of <S>: " << detail::yes_no(rep.cosets_ok) << "\n";
      out << "each component isomorphic to Φ(<S>,S): " << detail::yes_no(rep.isomorphic_ok) << "\n";
      return rep.pass() ? kExitOk : kExitNegative;
    }
    if (kmn_cmd->parsed()) {
      const KmnPlan p = kmn_plan(km, kn, kl);
      const KmnResult r = kmn_build(p);
      if (format == "json") {
        out << to_json(r.graph).dump() << "\n";
        return kExitOk;
      }
      if (format == "dot") {
        out << export_dot(r.graph.multigraph());
        return kExitOk;
      }
      const FiniteGroup& G = *p.group;
      auto list = [](const std::vector<std::int64_t>& xs) {
        std::string s = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
        return s + "}";
      };
      out << "format: 1\n";
      out << "m: " << p.m << " n: " << p.n << " l: " << p.l << "\n";
      out << "I: " << list(p.I) << " J: " << list(p.J) << "\n";
      out << "l1: " << p.l1 << " l2: " << p.l2 << " d1: " << p.d1 << " d2: " << p.d2 << "\n";
      out << "G: " << G.name() << "\n";
      out << "s: " << G.element_name(p.s) << " order " << p.order_s << "\n";
      out << "t: " << G.element_name(p.t) << " order " << p.order_t << "\n";
      out << "parts: (" << r.level_t_size << "," << r.level_s_size << ")\n";
      out << "multiplicity: " << r.shape.l << "\n";
      out << "complete bipartite: yes\n";
      return kExitOk;
    }
    if (inc_build->parsed()) {
      Multigraph src;
      if (!graph_path.empty()) {
        if (!ga.group.empty() || !ga.gens.empty()) throw UsageError("give either --graph or -g/-s");
        src = from_json(detail::read_json(graph_path));
      } else {
        if (ga.group.empty() || ga.gens.empty()) throw UsageError("give either --graph or -g/-s");
        src = detail::build_from(ga).multigraph();
      }
      const IncidenceGraph ig = incidence_graph(src);
      if (format == "summary") {
        out << "format: 1\n";
        out << "source vertices: " << ig.source_vertices << "\n";
        out << "source edges: " << ig.source_edges << "\n";
        out << "source loops: " << detail::yes_no(ig.has_source_loops) << "\n";
        detail::multigraph_summary(out, ig.graph);
      } else {
        detail::print_graph(out, ig.graph, format);
      }
      return kExitOk;
    }
    if (inc_pre->parsed()) {
      const GGraph gg = detail::build_from(ga);
      const PreimageResult r = incidence_preimage(gg);
      if (format == "summary") {
        out << "format: 1\n";
        detail::multigraph_summary(out, r.source);
        out << "isomorphism to the incidence graph: verified\n";
      } else {
        detail::print_graph(out, r.source, format);
      }
      return kExitOk;
    }
    if (bip_cmd->parsed()) {
      const FiniteGroup G = parse_group(ga.group);
      const Element s = parse_element(G, bs), t = parse_element(G, bt);
      Subgroup sub = make_subgroup(G, generated_subgroup(G, {s, t}), "<s,t>");
      const Element ss = sub.from_parent[static_cast<std::size_t>(s)], tt = sub.from_parent[static_cast<std::size_t>(t)];
      const GroupPtr H = share(std::move(sub.group));
      const GGraph gg = build_phi(H, std::vector<Element>{ss, tt});

      std::optional<IncidenceWitnessMap> suf;
      std::optional<NecessaryResult> nec;
      if (!only_nec) suf = sufficient_bipartite_test(*H, ss, tt);
      if (!only_suf) nec = necessary_bipartite_witness(gg, search_budget);
      const bool positive = suf.has_value();
      const bool negative = nec && nec->obstruction;
      const std::string decision = positive ? "IΓ is a G-graph" : negative ? "IΓ is not a G-graph" : "undecided";

      auto f_text = [&](const std::vector<Element>& f) {
        std::string s;
        for (std::size_t x = 0; x < f.size(); ++x)
          s += (x ? ", " : "") + H->element_name(static_cast<Element>(x)) + "->" + H->element_name(f[x]);
        return s;
      };
      if (format == "json") {
        nlohmann::json j;
        j["order"] = H->order();
        j["sufficient"] = suf ? to_json(*suf) : nlohmann::json(nullptr);
        j["necessary"] = nec && nec->witness ? to_json(*nec->witness) : nlohmann::json(nullptr);
        j["obstruction"] = negative;
        j["decision"] = decision;
        out << j.dump() << "\n";
      } else {
        out << "format: 1\n";
        out << "<s,t>: order " << H->order() << "\n";
        if (!only_nec) {
          if (suf)
            out << "sufficient: involutive homomorphism with f(s) = t^" << suf->m << ", f(t) = s^" << suf->n
                << "\n  f: " << f_text(suf->f) << "\n";
          else
            out << "sufficient: no involutive homomorphism (proves nothing)\n";
        }
        if (!only_suf) {
          if (nec->witness)
            out << "necessary: level-swapping involution found, homomorphism: "
                << detail::yes_no(nec->witness->is_homomorphism) << "\n  f: " << f_text(nec->witness->f) << "\n";
          else
            out << "necessary: no level-swapping involution fixing the e edge\n";
        }
        out << "decision: " << decision << "\n";
      }
      return negative ? kExitNegative : kExitOk;
    }
    if (rec_cmd->parsed()) {
      const Multigraph g = from_json(detail::read_json(graph_path));
      const RecognitionWitness w = witness_from_json(g, detail::read_json(witness_path));
      const RecognitionReport rep = rec_loops ? check_with_loops(g, w) : check_simple(g, w);
      std::optional<ReconstructionResult> rec;
      if (rec_reconstruct && rep.all_pass()) rec = reconstruct(g, w, rec_loops);
      if (format == "json") {
        nlohmann::json j;
        j["pass"] = rep.all_pass();
        for (const CheckResult& c : rep.conditions) j["conditions"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (rec) {
          j["order"] = rec->group->order();
          j["iso"] = {{"vertex_map", rec->iso.vertex_map}, {"edge_map", rec->iso.edge_map}};
        }
        out << j.dump() << "\n";
      } else {
        out << "format: 1\n";
        out << "|H|: " << w.H.size() << "\n";
        detail::print_report(out, rep.conditions);
        if (rec) {
          std::string orders;
          for (const GenItem& it : rec->gens) orders += (orders.empty() ? "" : ",") + std::to_string(element_order(*rec->group, it.element));
          out << "reconstruction: " << (rec_loops ? "Ψ" : "Φ") << "(H,S) with |H| = " << rec->group->order()
              << ", generator orders " << orders << "\n";
          out << "isomorphism: verified\n";
        }
      }
      return rep.all_pass() ? kExitOk : kExitNegative;
    }
    if (ikn_verify->parsed()) {
      const Perm tau = parse_cycles(ikn_n, tau_text);
      const ikn::TauCheck c = ikn::verify_tau(ikn_n, tau);
      std::optional<ikn::IknReport> full;
      std::optional<ikn::OrbitReport> orb;
      std::optional<ikn::PiReport> pi;
      if (c.valid && v_full) {
        full = ikn::build_and_verify(ikn_n, tau);
        orb = ikn::orbit_structure(ikn_n, tau);
        pi = ikn::pi_map(ikn_n, tau);
      }
      const bool ok = c.valid && (!full || (full->pass() && orb->conforms && pi->conforms));
      if (format == "json") {
        nlohmann::json j = ikn::certificate_json(ikn_n, tau);
        j["valid"] = c.valid;
        if (!c.valid) j["detail"] = c.detail;
        if (full) j["graph_checks"] = full->pass();
        out << j.dump() << "\n";
      } else {
        out << "format: 1\n";
        out << "n: " << ikn_n << "\n";
        out << "tau: " << tau.to_cycle_string() << "\n";
        out << (c.valid ? "valid certificate" : "invalid certificate: " + c.detail) << "\n";
        if (full) {
          detail::print_report(out, full->checks);
          out << (orb->conforms ? "PASS " : "FAIL ") << "orbits of <ρ,τ>: " << orb->detail << "\n";
          out << (pi->conforms ? "PASS " : "FAIL ") << "π injective, missing " << pi->expected_missing << "\n";
        }
      }
      return ok ? kExitOk : kExitNegative;
    }
    if (ikn_search->parsed()) {
      ikn::SearchOptions o;
      o.mode = s_all ? ikn::SearchMode::All : s_canon ? ikn::SearchMode::UpToConjugacy : ikn::SearchMode::First;
      o.node_budget = search_budget;
      o.confirm_exhaustive = s_confirm;
      const ikn::SearchResult r = ikn::search_tau(ikn_n, o);
      const int code = r.status == ikn::SearchStatus::Certificates  ? kExitOk
                       : r.status == ikn::SearchStatus::Obstructed ? kExitNegative
                                                                    : kExitInconclusive;
      if (format == "json") {
        nlohmann::json j;
        j["n"] = ikn_n;
        j["status"] = code == kExitOk ? "certificates" : code == kExitNegative ? "obstructed" : "budget";
        j["certificates"] = nlohmann::json::array();
        for (const Perm& p : r.certificates) j["certificates"].push_back(ikn::certificate_json(ikn_n, p));
        j["obstructions"] = nlohmann::json::array();
        for (const auto& ob : r.obstructions) j["obstructions"].push_back(ikn::obstruction_json(ikn_n, ob));
        j["exhaustive"] = r.exhaustive;
        out << j.dump() << "\n";
      } else {
        out << "format: 1\n";
        out << "n: " << ikn_n << "\n";
        for (const auto& ob : r.obstructions) out << "obstruction: " << ikn::to_string(ob.kind) << " (" << ob.detail << ")\n";
        for (const Perm& p : r.certificates) out << "certificate: " << p.to_cycle_string() << "\n";
        if (r.searched) out << "search: " << (code == kExitInconclusive ? "budget exhausted" : r.exhaustive ? "exhaustive" : "stopped at first") << "\n";
        out << "decision: "
            << (code == kExitOk ? "IK_" + std::to_string(ikn_n) + " is a G-graph"
                : code == kExitNegative ? "IK_" + std::to_string(ikn_n) + " is not a G-graph"
                                        : "inconclusive")
            << "\n";
      }
      return code;
    }
    if (ikn_table->parsed()) {
      out << "format: 1\n";
      int code = kExitOk;
      for (int n = 2; n <= nmax; ++n) {
        ikn::SearchOptions o;
        o.node_budget = search_budget;
        const ikn::SearchResult r = ikn::search_tau(n, o);
        out << "n=" << n << ": ";
        if (r.status == ikn::SearchStatus::Certificates) {
          out << "G-graph, τ=" << r.certificates.front().to_cycle_string();
        } else if (r.status == ikn::SearchStatus::Obstructed) {
          out << "not a G-graph (";
          for (std::size_t i = 0; i < r.obstructions.size(); ++i) out << (i ? ", " : "") << ikn::to_string(r.obstructions[i].kind);
          out << ")";
        } else {
          out << "inconclusive (budget)";
          code = kExitInconclusive;
        }
        out << "\n";
      }
      return code;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const WitnessInvalid& e) {
    err << "witness invalid: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace ggraph::cli
