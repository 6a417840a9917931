// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggraph/cli.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/ikn.hpp"
#include "ggraph/incidence.hpp"
#include "ggraph/recognition.hpp"
#include "zoo.hpp"

using namespace ggraph;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (o.pass && t >= limit) o.fail("took " + fmt(t) + " s");
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " " << title << " [" << fmt(t) << " s, limit "
            << fmt(limit) << " s]";
  if (!o.detail.empty()) std::cout << " - " << o.detail;
  std::cout << std::endl;
}

Perm reference(int n) {
  for (const auto& [m, cycles] : ikn::known_certificates())
    if (m == n) return parse_cycles(n, cycles);
  throw std::logic_error("no reference certificate for " + std::to_string(n));
}

// certificates gathered by criteria 1-3, checked again by criterion 8
std::map<int, std::set<std::vector<int>>> found;

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

int main() {
  const auto tmp = std::filesystem::temp_directory_path() / ("ggraph_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);

  criterion(1, "reference τ table verifies", 1.0, [] {
    Outcome o;
    int ok = 0;
    for (const auto& [n, cycles] : ikn::known_certificates()) {
      const Perm t = parse_cycles(n, cycles);
      const auto c = ikn::verify_tau(n, t);
      if (!c.valid) o.fail("n=" + std::to_string(n) + ": " + c.detail);
      else {
        ++ok;
        found[n].insert(t.images());
      }
    }
    if (ikn::known_certificates().size() != 12) o.fail("table does not have 12 entries");
    if (o.pass) o.detail = std::to_string(ok) + "/12 accepted";
    return o;
  });

  criterion(2, "non-existence set {6,10,12,14,15,18}", 6 * 60.0, [] {
    Outcome o;
    const std::map<int, ikn::ObstructionKind> expected = {
        {6, ikn::ObstructionKind::Mod6},  {10, ikn::ObstructionKind::Mod4}, {12, ikn::ObstructionKind::Mod6},
        {14, ikn::ObstructionKind::Mod4}, {15, ikn::ObstructionKind::Mod24}, {18, ikn::ObstructionKind::Mod6}};
    std::string worst;
    for (const auto& [n, kind] : expected) {
      const auto t0 = Clock::now();
      std::string text;
      if (run_cli({"ikn", "search", std::to_string(n)}, &text) != cli::kExitNegative)
        o.fail("n=" + std::to_string(n) + ": search did not return a negative decision");
      const auto r = ikn::search_tau(n);
      bool has_kind = false;
      for (const auto& ob : r.obstructions) has_kind = has_kind || ob.kind == kind;
      if (r.status != ikn::SearchStatus::Obstructed || !has_kind)
        o.fail("n=" + std::to_string(n) + ": missing obstruction " + ikn::to_string(kind));
      if (n <= 14) {
        ikn::SearchOptions opts;
        opts.mode = ikn::SearchMode::All;
        opts.confirm_exhaustive = true;
        const auto full = ikn::search_tau(n, opts);
        if (!full.exhaustive || !full.certificates.empty() ||
            full.obstructions.back().kind != ikn::ObstructionKind::ExhaustiveSearch)
          o.fail("n=" + std::to_string(n) + ": exhaustive search did not confirm");
      }
      const double t = seconds_since(t0);
      if (t >= 60.0) o.fail("n=" + std::to_string(n) + " took " + fmt(t) + " s");
      worst += (worst.empty() ? "" : ", ") + std::to_string(n) + ":" + fmt(t) + "s";
    }
    if (o.pass) o.detail = "arithmetic obstruction for all six, exhaustive confirmation for n <= 14 (" + worst + ")";
    return o;
  });

  criterion(3, "search recovery", 3 * 3600.0, [] {
    Outcome o;
    std::string times;
    for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19}) {
      const auto t0 = Clock::now();
      const auto r = ikn::search_tau(n);
      const double t = seconds_since(t0);
      const double limit = n <= 13 ? 60.0 : 3600.0;
      const bool searched = r.status == ikn::SearchStatus::Certificates && ikn::verify_tau(n, r.certificates[0]).valid;
      if (searched) found[n].insert(r.certificates[0].images());
      if (n <= 13) {
        if (!searched) o.fail("n=" + std::to_string(n) + ": no certificate found");
        if (t >= limit) o.fail("n=" + std::to_string(n) + " took " + fmt(t) + " s");
      } else {
        std::string text;
        const Perm ref = reference(n);
        if (run_cli({"ikn", "verify", std::to_string(n), "--tau", ref.to_cycle_string()}, &text) != cli::kExitOk ||
            text.find("valid certificate") == std::string::npos)
          o.fail("n=" + std::to_string(n) + ": reference τ does not verify");
      }
      times += (times.empty() ? "" : ", ") + std::to_string(n) + (searched && t < limit ? ":found " : ":verified ") + fmt(t) + "s";
    }
    if (o.pass) o.detail = times;
    return o;
  });

  criterion(4, "structure proposition on the zoo", 30.0, [] {
    Outcome o;
    const auto cases = zoo::cases();
    for (const zoo::Case& c : cases) {
      const auto rep = verify_structure(zoo::build(c));
      for (const auto& item : rep.items)
        if (!item.pass) o.fail(zoo::describe(c) + ": " + item.name + " " + item.detail);
    }
    if (cases.size() < 50) o.fail("zoo has only " + std::to_string(cases.size()) + " graphs");
    if (o.pass) o.detail = std::to_string(cases.size()) + " graphs, 5/5 items each";
    return o;
  });

  criterion(5, "K^l_{m,n} grid", 60.0, [] {
    Outcome o;
    int count = 0;
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n)
        for (int l = 1; l <= 4; ++l) {
          ++count;
          const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
          const KmnPlan p = kmn_plan(m, n, l);
          const KmnResult r = kmn_build(p);
          const auto shape = is_complete_bipartite_multi(r.graph.multigraph(), r.graph.levels[1].first_vertex);
          if (!shape || !(*shape == CompleteBipartite{m, n, l})) o.fail(tag + ": shape is not K^l_{m,n}");
          if (r.level_s_size != n || r.level_t_size != m) o.fail(tag + ": level sizes");
          if (p.order_s != m * l || p.order_t != n * l) o.fail(tag + ": generator orders");
        }
    if (o.pass) o.detail = std::to_string(count) + " cases";
    return o;
  });

  criterion(6, "recognition round-trip and mutations", 120.0, [&tmp] {
    Outcome o;
    int graphs = 0, mutants = 0;
    for (const zoo::Case& c : zoo::cases()) {
      const GGraph gg = zoo::build(c);
      const auto w = shifts_of(gg);
      const std::string gpath = (tmp / "g.json").string(), wpath = (tmp / "w.json").string();
      std::ofstream(gpath) << to_json(gg).dump();
      std::ofstream(wpath) << witness_to_json(w).dump();
      std::string text;
      if (run_cli({"recognize", "--graph", gpath, "--witness", wpath, "--reconstruct"}, &text) != cli::kExitOk ||
          text.find("isomorphism: verified") == std::string::npos)
        o.fail(zoo::describe(c) + ": recognize --reconstruct failed");
      const auto r = reconstruct(gg.multigraph(), w, false);
      if (!verify_isomorphism(gg.multigraph(), r.graph.multigraph(), r.iso)) o.fail(zoo::describe(c) + ": iso does not verify");
      ++graphs;
      for (const auto& m : {zoo::delete_edge(gg, w), zoo::relabel_edge(gg, w), zoo::shrink_clique(gg, w)}) {
        ++mutants;
        if (check_simple(m.graph, m.witness).condition(m.broken).pass)
          o.fail(zoo::describe(c) + ": mutant passes " + std::string(m.broken));
      }
    }
    if (o.pass) o.detail = std::to_string(graphs) + " round trips, " + std::to_string(mutants) + " mutants rejected";
    return o;
  });

  criterion(7, "incidence suite", 120.0, [] {
    Outcome o;
    if (!isomorphic(incidence_graph(complete_graph(3)).graph, cycle_graph(6))) o.fail("I(K_3) is not C_6");
    int round_trips = 0;
    for (const zoo::Case& c : zoo::incidence_cases()) {
      const GGraph gg = zoo::build_generated(c);
      const auto pre = incidence_preimage(gg);
      if (!isomorphic(incidence_graph(pre.source).graph, gg.multigraph()))
        o.fail(zoo::describe(c) + ": I(preimage) is not the input");
      else
        ++round_trips;
    }
    if (round_trips < 10) o.fail("only " + std::to_string(round_trips) + " round trips");
    int checked = 0;
    for (int n = 2; n <= 13; ++n) {
      if (!ikn::obstructions(n).empty()) continue;
      ikn::SearchOptions opts;
      opts.mode = ikn::SearchMode::All;
      for (const Perm& t : ikn::search_tau(n, opts).certificates) {
        found[n].insert(t.images());
        const auto rep = ikn::build_and_verify(n, t);
        ++checked;
        for (const auto& ch : rep.checks)
          if (!ch.pass) o.fail("n=" + std::to_string(n) + " " + t.to_cycle_string() + ": " + ch.name);
      }
    }
    if (o.pass)
      o.detail = std::to_string(round_trips) + " preimage round trips, " + std::to_string(checked) +
                 " certificates with n <= 13 built as I(K_n)";
    return o;
  });

  criterion(8, "necessary-condition properties", 30.0, [] {
    Outcome o;
    int certs = 0, conjugates = 0;
    for (const auto& [n, set] : found)
      for (const auto& img : set) {
        const Perm t = Perm::from_images(img);
        ++certs;
        const auto orb = ikn::orbit_structure(n, t);
        if (!orb.conforms) o.fail("n=" + std::to_string(n) + " " + t.to_cycle_string() + ": orbits " + orb.detail);
        const auto pi = ikn::pi_map(n, t);
        if (!pi.conforms) o.fail("n=" + std::to_string(n) + " " + t.to_cycle_string() + ": π");
        for (long long a : numtheory::units(n - 1)) {
          ++conjugates;
          if (!ikn::verify_tau(n, ikn::conjugate_tau(n, t, a)).valid)
            o.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + ": conjugate is not a certificate");
        }
      }
    if (o.pass) o.detail = std::to_string(certs) + " certificates, " + std::to_string(conjugates) + " conjugates";
    return o;
  });

  std::filesystem::remove_all(tmp);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
