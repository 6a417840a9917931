#pragma once

// IK_n as a G-graph: σ, ρ, τ-certificates, arithmetic obstructions and the τ search.
//
// Points 1..n-2 are residues mod n-1, point n-1 is residue 0 and point n is ∞.
// σ = (1,2,...,n-1) adds 1; ρ negates residues and swaps 0 with ∞.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ggraph/algebra.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/incidence.hpp"
#include "ggraph/numtheory.hpp"
#include "ggraph/perm.hpp"

namespace ggraph::ikn {

struct RhoSigma {
  int n = 0;
  Perm sigma;
  Perm rho;
};

inline RhoSigma make_rho_sigma(int n) {
  detail::require(n >= 2, "need n >= 2");
  std::vector<int> s(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
  for (int k = 1; k <= n - 1; ++k) s[static_cast<std::size_t>(k - 1)] = k == n - 1 ? 1 : k + 1;
  s[static_cast<std::size_t>(n - 1)] = n;
  for (int k = 1; k <= n - 2; ++k) r[static_cast<std::size_t>(k - 1)] = n - 1 - k;
  r[static_cast<std::size_t>(n - 2)] = n;
  r[static_cast<std::size_t>(n - 1)] = n - 1;
  return {n, Perm::from_images(std::move(s)), Perm::from_images(std::move(r))};
}

struct TauCheck {
  bool valid = false;
  std::string detail;  ///< empty when valid
  int k = 0;           ///< failing k, 0 if the failure is not a relation failure
  int point = 0;       ///< point where the two sides differ
};

/// τ² = id, τ ≠ id, τ(n) = n-1 and τσ^kτ = σ^{τ(k)} τ σ^{τρτ(k)} for k = 1..n-2.
inline TauCheck verify_tau(int n, const Perm& tau) {
  TauCheck c;
  if (n < 2) {
    c.detail = "n must be at least 2";
    return c;
  }
  if (tau.degree() != n) {
    c.detail = "τ has degree " + std::to_string(tau.degree()) + ", expected " + std::to_string(n);
    return c;
  }
  if (tau.is_identity() || !(tau * tau).is_identity()) {
    c.detail = "τ does not have order 2";
    return c;
  }
  if (tau(n) != n - 1) {
    c.detail = "τ(" + std::to_string(n) + ") = " + std::to_string(tau(n)) + ", expected " + std::to_string(n - 1);
    return c;
  }
  const RhoSigma rs = make_rho_sigma(n);
  for (int k = 1; k <= n - 2; ++k) {
    const Perm lhs = tau * rs.sigma.pow(k) * tau;
    const Perm rhs = rs.sigma.pow(tau(k)) * tau * rs.sigma.pow(tau(rs.rho(tau(k))));
    for (int x = 1; x <= n; ++x)
      if (lhs(x) != rhs(x)) {
        c.k = k;
        c.point = x;
        c.detail = "relation fails at k=" + std::to_string(k) + " on point " + std::to_string(x) + ": " +
                   std::to_string(lhs(x)) + " != " + std::to_string(rhs(x));
        return c;
      }
  }
  c.valid = true;
  return c;
}

enum class ObstructionKind { Mod4, Mod6, Mod24, ExhaustiveSearch };

inline std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Mod4: return "Mod4";
    case ObstructionKind::Mod6: return "Mod6";
    case ObstructionKind::Mod24: return "Mod24";
    case ObstructionKind::ExhaustiveSearch: return "ExhaustiveSearch";
  }
  return "?";
}

struct Obstruction {
  ObstructionKind kind;
  std::string detail;
};

/// Arithmetic obstructions: n > 2 with n ≡ 2 mod 4; 6 | n; n ≡ 15 or 21 mod 24.
inline std::vector<Obstruction> obstructions(int n) {
  detail::require(n >= 2, "need n >= 2");
  std::vector<Obstruction> out;
  if (n > 2 && n % 4 == 2) out.push_back({ObstructionKind::Mod4, std::to_string(n) + " ≡ 2 mod 4"});
  if (n % 6 == 0) out.push_back({ObstructionKind::Mod6, "6 divides " + std::to_string(n)});
  if (n % 24 == 15 || n % 24 == 21)
    out.push_back({ObstructionKind::Mod24, std::to_string(n) + " ≡ " + std::to_string(n % 24) + " mod 24"});
  return out;
}

/// Reference certificates (n, cycles) for n ≤ 19.
inline const std::vector<std::pair<int, std::string>>& known_certificates() {
  static const std::vector<std::pair<int, std::string>> table = {
      {2, "(1,2)"},
      {3, "(1)(2,3)"},
      {4, "(1,2)(3,4)"},
      {5, "(1)(2,3)(4,5)"},
      {7, "(2)(1,5)(3,4)(6,7)"},
      {8, "(1,3)(2,6)(4,5)(7,8)"},
      {9, "(4)(1,2)(3,6)(5,7)(8,9)"},
      {11, "(1)(2,4)(3,6)(5,9)(7,8)(10,11)"},
      {13, "(1)(2,10)(3,4)(5,8)(6,11)(7,9)(12,13)"},
      {16, "(1,12)(3,4)(11,14)(2,9)(6,8)(7,13)(5,10)(15,16)"},
      {17, "(14)(2,8)(1,13)(3,12)(4,15)(5,6)(7,10)(9,11)(16,17)"},
      {19, "(1)(9,17)(3,15)(2,7)(4,11)(14,16)(5,8)(6,10)(12,13)(18,19)"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Conjugation by m_a

/// m_a τ m_a⁻¹ with m_a(r) = a·r on residues and m_a(n) = n.
inline Perm conjugate_tau(int n, const Perm& tau, long long a) {
  detail::require(n >= 2, "need n >= 2");
  const long long m = n - 1;
  const long long ar = numtheory::mod(a, m);
  detail::require(numtheory::coprime(ar, m), "a is not a unit mod n-1");
  if (auto c = verify_tau(n, tau); !c.valid) throw PreconditionFailed("not a certificate: " + c.detail);
  auto to_res = [&](int p) -> long long { return p == n ? -1 : p % m; };
  auto to_point = [&](long long r) -> int { return r < 0 ? n : (r == 0 ? n - 1 : static_cast<int>(r)); };
  auto ma = [&](int p) { const long long r = to_res(p); return to_point(r < 0 ? r : (ar * r) % m); };
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) img[static_cast<std::size_t>(ma(p) - 1)] = ma(tau(p));
  return Perm::from_images(std::move(img));
}

/// Lexicographically least image array among all m_a-conjugates.
inline Perm canonical_tau(int n, const Perm& tau) {
  Perm best = tau;
  for (long long a : numtheory::units(n - 1)) {
    Perm c = conjugate_tau(n, tau, a);
    if (c.images() < best.images()) best = std::move(c);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Necessary conditions

struct OrbitReport {
  std::vector<std::vector<int>> orbits;  ///< orbits of <ρ,τ> on 1..n, each sorted, by least point
  long long group_order = 0;             ///< |<ρ,τ>|
  bool order_is_six = false;
  bool conforms = false;                 ///< orbit sizes: 6 except one or two 2s, and one 1 or 3 iff n odd
  std::string detail;
};

inline OrbitReport orbit_structure(int n, const Perm& tau) {
  if (auto c = verify_tau(n, tau); !c.valid) throw PreconditionFailed("not a certificate: " + c.detail);
  const RhoSigma rs = make_rho_sigma(n);
  OrbitReport r;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p = 1; p <= n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    std::vector<int> orb{p};
    seen[static_cast<std::size_t>(p)] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (int q : {rs.rho(orb[i]), tau(orb[i])})
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = true;
          orb.push_back(q);
        }
    std::sort(orb.begin(), orb.end());
    r.orbits.push_back(std::move(orb));
  }
  r.group_order = perm_group(n, {rs.rho, tau}).order();
  r.order_is_six = r.group_order == 6;
  int twos = 0, odd_small = 0, other = 0;
  for (const auto& o : r.orbits) {
    if (o.size() == 2) ++twos;
    else if (o.size() == 1 || o.size() == 3) ++odd_small;
    else if (o.size() != 6) ++other;
  }
  const bool odd = n % 2 == 1;
  r.conforms = other == 0 && (twos == 1 || twos == 2) && odd_small == (odd ? 1 : 0);
  r.detail = std::to_string(r.orbits.size()) + " orbits (" + std::to_string(twos) + " of size 2, " +
             std::to_string(odd_small) + " of size 1 or 3), |<ρ,τ>| = " + std::to_string(r.group_order);
  return r;
}

struct PiReport {
  std::vector<long long> values;  ///< values[k-1] = k - τ(k) mod n-1
  bool injective = false;
  std::vector<long long> missing;
  long long expected_missing = 0;  ///< 0 for n even, (n-1)/2 for n odd
  bool conforms = false;
};

inline PiReport pi_map(int n, const Perm& tau) {
  if (auto c = verify_tau(n, tau); !c.valid) throw PreconditionFailed("not a certificate: " + c.detail);
  const long long m = n - 1;
  PiReport r;
  std::vector<int> hits(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= n - 2; ++k) {
    const long long v = numtheory::mod(static_cast<long long>(k) - tau(k), m);
    r.values.push_back(v);
    ++hits[static_cast<std::size_t>(v)];
  }
  r.injective = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
  for (long long v = 0; v < m; ++v)
    if (!hits[static_cast<std::size_t>(v)]) r.missing.push_back(v);
  r.expected_missing = n % 2 == 0 ? 0 : m / 2;
  r.conforms = r.injective && r.missing == std::vector<long long>{r.expected_missing};
  return r;
}

// ---------------------------------------------------------------------------
// Search

enum class SearchMode { First, All, UpToConjugacy };

struct SearchOptions {
  SearchMode mode = SearchMode::First;
  std::uint64_t node_budget = 10'000'000;
  bool confirm_exhaustive = false;  ///< search even when an arithmetic obstruction applies
  bool derived_pruning = true;      ///< braid relation and injectivity of π
};

enum class SearchStatus { Certificates, Obstructed, BudgetExceeded };

struct SearchResult {
  int n = 0;
  SearchStatus status = SearchStatus::Obstructed;
  std::vector<Perm> certificates;        ///< sorted by image array
  std::vector<Obstruction> obstructions; ///< arithmetic ones, plus ExhaustiveSearch when the search found nothing
  bool searched = false;
  bool exhaustive = false;               ///< the search ran to completion
  std::uint64_t nodes = 0;
};

namespace detail {

class TauSearch {
 public:
  TauSearch(int n, const SearchOptions& opts) : n_(n), m_(n - 1), inf_(n - 1), opts_(opts) {
    t_.assign(static_cast<std::size_t>(n), -1);
  }

  /// Runs the search; returns false if the budget ran out.
  bool run(const std::function<bool(const std::vector<int>&)>& found) {
    found_ = &found;
    if (!assign(inf_, 0) || !propagate()) return true;
    return recurse();
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Residue-encoded assignment to a 1-based image array.
  std::vector<int> to_images() const {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) img[static_cast<std::size_t>(point(x) - 1)] = point(t_[static_cast<std::size_t>(x)]);
    return img;
  }

 private:
  int point(int x) const { return x == inf_ ? n_ : (x == 0 ? n_ - 1 : x); }
  int add(int r, int k) const { return r == inf_ ? inf_ : (r + k) % m_; }
  int sub(int r, int k) const { return r == inf_ ? inf_ : ((r - k) % m_ + m_) % m_; }
  int rho(int r) const { return r == inf_ ? 0 : (r == 0 ? inf_ : (m_ - r) % m_); }
  int tv(int x) const { return t_[static_cast<std::size_t>(x)]; }

  bool assign(int x, int y) {
    if (tv(x) >= 0 || tv(y) >= 0) return tv(x) == y && tv(y) == x;
    if (x == y && (n_ % 2 == 0 || x == 0 || x == inf_)) return false;
    if (opts_.derived_pruning && x != inf_ && y != inf_ && x != 0 && y != 0) {
      const int px = ((x - y) % m_ + m_) % m_, py = ((y - x) % m_ + m_) % m_;
      if (pi_used(px) || (x != y && (px == py || pi_used(py)))) return false;
      mark_pi(px, true);
      if (x != y) mark_pi(py, true);
    }
    t_[static_cast<std::size_t>(x)] = y;
    t_[static_cast<std::size_t>(y)] = x;
    trail_.push_back(x);
    return true;
  }

  bool pi_used(int v) const { return !pi_.empty() && pi_[static_cast<std::size_t>(v)]; }
  void mark_pi(int v, bool on) {
    if (pi_.empty()) pi_.assign(static_cast<std::size_t>(m_), false);
    pi_[static_cast<std::size_t>(v)] = on;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      const int y = tv(x);
      if (opts_.derived_pruning && x != inf_ && y != inf_ && x != 0 && y != 0) {
        mark_pi(((x - y) % m_ + m_) % m_, false);
        if (x != y) mark_pi(((y - x) % m_ + m_) % m_, false);
      }
      t_[static_cast<std::size_t>(x)] = -1;
      t_[static_cast<std::size_t>(y)] = -1;
    }
  }

  /// Forces values implied by the relation τ(τ(z)+k) = τ(z+b) + a (a = τ(k), b = τ(-a)),
  /// and by τρτ = ρτρ. Returns false on contradiction.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      const std::size_t before = trail_.size();
      for (int k = 1; k <= n_ - 2; ++k) {
        const int a = tv(k);
        if (a < 0) continue;
        const int b = tv(rho(a));
        if (b < 0) continue;
        for (int z = 0; z < n_; ++z) {
          if (tv(z) < 0) continue;
          const int p = add(tv(z), k), q = add(z, b);
          const int tp = tv(p), tq = tv(q);
          if (tp >= 0 && tq >= 0) {
            if (tp != add(tq, a)) return false;
          } else if (tq >= 0) {
            if (!assign(p, add(tq, a))) return false;
          } else if (tp >= 0) {
            if (!assign(q, sub(tp, a))) return false;
          }
        }
      }
      if (opts_.derived_pruning) {
        for (int x = 0; x < n_; ++x) {
          if (tv(x) < 0 || tv(rho(x)) < 0) continue;
          const int want = rho(tv(rho(x)));
          const int y = rho(tv(x));
          if (tv(y) >= 0) {
            if (tv(y) != want) return false;
          } else if (!assign(y, want)) {
            return false;
          }
        }
      }
      changed = trail_.size() != before;
    }
    return true;
  }

  bool recurse() {
    if (++nodes_ > opts_.node_budget) return false;
    int x = -1;
    for (int r = 1; r <= n_ - 2; ++r)
      if (tv(r) < 0) {
        x = r;
        break;
      }
    if (x < 0) return (*found_)(to_images()) ? true : (stop_ = true, true);
    std::vector<int> cands;
    for (int y = x + 1; y <= n_ - 2; ++y)
      if (tv(y) < 0) cands.push_back(y);
    if (n_ % 2 == 1) cands.push_back(x);
    for (int y : cands) {
      const std::size_t mark = trail_.size();
      if (assign(x, y) && propagate())
        if (!recurse()) return false;
      undo(mark);
      if (stop_) return true;
    }
    return true;
  }

  int n_, m_, inf_;
  SearchOptions opts_;
  std::vector<int> t_;
  std::vector<int> trail_;
  std::vector<bool> pi_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  const std::function<bool(const std::vector<int>&)>* found_ = nullptr;
};

}  // namespace detail

/// Backtracking over involutions with τ(n) = n-1, pruned by the relation, π-injectivity
/// and the braid relation. Never reports non-existence without an arithmetic obstruction
/// or a completed search.
inline SearchResult search_tau(int n, const SearchOptions& opts = {}) {
  ggraph::detail::require(n >= 2, "need n >= 2");
  SearchResult res;
  res.n = n;
  res.obstructions = obstructions(n);
  if (!res.obstructions.empty() && !opts.confirm_exhaustive) {
    res.status = SearchStatus::Obstructed;
    return res;
  }
  res.searched = true;
  detail::TauSearch search(n, opts);
  std::set<std::vector<int>> seen;
  const bool completed = search.run([&](const std::vector<int>& img) {
    Perm tau = Perm::from_images(img);
    ggraph::detail::ensure(verify_tau(n, tau).valid, "search produced an invalid certificate");
    if (opts.mode == SearchMode::UpToConjugacy) tau = canonical_tau(n, tau);
    if (seen.insert(tau.images()).second) res.certificates.push_back(std::move(tau));
    return opts.mode != SearchMode::First;
  });
  res.nodes = search.nodes();
  std::sort(res.certificates.begin(), res.certificates.end());
  if (!res.certificates.empty()) {
    res.status = SearchStatus::Certificates;
    res.exhaustive = completed && opts.mode != SearchMode::First;
  } else if (!completed) {
    res.status = res.obstructions.empty() ? SearchStatus::BudgetExceeded : SearchStatus::Obstructed;
  } else {
    res.exhaustive = true;
    res.status = SearchStatus::Obstructed;
    res.obstructions.push_back({ObstructionKind::ExhaustiveSearch, "no certificate among all involutions"});
  }
  return res;
}

// ---------------------------------------------------------------------------
// End-to-end graph check

struct IknReport {
  int n = 0;
  GroupPtr group;
  GGraph graph;  ///< Φ(<σ,τ>, {σ,τ})
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

/// Builds Φ(<σ,τ>,{σ,τ}) and checks it is I(K_n): group order n(n-1), parts of sizes n and
/// n(n-1)/2 with degrees n-1 and 2, each 2-subset of the first part met exactly once, and the
/// preimage of the incidence construction is K_n.
inline IknReport build_and_verify(int n, const Perm& tau) {
  if (auto c = verify_tau(n, tau); !c.valid) throw PreconditionFailed("not a certificate: " + c.detail);
  const RhoSigma rs = make_rho_sigma(n);
  IknReport r;
  r.n = n;
  r.group = share(perm_group(n, {rs.sigma, tau}));
  const FiniteGroup& G = *r.group;
  const auto s = G.find_perm(rs.sigma), t = G.find_perm(tau);
  ggraph::detail::ensure(s.has_value() && t.has_value(), "generator missing from its own group");
  r.graph = build_phi(r.group, std::vector<Element>{*s, *t});
  const Multigraph& g = r.graph.multigraph();
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("group order n(n-1)", G.order() == n * (n - 1), "|<σ,τ>| = " + std::to_string(G.order()));
  add("bipartite", is_bipartite(g).has_value() && !g.has_loops());

  const auto vs = level(r.graph, 0), vt = level(r.graph, 1);
  bool ok = static_cast<int>(vs.size()) == n;
  for (int v : vs) ok = ok && degree(g, v) == n - 1;
  add("first part: n vertices of degree n-1", ok, std::to_string(vs.size()) + " vertices");
  ok = static_cast<int>(vt.size()) == n * (n - 1) / 2;
  for (int v : vt) ok = ok && degree(g, v) == 2;
  add("second part: n(n-1)/2 vertices of degree 2", ok, std::to_string(vt.size()) + " vertices");

  std::set<std::pair<int, int>> pairs;
  bool distinct = true;
  for (int v : vt) {
    std::vector<int> nb;
    for (const auto& [w, ids] : g.neighbors(v))
      for (std::size_t i = 0; i < ids.size(); ++i) nb.push_back(w);
    if (nb.size() != 2 || nb[0] == nb[1] || !pairs.insert({std::min(nb[0], nb[1]), std::max(nb[0], nb[1])}).second)
      distinct = false;
  }
  add("neighbour pairs biject onto 2-subsets", distinct && static_cast<int>(pairs.size()) == n * (n - 1) / 2);

  bool kn = false;
  std::string why;
  try {
    const PreimageResult pre = incidence_preimage(r.graph);
    kn = pre.source.vertex_count() == n && pre.source.is_simple() && pre.source.edge_count() == n * (n - 1) / 2;
    for (int u = 0; u < n && kn; ++u)
      for (int v = u + 1; v < n && kn; ++v) kn = pre.source.multiplicity(u, v) == 1;
  } catch (const Error& e) {
    why = e.what();
  }
  add("preimage is K_n", kn, why);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json certificate_json(int n, const Perm& tau) {
  return {{"n", n}, {"tau", tau.images()}, {"cycles", tau.to_cycle_string()}, {"canonical", canonical_tau(n, tau) == tau}};
}

inline nlohmann::json obstruction_json(int n, const Obstruction& o) { return {{"n", n}, {"kind", to_string(o.kind)}}; }

/// Reads a certificate object back; the "tau" images take precedence over "cycles".
inline std::pair<int, Perm> certificate_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (j.contains("tau")) return {n, Perm::from_images(j.at("tau").get<std::vector<int>>())};
    return {n, parse_cycles(n, j.at("cycles").get<std::string>())};
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed certificate JSON: ") + ex.what());
  }
}

}  // namespace ggraph::ikn
