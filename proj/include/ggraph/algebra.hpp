#pragma once

// Finite groups as dense multiplication tables.
//
// Elements are indices 0..order-1 and the identity is always index 0. Groups
// built from permutations keep the permutation for every index; products of
// cyclic groups keep their moduli so elements can be printed and parsed as
// tuples.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ggraph/errors.hpp"
#include "ggraph/perm.hpp"

namespace ggraph {

using Element = int;

inline constexpr std::size_t kDefaultClosureCap = 100000;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds a group from a row-major multiplication table. Index 0 must be the identity.
  static FiniteGroup from_table(std::string name, int order, std::vector<Element> table,
                                std::vector<std::string> names = {}) {
    detail::require(order >= 1, "group order must be positive");
    detail::require(table.size() == static_cast<std::size_t>(order) * static_cast<std::size_t>(order),
                    "multiplication table has wrong size");
    for (Element v : table) detail::require(v >= 0 && v < order, "table entry out of range");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = order;
    g.table_ = std::move(table);
    for (Element x = 0; x < order; ++x)
      detail::require(g.mul(0, x) == x && g.mul(x, 0) == x, "index 0 is not the identity");
    g.inv_.assign(static_cast<std::size_t>(order), -1);
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        if (g.mul(x, y) == 0) {
          g.inv_[static_cast<std::size_t>(x)] = y;
          break;
        }
      }
      detail::require(g.inv_[static_cast<std::size_t>(x)] >= 0, "element without inverse");
    }
    if (names.empty()) {
      names.reserve(static_cast<std::size_t>(order));
      for (Element x = 0; x < order; ++x) names.push_back(std::to_string(x));
    }
    detail::require(names.size() == static_cast<std::size_t>(order), "wrong number of element names");
    g.names_ = std::move(names);
    return g;
  }

  int order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const { return inv_[static_cast<std::size_t>(a)]; }

  Element pow(Element x, long long k) const {
    Element base = k < 0 ? inv(x) : x;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Element r = identity();
    while (e) {
      if (e & 1ULL) r = mul(r, base);
      base = mul(base, base);
      e >>= 1ULL;
    }
    return r;
  }

  bool valid(Element x) const noexcept { return x >= 0 && x < order_; }

  const std::string& element_name(Element x) const { return names_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  /// Moduli of the cyclic factors when this is Z/m1 x ... x Z/mk, otherwise empty.
  const std::vector<int>& moduli() const noexcept { return moduli_; }

  /// Permutation of every element when this group was generated by permutations, otherwise empty.
  const std::vector<Perm>& perms() const noexcept { return perms_; }
  int perm_degree() const noexcept { return perm_degree_; }

  std::optional<Element> find_perm(const Perm& p) const {
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Element> find_name(std::string_view name) const {
    for (Element x = 0; x < order_; ++x)
      if (names_[static_cast<std::size_t>(x)] == name) return x;
    return std::nullopt;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order_; ++a)
      for (Element b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  void set_name(std::string name) { name_ = std::move(name); }

 private:
  friend FiniteGroup cyclic_group(int n);
  friend FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
  friend FiniteGroup perm_group(int degree, const std::vector<Perm>& gens, std::size_t cap);

  std::string name_;
  int order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> names_;
  std::vector<int> moduli_;
  std::vector<Perm> perms_;
  int perm_degree_ = 0;
  std::unordered_map<Perm, Element, PermHash> perm_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// Z/nZ with elements 0..n-1.
inline FiniteGroup cyclic_group(int n) {
  detail::require(n >= 1, "cyclic group order must be positive");
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  FiniteGroup g = FiniteGroup::from_table("Z" + std::to_string(n), n, std::move(table));
  g.moduli_ = {n};
  return g;
}

/// Componentwise product; (a, b) is encoded as a * |g2| + b.
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a = g1.mul(x / n2, y / n2);
      const int b = g2.mul(x % n2, y % n2);
      table[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = a * n2 + b;
    }
  const bool tuples = !g1.moduli().empty() && !g2.moduli().empty();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  auto strip = [](const std::string& s) {
    return (s.size() >= 2 && s.front() == '(' && s.back() == ')') ? s.substr(1, s.size() - 2) : s;
  };
  for (int x = 0; x < n; ++x) {
    const std::string& a = g1.element_name(x / n2);
    const std::string& b = g2.element_name(x % n2);
    if (tuples)
      names.push_back("(" + strip(a) + "," + strip(b) + ")");
    else
      names.push_back("(" + a + "," + b + ")");
  }
  FiniteGroup g = FiniteGroup::from_table(g1.name() + "x" + g2.name(), n, std::move(table), std::move(names));
  if (tuples) {
    g.moduli_ = g1.moduli();
    g.moduli_.insert(g.moduli_.end(), g2.moduli().begin(), g2.moduli().end());
  }
  return g;
}

/// Group generated by permutations of degree `degree`, elements in breadth-first
/// discovery order with the identity at index 0. mul(i, j) is perms[i] * perms[j].
inline FiniteGroup perm_group(int degree, const std::vector<Perm>& gens, std::size_t cap = kDefaultClosureCap) {
  detail::require(degree >= 1, "permutation degree must be positive");
  for (const Perm& p : gens)
    if (p.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(p.degree()) + " in a group of degree " +
                           std::to_string(degree));
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_map<Perm, Element, PermHash> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& s : gens) {
      Perm y = elems[head] * s;
      if (index.find(y) != index.end()) continue;
      if (elems.size() >= cap)
        throw CapExceeded("permutation group closure exceeds cap of " + std::to_string(cap) + " elements");
      index.emplace(y, static_cast<Element>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          index.at(elems[static_cast<std::size_t>(a)] * elems[static_cast<std::size_t>(b)]);
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (const Perm& p : elems) names.push_back(p.to_cycle_string(false, ' '));
  std::string gname = "perm:" + std::to_string(degree) + ":";
  for (std::size_t i = 0; i < gens.size(); ++i) gname += (i ? "," : "") + gens[i].to_cycle_string(false, ' ');
  FiniteGroup g = FiniteGroup::from_table(gname, n, std::move(table), std::move(names));
  g.perm_degree_ = degree;
  g.perms_ = std::move(elems);
  g.perm_index_ = std::move(index);
  return g;
}

/// S_n generated by (1,2) and (1,...,n).
inline FiniteGroup symmetric_group(int n, std::size_t cap = kDefaultClosureCap) {
  detail::require(n >= 1, "symmetric group degree must be positive");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{1, 2}}));
    std::vector<int> full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  FiniteGroup g = perm_group(n, gens, cap);
  g.set_name("S" + std::to_string(n));
  return g;
}

/// Symmetries of the regular n-gon (order 2n), n >= 3.
inline FiniteGroup dihedral_group(int n) {
  detail::require(n >= 3, "dihedral group needs n >= 3");
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    rot[static_cast<std::size_t>(k - 1)] = k % n + 1;
    refl[static_cast<std::size_t>(k - 1)] = n + 1 - k;
  }
  FiniteGroup g = perm_group(n, {Perm::from_images(rot), Perm::from_images(refl)});
  g.set_name("D" + std::to_string(n));
  return g;
}

/// Quaternion group from its Cayley table: 1, i, j, k, -1, -i, -j, -k at indices 0..7.
inline FiniteGroup quaternion_group() {
  // unit products: row * column as (sign, unit) with units 1,i,j,k = 0..3
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4) ^ (b / 4) ^ neg[ua][ub];
      table[static_cast<std::size_t>(a * 8 + b)] = sign * 4 + unit[ua][ub];
    }
  return FiniteGroup::from_table("Q8", 8, std::move(table), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

/// Least k >= 1 with x^k = e.
inline int element_order(const FiniteGroup& g, Element x) {
  detail::require(g.valid(x), "element out of range");
  int k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// All powers of x, sorted.
inline std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x) {
  detail::require(g.valid(x), "element out of range");
  std::vector<Element> out{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

/// The right coset <s>x.
struct Coset {
  Element generator = 0;
  std::vector<Element> elements;  ///< sorted
  Element rep = 0;                ///< minimum of `elements`

  bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  bool operator==(const Coset& o) const { return generator == o.generator && elements == o.elements; }
};

inline Coset right_coset(const FiniteGroup& g, Element s, Element x) {
  detail::require(g.valid(s) && g.valid(x), "element out of range");
  Coset c;
  c.generator = s;
  Element y = x;
  do {
    c.elements.push_back(y);
    y = g.mul(s, y);
  } while (y != x);
  std::sort(c.elements.begin(), c.elements.end());
  c.rep = c.elements.front();
  return c;
}

/// All right cosets of <s>, ordered by representative.
inline std::vector<Coset> right_cosets(const FiniteGroup& g, Element s) {
  std::vector<Coset> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    Coset c = right_coset(g, s, x);
    for (Element y : c.elements) covered[static_cast<std::size_t>(y)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

/// Closure of gens and the identity under multiplication, sorted.
inline std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element s : gens) detail::require(g.valid(s), "element out of range");
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::vector<Element> work{g.identity()};
  in[0] = true;
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(work[head], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

/// A subgroup re-indexed as a group of its own.
struct Subgroup {
  FiniteGroup group;
  std::vector<Element> to_parent;  ///< subgroup index -> parent index; to_parent[0] is the identity
  std::vector<int> from_parent;    ///< parent index -> subgroup index or -1
};

inline Subgroup make_subgroup(const FiniteGroup& g, const std::vector<Element>& elements, std::string name = {}) {
  Subgroup sub;
  sub.to_parent = elements;
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  detail::require(!sub.to_parent.empty() && sub.to_parent.front() == g.identity(), "subgroup must contain the identity");
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) sub.from_parent[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<int>(i);
  const int n = static_cast<int>(sub.to_parent.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(g.element_name(sub.to_parent[static_cast<std::size_t>(a)]));
    for (int b = 0; b < n; ++b) {
      const int p = sub.from_parent[static_cast<std::size_t>(
          g.mul(sub.to_parent[static_cast<std::size_t>(a)], sub.to_parent[static_cast<std::size_t>(b)]))];
      detail::require(p >= 0, "element set is not closed under multiplication");
      table[static_cast<std::size_t>(a * n + b)] = p;
    }
  }
  if (name.empty()) name = "subgroup of " + g.name();
  sub.group = FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(names));
  return sub;
}

/// Checks identity, inverse and associativity laws. Associativity is exhaustive up to
/// order 256 and sampled (10 * order triples, fixed seed) above. Returns a failure description.
inline std::optional<std::string> verify_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return "identity law fails at " + std::to_string(x);
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return "inverse law fails at " + std::to_string(x);
  }
  auto assoc = [&](Element a, Element b, Element c) -> std::optional<std::string> {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
  };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (auto f = assoc(a, b, c)) return f;
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 10 * n; ++i)
      if (auto f = assoc(pick(rng), pick(rng), pick(rng))) return f;
  }
  return std::nullopt;
}

/// One occurrence of a generator in a multiset.
struct GenItem {
  Element element = 0;
  int occurrence = 0;  ///< 0, 1, 2, ... among equal elements
  bool operator==(const GenItem&) const = default;
};

/// Ordered multiset of generators. Repeated elements get increasing occurrence tags.
class GenMultiset {
 public:
  GenMultiset() = default;

  static GenMultiset from_elements(const FiniteGroup& g, const std::vector<Element>& elems) {
    detail::require(!elems.empty(), "generator multiset must be nonempty");
    GenMultiset s;
    for (Element x : elems) {
      detail::require(g.valid(x), "generator out of range");
      int occ = 0;
      for (const auto& it : s.items_)
        if (it.element == x) ++occ;
      s.items_.push_back({x, occ});
    }
    return s;
  }

  std::size_t size() const noexcept { return items_.size(); }
  const GenItem& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<GenItem>& items() const noexcept { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (const auto& it : items_) out.push_back(it.element);
    return out;
  }

 private:
  std::vector<GenItem> items_;
};

// ---------------------------------------------------------------------------
// Group and element syntax

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parse_positive(std::string_view s, std::size_t pos, const char* what) {
  if (s.empty()) throw ParseError(pos, std::string("expected ") + what);
  long long v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(pos + i, std::string("expected digit in ") + what);
    v = v * 10 + (s[i] - '0');
    if (v > 100000000) throw ParseError(pos, std::string(what) + " too large");
  }
  if (v < 1) throw ParseError(pos, std::string(what) + " must be positive");
  return static_cast<int>(v);
}

/// Splits on commas outside parentheses, returning (piece, offset) pairs.
inline std::vector<std::pair<std::string, std::size_t>> split_top_level(std::string_view s, char sep = ',') {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.emplace_back(std::string(s.substr(start, i - start)), start);
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace detail

/// Parses a group descriptor:
///   Z<n>               cyclic group
///   Z<m>xZ<n>[x...]    direct product of cyclic groups
///   S<n>               symmetric group
///   perm:<d>:<cycles>[,<cycles>...]   group generated by permutations of degree d
/// Also accepted: D<n> (dihedral, order 2n) and Q8 (quaternion Cayley table).
inline FiniteGroup parse_group(std::string_view spec, std::size_t cap = kDefaultClosureCap) {
  const std::string s = detail::trim(spec);
  if (s.empty()) throw ParseError(0, "empty group descriptor");
  if (s.rfind("perm:", 0) == 0) {
    const std::size_t colon = s.find(':', 5);
    if (colon == std::string::npos) throw ParseError(5, "expected ':' after degree");
    const int degree = detail::parse_positive(std::string_view(s).substr(5, colon - 5), 5, "degree");
    std::vector<Perm> gens;
    for (const auto& [piece, off] : detail::split_top_level(std::string_view(s).substr(colon + 1)))
      gens.push_back(parse_cycles(degree, piece, colon + 1 + off));
    return perm_group(degree, gens, cap);
  }
  if (s == "Q8") return quaternion_group();
  if (s[0] == 'S') return symmetric_group(detail::parse_positive(std::string_view(s).substr(1), 1, "degree"), cap);
  if (s[0] == 'D') return dihedral_group(detail::parse_positive(std::string_view(s).substr(1), 1, "polygon size"));
  if (s[0] == 'Z') {
    std::optional<FiniteGroup> g;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != 'Z') throw ParseError(pos, "expected 'Z'");
      std::size_t end = s.find('x', pos);
      if (end == std::string::npos) end = s.size();
      const int n = detail::parse_positive(std::string_view(s).substr(pos + 1, end - pos - 1), pos + 1, "cyclic order");
      FiniteGroup c = cyclic_group(n);
      g = g ? direct_product(*g, c) : std::move(c);
      if (end == s.size()) break;
      pos = end + 1;
      if (pos == s.size()) throw ParseError(pos, "expected factor after 'x'");
    }
    return *g;
  }
  throw ParseError(0, "unknown group descriptor '" + s + "'");
}

/// Parses an element of g: an integer for Z<n>, a tuple "(a,b,...)" for products of
/// cyclic groups, cycle notation for permutation groups, "e" for the identity, or an
/// element name otherwise.
inline Element parse_element(const FiniteGroup& g, std::string_view spec) {
  const std::string s = detail::trim(spec);
  if (s.empty()) throw ParseError(0, "empty element");
  if (s == "e") return g.identity();
  if (auto byname = g.find_name(s)) return *byname;
  if (!g.perms().empty()) {
    const Perm p = parse_cycles(g.perm_degree(), s);
    if (auto idx = g.find_perm(p)) return *idx;
    throw ParseError(0, "permutation " + p.to_cycle_string(false, ' ') + " is not in " + g.name());
  }
  if (!g.moduli().empty()) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    if (s.front() == '(') {
      if (s.back() != ')') throw ParseError(s.size() - 1, "expected ')'");
      for (auto [piece, off] : detail::split_top_level(std::string_view(s).substr(1, s.size() - 2)))
        parts.emplace_back(std::move(piece), off + 1);
    } else {
      parts.emplace_back(s, 0);
    }
    if (parts.size() != g.moduli().size())
      throw ParseError(0, "expected " + std::to_string(g.moduli().size()) + " component(s), got " +
                              std::to_string(parts.size()));
    long long idx = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string t = detail::trim(parts[i].first);
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(t, &used);
        if (used != t.size()) throw ParseError(parts[i].second + used, "trailing characters in integer");
      } catch (const std::logic_error&) {
        throw ParseError(parts[i].second, "expected integer component");
      }
      const int m = g.moduli()[i];
      v = ((v % m) + m) % m;
      idx = idx * m + v;
    }
    return static_cast<Element>(idx);
  }
  throw ParseError(0, "unknown element '" + s + "' in " + g.name());
}

/// Parses a comma-separated list of elements (commas inside parentheses are kept).
inline std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view spec) {
  std::vector<Element> out;
  for (const auto& [piece, off] : detail::split_top_level(spec)) {
    try {
      out.push_back(parse_element(g, piece));
    } catch (const ParseError& e) {
      throw ParseError(off + e.position(), e.message());
    }
  }
  return out;
}

}  // namespace ggraph
