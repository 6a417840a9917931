#pragma once

// Permutations of {1..n} in image-array form.
//
// Composition is right-to-left: (p * q)(x) = p(q(x)).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ggraph/errors.hpp"

namespace ggraph {

class Perm {
 public:
  Perm() = default;

  /// Identity of degree n.
  explicit Perm(int n) : img_(static_cast<std::size_t>(n)) { std::iota(img_.begin(), img_.end(), 1); }

  /// From a 1-based image array: images[k-1] is the image of point k.
  static Perm from_images(std::vector<int> images) {
    Perm p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size() + 1, false);
    for (int v : p.img_) {
      if (v < 1 || v > p.degree() || seen[static_cast<std::size_t>(v)])
        throw PreconditionFailed("image array is not a bijection of {1.." + std::to_string(p.degree()) + "}");
      seen[static_cast<std::size_t>(v)] = true;
    }
    return p;
  }

  /// From disjoint cycles given as lists of 1-based points.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int a = cyc[i];
        if (a < 1 || a > n) throw PreconditionFailed("cycle point " + std::to_string(a) + " out of range");
        if (used[static_cast<std::size_t>(a)]) throw PreconditionFailed("point " + std::to_string(a) + " repeated in cycles");
        used[static_cast<std::size_t>(a)] = true;
        images[static_cast<std::size_t>(a - 1)] = cyc[(i + 1) % cyc.size()];
      }
    }
    return from_images(std::move(images));
  }

  int degree() const noexcept { return static_cast<int>(img_.size()); }

  /// Image of the 1-based point k.
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }

  const std::vector<int>& images() const noexcept { return img_; }

  bool is_identity() const {
    for (int k = 1; k <= degree(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
      throw DegreeMismatch("composing permutations of degree " + std::to_string(p.degree()) + " and " +
                           std::to_string(q.degree()));
    Perm r;
    r.img_.resize(q.img_.size());
    for (std::size_t i = 0; i < q.img_.size(); ++i) r.img_[i] = p.img_[static_cast<std::size_t>(q.img_[i] - 1)];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
  }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
    Perm result(degree());
    while (k) {
      if (k & 1ULL) result = result * base;
      base = base * base;
      k >>= 1ULL;
    }
    return result;
  }

  /// Cycles including fixed points, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size() + 1, false);
    for (int k = 1; k <= degree(); ++k) {
      if (seen[static_cast<std::size_t>(k)]) continue;
      std::vector<int> cyc;
      for (int x = k; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Least common multiple of the cycle lengths.
  long long order() const {
    long long l = 1;
    for (const auto& c : cycles()) l = std::lcm(l, static_cast<long long>(c.size()));
    return l;
  }

  /// (-1)^(n - #cycles).
  int sign() const { return ((degree() - static_cast<int>(cycles().size())) % 2 == 0) ? 1 : -1; }

  /// q * p * q^-1.
  Perm conjugate_by(const Perm& q) const { return q * *this * q.inverse(); }

  /// Cycle notation with fixed points written explicitly, e.g. "(1)(2,3)(4,5)".
  std::string to_cycle_string(bool show_fixed = true, char sep = ',') const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1 && !show_fixed) continue;
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    if (s.empty()) s = "()";
    return s;
  }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& p, const Perm& q) { return p * q; }
inline Perm conjugate(const Perm& p, const Perm& q) { return p.conjugate_by(q); }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

/// Parses cycle notation such as "(1 2 3)(4 5)" or "(1,2)(3)". Fixed points may be omitted.
/// `offset` is added to reported error positions.
inline Perm parse_cycles(int degree, std::string_view text, std::size_t offset = 0) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError(offset + i, "empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError(offset + i, "expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(offset + i, "expected point number or ')'");
      int v = 0;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError(offset + start, "point number too large");
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError(offset + start, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const PreconditionFailed& e) {
    throw ParseError(offset, e.what());
  }
}

/// Largest point mentioned in a cycle string; used to infer degrees.
inline int max_point(std::string_view text) {
  int best = 0, cur = 0;
  bool in_num = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + (c - '0');
      in_num = true;
    } else {
      if (in_num) best = std::max(best, cur);
      cur = 0;
      in_num = false;
    }
  }
  if (in_num) best = std::max(best, cur);
  return best;
}

}  // namespace ggraph
