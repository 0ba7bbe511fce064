#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive (brute force, textbook elimination) so that they share
// no code path with the library.

#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lvrank/genlab.hpp"
#include "lvrank/graph.hpp"
#include "lvrank/model.hpp"
#include "lvrank/reduction.hpp"

namespace lvrank::oracle {

inline InteractionMatrix from_ints(
    const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return InteractionMatrix(std::move(m));
}

/// The seven-species example: a predator-prey chain 3-2-1-7-4-5-6 with
/// self-limitation only at species 7.
inline InteractionMatrix seven_species() {
  return from_ints({{0, 1, 0, 0, 0, 0, 1},
                    {-2, 0, 1, 0, 0, 0, 0},
                    {0, -1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, -1},
                    {0, 0, 0, -2, 0, 1, 0},
                    {0, 0, 0, 0, -1, 0, 0},
                    {-1, 0, 0, 1, 0, 0, -1}});
}

inline InteractionMatrix food_chain() {
  return from_ints({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
}

inline RatVector ints(const std::vector<long>& v) {
  RatVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (std::size_t x : v) out.push_back(x - 1);
  return out;
}

// --- linear algebra -------------------------------------------------------

/// Textbook Gaussian elimination with rational pivots; returns the rank and
/// leaves the determinant (of square input) in *det.
inline std::size_t gauss_rank(RatMatrix m, Rational* det = nullptr) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      d = -d;
    }
    d *= m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  if (det) *det = r == rows && rows == cols ? d : Rational(0);
  return r;
}

inline Rational determinant(const RatMatrix& m) {
  Rational d;
  gauss_rank(m, &d);
  return d;
}

/// Positive semidefinite iff every principal minor is >= 0.
inline bool psd_by_minors(const RatMatrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    RatMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = s(idx[a], idx[b]);
    if (determinant(sub) < 0) return false;
  }
  return true;
}

/// Positive definite iff every leading principal minor is > 0.
inline bool pd_by_sylvester(const RatMatrix& s) {
  for (std::size_t k = 1; k <= s.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = s(a, b);
    if (determinant(sub) <= 0) return false;
  }
  return true;
}

// --- graphs ---------------------------------------------------------------

/// Enumerates every simple cycle (length >= 3) by DFS from its smallest
/// vertex and reports whether each one contains a strong link.
inline bool every_cycle_has_strong_link(const ColoredGraph& g) {
  const std::size_t n = g.size();
  bool ok = true;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                          std::size_t v) {
    for (std::size_t w : g.neighbours(v)) {
      if (!ok) return;
      if (w == start && path.size() >= 3) {
        bool strong = false;
        for (std::size_t k = 0; k < path.size(); ++k) {
          const std::size_t a = path[k];
          const std::size_t b = path[(k + 1) % path.size()];
          strong = strong || (g.is_black(a) && g.is_black(b));
        }
        if (!strong) ok = false;
        continue;
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t s = 0; s < n && ok; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(s, s);
  }
  return ok;
}

/// Uniformly random colored graph with edge probability p.
inline ColoredGraph random_graph(std::mt19937_64& rng, std::size_t n,
                                 double p, double black) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution colour(black);
  std::vector<Color> colors(n);
  for (auto& c : colors) c = colour(rng) ? Color::kBlack : Color::kWhite;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return ColoredGraph(std::move(colors), edges);
}

// --- reduction ------------------------------------------------------------

/// Every single-mark upgrade allowed by the rules, written directly from
/// their statements.
inline std::vector<std::vector<Mark>> successors(const ColoredGraph& g,
                                                 const std::vector<Mark>& m,
                                                 bool simplified) {
  std::vector<std::vector<Mark>> out;
  auto upgrade = [&](std::size_t v, Mark to) {
    if (static_cast<int>(m[v]) >= static_cast<int>(to)) return;
    auto next = m;
    next[v] = to;
    out.push_back(std::move(next));
  };
  for (std::size_t j = 0; j < g.size(); ++j) {
    std::vector<std::size_t> not_bullet;
    std::vector<std::size_t> circ;
    for (std::size_t l : g.neighbours(j)) {
      if (m[l] != Mark::kBullet) not_bullet.push_back(l);
      if (m[l] == Mark::kCirc) circ.push_back(l);
    }
    if (simplified) {
      if (not_bullet.size() == 1) upgrade(not_bullet[0], Mark::kBullet);
      continue;
    }
    if (m[j] != Mark::kCirc) {
      if (not_bullet.size() == 1) upgrade(not_bullet[0], Mark::kBullet);
      if (circ.size() == 1) upgrade(circ[0], Mark::kCross);
    } else if (circ.empty()) {
      upgrade(j, Mark::kCross);
    }
  }
  return out;
}

/// All terminal mark vectors reachable from the initial marking under any
/// rule order (exhaustive search with memoization).
inline std::set<std::vector<Mark>> all_fixpoints(const ColoredGraph& g,
                                                 bool simplified) {
  std::vector<Mark> start(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    start[v] = g.is_black(v) ? Mark::kBullet : Mark::kCirc;
  std::set<std::vector<Mark>> seen{start};
  std::set<std::vector<Mark>> terminal;
  std::vector<std::vector<Mark>> stack{start};
  while (!stack.empty()) {
    auto m = stack.back();
    stack.pop_back();
    auto next = successors(g, m, simplified);
    if (next.empty()) terminal.insert(m);
    for (auto& s : next)
      if (seen.insert(s).second) stack.push_back(std::move(s));
  }
  return terminal;
}

// --- scalar root finding ---------------------------------------------------

inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi) {
  double flo = f(lo);
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// --- fixtures ---------------------------------------------------------------

inline GenConfig config(std::uint64_t seed, std::size_t n) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.black_fraction = 0.2 + 0.6 * static_cast<double>(seed % 5) / 4.0;
  cfg.extra_edge_prob = 0.15 + 0.1 * static_cast<double>(seed % 4);
  cfg.strong_cycle_prob = 0.5;
  cfg.rescale_exponent = static_cast<int>(seed % 3);
  return cfg;
}

}  // namespace lvrank::oracle
