#include "lvrank/genlab.hpp"

#include <random>

#include "lvrank/error.hpp"

namespace lvrank {

namespace {

// Chance that a new vertex hangs off an earlier one rather than starting a
// new tree of the spanning forest.
constexpr double kAttachProb = 0.9;

// Separate streams for graphs, matrices and perturbations drawn from the
// same seed.
enum Stream : std::uint64_t { kGraph = 1, kMatrix = 2, kPerturb = 3 };

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational random_magnitude(std::mt19937_64& rng, int bound) {
  Rational r(uniform_int(rng, 1, bound), uniform_int(rng, 1, bound));
  r.canonicalize();
  return r;
}

Rational random_nonzero(std::mt19937_64& rng, int bound) {
  Rational r = random_magnitude(rng, bound);
  return coin(rng, 0.5) ? r : Rational(-r);
}

}  // namespace

void GenConfig::validate() const {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (n < 1)
    throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (!prob(black_fraction) || !prob(extra_edge_prob) ||
      !prob(strong_cycle_prob))
    throw Error(ErrorCode::kInvalidArgument,
                "probabilities must lie in [0, 1]");
  if (magnitude_bound < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "magnitude_bound must be a positive integer");
  if (rescale_exponent < 0 || rescale_exponent > 30)
    throw Error(ErrorCode::kInvalidArgument,
                "rescale_exponent must lie in [0, 30]");
}

ColoredGraph random_sd_graph(const GenConfig& cfg) {
  cfg.validate();
  auto rng = make_rng(cfg.seed, kGraph);
  const std::size_t n = cfg.n;
  std::vector<Color> colors(n);
  for (auto& c : colors)
    c = coin(rng, cfg.black_fraction) ? Color::kBlack : Color::kWhite;

  std::vector<Edge> edges;
  DisjointSets weak(n);  // trees of the weak subgraph
  DisjointSets full(n);  // components of the whole graph
  for (std::size_t v = 1; v < n; ++v) {
    if (!coin(rng, kAttachProb)) continue;
    const auto u = static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<int>(v) - 1));
    edges.emplace_back(u, v);
    full.unite(u, v);
    if (colors[u] != Color::kBlack || colors[v] != Color::kBlack)
      weak.unite(u, v);
  }
  ColoredGraph forest(colors, edges);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (forest.has_edge(u, v) || !coin(rng, cfg.extra_edge_prob)) continue;
      const bool strong =
          colors[u] == Color::kBlack && colors[v] == Color::kBlack;
      if (!strong && weak.find(u) == weak.find(v)) continue;
      if (full.find(u) == full.find(v) && !coin(rng, cfg.strong_cycle_prob))
        continue;
      edges.emplace_back(u, v);
      full.unite(u, v);
      if (!strong) weak.unite(u, v);
    }
  return ColoredGraph(std::move(colors), edges);
}

InteractionMatrix sample_matrix(const ColoredGraph& g, const GenConfig& cfg) {
  cfg.validate();
  if (!is_stably_dissipative_graph(g))
    throw Error(ErrorCode::kNotStablyDissipative,
                "graph has a cycle without a strong link");
  auto rng = make_rng(cfg.seed, kMatrix);
  const std::size_t n = g.size();
  const int bound = cfg.magnitude_bound;
  RatMatrix a(n, n);
  for (const Edge& e : g.edges()) {
    if (g.kind(e) == EdgeKind::kWeak) {
      const Rational x = random_nonzero(rng, bound);
      a(e.u, e.v) = x;
      a(e.v, e.u) = -x;
      continue;
    }
    // Strong link: either entry may vanish, but not both.
    const int zero = uniform_int(rng, 0, 3);  // 0: a_uv = 0, 1: a_vu = 0
    a(e.u, e.v) = zero == 0 ? Rational(0) : random_nonzero(rng, bound);
    a(e.v, e.u) = zero == 1 ? Rational(0) : random_nonzero(rng, bound);
  }
  // |d_i| = 3/2 * (off-diagonal row sum of |sym|) + slack, so the Black
  // block stays strictly dominant after 10% relative perturbations.
  for (std::size_t i : g.black_vertices()) {
    Rational off = 0;
    for (std::size_t j : g.neighbours(i))
      if (g.is_black(j)) off += abs(Rational(a(i, j) + a(j, i))) / 2;
    a(i, i) = -(Rational(3, 2) * off + random_magnitude(rng, bound));
  }
  if (cfg.rescale_exponent > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      const int k = uniform_int(rng, -cfg.rescale_exponent,
                                cfg.rescale_exponent);
      mpz_class p = 1;
      p <<= static_cast<unsigned long>(k < 0 ? -k : k);
      for (std::size_t j = 0; j < n; ++j) {
        if (k >= 0)
          a(i, j) /= p;
        else
          a(i, j) *= p;
      }
    }
  }
  return InteractionMatrix(std::move(a));
}

InteractionMatrix perturb(const InteractionMatrix& a, const Rational& epsilon,
                          std::uint64_t seed) {
  if (epsilon <= 0)
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  auto rng = make_rng(seed, kPerturb);
  RatMatrix out = a.entries();
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (out(i, j) == 0) continue;
      Rational factor;
      do {
        factor = 1 + epsilon * Rational(uniform_int(rng, -1000, 1000)) / 1000;
      } while (factor == 0);
      out(i, j) *= factor;
    }
  return InteractionMatrix(std::move(out));
}

}  // namespace lvrank
