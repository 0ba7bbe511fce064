#pragma once

#include <cstdint>

#include "lvrank/graph.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

struct GenConfig {
  std::size_t n = 6;
  double black_fraction = 0.5;
  double extra_edge_prob = 0.3;
  double strong_cycle_prob = 0.5;
  int magnitude_bound = 5;  // numerators and denominators in [1, bound]
  std::uint64_t seed = 0;
  // When positive, sample_matrix finishes with A -> diag(c)^-1 A,
  // c_i = 2^k_i, k_i uniform in [-rescale_exponent, rescale_exponent].
  int rescale_exponent = 0;

  /// Throws Error(kInvalidArgument) when a field is out of range.
  void validate() const;
};

/// Random graph whose weak subgraph is a forest. A random spanning forest
/// is laid down first, then candidate extra edges are tried: links between
/// Black vertices, and weak edges joining two distinct weak trees. An extra
/// edge that closes a cycle is kept only with probability strong_cycle_prob.
ColoredGraph random_sd_graph(const GenConfig& cfg);

/// A random matrix with graph g that is certified with c = 1 (before the
/// optional rescaling): skew-symmetric weak pairs, arbitrary strong-link
/// pairs, and a strictly dominant negative Black diagonal with enough slack
/// to survive a 10% perturbation. Throws Error(kNotStablyDissipative).
InteractionMatrix sample_matrix(const ColoredGraph& g, const GenConfig& cfg);

/// Multiplies each nonzero entry by 1 + delta, delta drawn uniformly from
/// the grid epsilon * {-1000, ..., 1000} / 1000; zeros stay zero and a
/// factor of exactly zero is redrawn. Throws Error(kInvalidArgument) unless
/// epsilon > 0.
InteractionMatrix perturb(const InteractionMatrix& a, const Rational& epsilon,
                          std::uint64_t seed);

}  // namespace lvrank
