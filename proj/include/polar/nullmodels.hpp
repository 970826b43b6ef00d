#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polar/graph.hpp"
#include "polar/rng.hpp"

namespace polar {

/// G(n, m): uniform simple graph with exactly m edges (d = 0).
Graph gen_er(std::size_t n, std::size_t m, Rng& rng);

/// Degree-preserving double-edge-swap chain (d = 1). Performs
/// `swaps_per_edge * |E|` attempted swaps; rejected swaps leave the graph as is.
Graph sample_configuration(const Graph& g, Rng& rng, double swaps_per_edge = 20.0);

/// Joint-degree-preserving swap chain (d = 2): only endpoints of equal degree
/// are exchanged.
Graph sample_dk2(const Graph& g, Rng& rng, double swaps_per_edge = 20.0);

/// Randomization of `g` at the given dk level (0, 1 or 2).
Graph randomize(const Graph& g, int d, Rng& rng);

/// Discrete power law P(k) ~ k^-gamma on [k_min, k_max], mixed with the law
/// starting at k_min + 1 so that the mean hits a target exactly.
struct PowerLawMixture {
  int k_min = 1;
  int k_max = 1;
  double gamma = 2.5;
  double weight = 1.0;  // mass on the law starting at k_min

  double mean() const;
  std::vector<double> pmf() const;  // indexed by k - k_min
};

PowerLawMixture fit_power_law_mean(std::size_t n, double gamma, double target_mean);

/// I.i.d. degrees from the fitted mixture with an even sum.
std::vector<int> sample_power_law_degrees(std::size_t n, double gamma, double target_mean, Rng& rng);

/// Erased stub matching: loops and repeated pairs are dropped.
Graph erased_configuration_model(const std::vector<int>& degrees, Rng& rng);

/// Power-law random graph, giant component only.
Graph gen_powerlaw(std::size_t n, double gamma, double target_mean_degree, Rng& rng);

enum class SbmScheme { Low, Medium, High };

std::string to_string(SbmScheme s);
SbmScheme parse_sbm_scheme(const std::string& name);

struct SbmGraph {
  Graph graph;
  std::vector<std::uint8_t> block;  // 0 = smaller group, 1 = larger group
  std::size_t n_small = 0;
  std::size_t n_large = 0;
  double expected_cross_edges = 0.0;
};

/// Expected between-group edge total for a scheme.
double sbm_expected_cross_edges(std::size_t n_small, std::size_t n_large, double k_in, double c,
                                SbmScheme scheme);

/// Two-group stochastic block model. Within each group edges are independent
/// with expected within-degree k_in; the between-group expected total follows
/// the scheme with k_out = k_in / c.
SbmGraph gen_sbm(std::size_t n, double frac_small, double k_in, double c, SbmScheme scheme, Rng& rng);

/// Giant component of an SBM draw with the planted groups carried along.
SbmGraph giant_component(const SbmGraph& sbm);

}  // namespace polar
