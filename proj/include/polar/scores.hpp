#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polar/graph.hpp"
#include "polar/partition.hpp"
#include "polar/rng.hpp"

namespace polar {

enum class ScoreId { RWC, ARWC, BCC, BP, DP, Q, EI, AEI };

inline constexpr std::array<ScoreId, 8> kAllScores = {ScoreId::RWC, ScoreId::ARWC, ScoreId::BCC,
                                                      ScoreId::BP,  ScoreId::DP,   ScoreId::Q,
                                                      ScoreId::EI,  ScoreId::AEI};

std::string_view to_string(ScoreId id);
ScoreId parse_score_id(std::string_view name);

/// Closed interval a score value must lie in.
struct Domain {
  double lo;
  double hi;
  bool contains(double v) const { return v >= lo && v <= hi; }
};
Domain score_domain(ScoreId id);

/// Score value with the parameters that produced it. `flags` mark defined
/// degenerate outcomes (e.g. "empty_cut"); `error` is set when the score could
/// not be computed, in which case `value` is NaN.
struct ScoreResult {
  ScoreId id = ScoreId::RWC;
  double value = 0.0;
  std::map<std::string, double> params;
  std::vector<std::string> flags;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
  bool has_flag(std::string_view flag) const;
};

struct AbsorptionProbabilities {
  double p_aa = 0.0;
  double p_ab = 0.0;
  double p_ba = 0.0;
  double p_bb = 0.0;
};

struct ScoreConfig {
  int rwc_k = 10;            // influencers per side for RWC
  double arwc_fraction = 0.01;
  double dp_fraction = 0.01;
  double dp_tolerance = 1e-6;
  std::size_t dp_max_iter = 0;  // 0 means 10 * n
  std::vector<ScoreId> scores{kAllScores.begin(), kAllScores.end()};
};

// -- edge betweenness ------------------------------------------------------

/// Exact edge betweenness, summed over unordered node pairs; indexed by EdgeId.
/// Parallel over sources with a fixed chunking, so the result does not depend
/// on the thread count.
std::vector<double> edge_betweenness(const Graph& g);
/// Single-threaded reference with the same summation order.
std::vector<double> edge_betweenness_serial(const Graph& g);

// -- random-walk scores ----------------------------------------------------

/// The `count` highest-degree nodes of block `b`, ties by smallest id.
std::vector<NodeId> top_degree_nodes(const Graph& g, const Partition& p, Block b,
                                     std::size_t count);

/// Exact absorbing-chain probabilities: walks start uniformly on a side and
/// stop at the first influencer reached.
AbsorptionProbabilities absorption_probabilities(const Graph& g, const Partition& p,
                                                 std::span<const NodeId> influencers_a,
                                                 std::span<const NodeId> influencers_b);

/// Per-side influencer count for fraction-based scores: max(1, round(K*n_side)).
std::size_t influencer_count(double fraction, std::size_t block_size);

ScoreResult rwc(const Graph& g, const Partition& p, int k = 10);
ScoreResult arwc(const Graph& g, const Partition& p, double fraction = 0.01);

/// Monte-Carlo estimate of RWC with `walks` simulated walks.
double rwc_monte_carlo(const Graph& g, const Partition& p, int k, std::size_t walks, Rng& rng);

// -- remaining scores ------------------------------------------------------

ScoreResult bcc(const Graph& g, const Partition& p);
/// BCC from precomputed edge betweenness.
ScoreResult bcc_from_centrality(const Graph& g, const Partition& p,
                                std::span<const double> centrality);

/// Kullback-Leibler divergence of two Gaussian-kernel density estimates
/// (Scott bandwidth) on a shared 512-point grid.
double kde_kl_divergence(std::span<const double> p_sample, std::span<const double> q_sample);

ScoreResult bp(const Graph& g, const Partition& p);

struct DipoleOpinions {
  std::vector<double> opinion;
  std::size_t iterations = 0;
  double last_change = 0.0;
};

/// Label propagation with fixed +1 / -1 influencers (top fraction by degree
/// per side). Throws if `max_iter` sweeps do not reach `tolerance`.
DipoleOpinions dipole_opinions(const Graph& g, const Partition& p, double fraction,
                               double tolerance, std::size_t max_iter);

ScoreResult dp(const Graph& g, const Partition& p, double fraction = 0.01, double tolerance = 1e-6,
               std::size_t max_iter = 0);

ScoreResult modularity(const Graph& g, const Partition& p);
ScoreResult ei_index(const Graph& g, const Partition& p);
ScoreResult aei_index(const Graph& g, const Partition& p);

/// Runs every score in `config.scores` against one partition. A failing score
/// is reported through its `error` field and does not stop the others.
std::vector<ScoreResult> score_all(const Graph& g, const Partition& p,
                                   const ScoreConfig& config = {});

/// Single score dispatch with `config` parameters.
ScoreResult compute_score(ScoreId id, const Graph& g, const Partition& p,
                          const ScoreConfig& config = {});

}  // namespace polar
