#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/graph.hpp"
#include "polar/partition.hpp"
#include "polar/scores.hpp"

namespace polar {

/// Score values over randomized copies of one network.
struct NullEnsemble {
  ScoreId id = ScoreId::RWC;
  std::vector<double> samples;  // successful samples, in sample order
  std::size_t requested = 0;
  std::size_t failed = 0;
  double mean = 0.0;
  double second_moment = 0.0;
  double stddev = 0.0;
  double std_error = 0.0;
  std::optional<std::string> error;  // set when too many samples failed

  std::size_t n_samples() const { return samples.size(); }
  bool ok() const { return !error.has_value(); }
  /// Empirical quantile with linear interpolation, q in [0, 1].
  double quantile(double q) const;
};

/// Moments of a sample list; order-independent up to 1e-12.
NullEnsemble summarize(ScoreId id, std::vector<double> samples, std::size_t requested = 0);

struct NullModelOptions {
  int dk = 1;
  std::size_t n_samples = 500;
  Partitioner partitioner = Partitioner::MinCut;
  PartitionConfig partition;
  ScoreConfig scores;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: OpenMP default
  double max_failure_fraction = 0.1;
};

/// Ensembles for every score in options.scores. Each sample randomizes g,
/// keeps the giant component, repartitions with the same partitioner and
/// scores it. Sample i draws from stream i + 1 of options.seed, so results do
/// not depend on the worker count.
std::vector<NullEnsemble> null_ensembles(const Graph& g, const NullModelOptions& options);
/// Same computation on a single thread.
std::vector<NullEnsemble> null_ensembles_serial(const Graph& g, const NullModelOptions& options);

/// One-score convenience wrapper; throws when the ensemble failed.
NullEnsemble null_ensemble(const Graph& g, ScoreId id, const NullModelOptions& options);

struct NormalizedScore {
  ScoreId id = ScoreId::RWC;
  double raw = 0.0;
  double denoised = 0.0;
  std::optional<double> standardized;
  double null_mean = 0.0;
  double null_std = 0.0;
  double null_std_error = 0.0;
  std::size_t n_samples = 0;
  std::vector<std::string> flags;
};

NormalizedScore denoise(double raw, const NullEnsemble& ensemble);
NormalizedScore denoise(const Graph& g, const Partition& p, const NullEnsemble& ensemble,
                        const ScoreConfig& config = {});

struct NormalizationReport {
  Partition partition;
  std::vector<ScoreResult> raw;
  std::vector<NullEnsemble> ensembles;
  std::vector<std::optional<NormalizedScore>> normalized;  // empty where raw or null failed
};

/// Partition (stream 0 of options.seed), score, build ensembles, denoise.
NormalizationReport normalize_scores(const Graph& g, const NullModelOptions& options);

}  // namespace polar
