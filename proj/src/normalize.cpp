#include "polar/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>

#include "polar/error.hpp"
#include "polar/nullmodels.hpp"

namespace polar {
namespace {

/// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct SampleOutcome {
  std::vector<double> values;  // per requested score, NaN on failure
  std::vector<std::string> errors;
};

SampleOutcome run_sample(const Graph& g, const NullModelOptions& o, std::size_t index) {
  const std::size_t k = o.scores.scores.size();
  SampleOutcome out{std::vector<double>(k, std::nan("")), std::vector<std::string>(k)};
  try {
    Rng rng = make_rng(o.seed, index + 1);
    const Graph sample = preprocess(randomize(g, o.dk, rng));
    const Partition p = partition_graph(sample, o.partitioner, o.partition, rng);
    const auto results = score_all(sample, p, o.scores);
    for (std::size_t s = 0; s < k; ++s) {
      if (results[s].ok()) out.values[s] = results[s].value;
      else out.errors[s] = *results[s].error;
    }
  } catch (const std::exception& e) {
    std::fill(out.errors.begin(), out.errors.end(), std::string(e.what()));
  }
  return out;
}

std::vector<NullEnsemble> aggregate(const NullModelOptions& o, const std::vector<SampleOutcome>& runs) {
  std::vector<NullEnsemble> out;
  for (std::size_t s = 0; s < o.scores.scores.size(); ++s) {
    std::vector<double> values;
    std::size_t failed = 0;
    std::string first_error;
    for (const auto& r : runs) {
      if (r.errors[s].empty()) {
        values.push_back(r.values[s]);
      } else {
        if (failed++ == 0) first_error = r.errors[s];
      }
    }
    NullEnsemble e = summarize(o.scores.scores[s], std::move(values), runs.size());
    e.failed = failed;
    if (static_cast<double>(failed) > o.max_failure_fraction * static_cast<double>(runs.size()) ||
        e.samples.empty()) {
      e.error = std::to_string(failed) + " of " + std::to_string(runs.size()) +
                " null samples failed: " + first_error;
    }
    out.push_back(std::move(e));
  }
  return out;
}

void check_options(const NullModelOptions& o) {
  if (o.n_samples < 2) throw Error("null ensemble needs at least 2 samples");
  if (o.dk < 0 || o.dk > 2) throw Error("dk level must be 0, 1 or 2");
}

}  // namespace

double NullEnsemble::quantile(double q) const {
  if (samples.empty()) throw Error("quantile of an empty ensemble");
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(s.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, s.size() - 1);
  return s[lo] + (pos - static_cast<double>(lo)) * (s[hi] - s[lo]);
}

NullEnsemble summarize(ScoreId id, std::vector<double> samples, std::size_t requested) {
  NullEnsemble e;
  e.id = id;
  e.requested = requested ? requested : samples.size();
  e.samples = std::move(samples);
  if (e.samples.empty()) return e;
  const auto n = static_cast<double>(e.samples.size());
  CompensatedSum sum, sum_sq;
  for (double x : e.samples) {
    sum.add(x);
    sum_sq.add(x * x);
  }
  const auto [lo, hi] = std::minmax_element(e.samples.begin(), e.samples.end());
  e.mean = std::clamp(sum.value() / n, *lo, *hi);
  e.second_moment = sum_sq.value() / n;
  if (*lo == *hi) {
    e.stddev = 0.0;
  } else {
    CompensatedSum dev;
    for (double x : e.samples) dev.add((x - e.mean) * (x - e.mean));
    e.stddev = std::sqrt(dev.value() / n);
  }
  e.std_error = e.stddev / std::sqrt(n);
  return e;
}

std::vector<NullEnsemble> null_ensembles_serial(const Graph& g, const NullModelOptions& options) {
  check_options(options);
  std::vector<SampleOutcome> runs(options.n_samples);
  for (std::size_t i = 0; i < options.n_samples; ++i) runs[i] = run_sample(g, options, i);
  return aggregate(options, runs);
}

std::vector<NullEnsemble> null_ensembles(const Graph& g, const NullModelOptions& options) {
  check_options(options);
  std::vector<SampleOutcome> runs(options.n_samples);
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(options.n_samples);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    runs[i] = run_sample(g, options, static_cast<std::size_t>(i));
  }
  return aggregate(options, runs);
}

NullEnsemble null_ensemble(const Graph& g, ScoreId id, const NullModelOptions& options) {
  NullModelOptions o = options;
  o.scores.scores = {id};
  auto e = null_ensembles(g, o).front();
  if (!e.ok()) throw Error(*e.error);
  return e;
}

NormalizedScore denoise(double raw, const NullEnsemble& ensemble) {
  if (!ensemble.ok()) throw Error("null ensemble failed: " + *ensemble.error);
  NormalizedScore s;
  s.id = ensemble.id;
  s.raw = raw;
  s.denoised = raw - ensemble.mean;
  s.null_mean = ensemble.mean;
  s.null_std = ensemble.stddev;
  s.null_std_error = ensemble.std_error;
  s.n_samples = ensemble.n_samples();
  if (ensemble.stddev > 0) s.standardized = s.denoised / ensemble.stddev;
  else s.flags.push_back("zero_variance_null");
  return s;
}

NormalizedScore denoise(const Graph& g, const Partition& p, const NullEnsemble& ensemble,
                        const ScoreConfig& config) {
  const auto r = compute_score(ensemble.id, g, p, config);
  return denoise(r.value, ensemble);
}

NormalizationReport normalize_scores(const Graph& g, const NullModelOptions& options) {
  NormalizationReport report;
  Rng rng = make_rng(options.seed, 0);
  report.partition = partition_graph(g, options.partitioner, options.partition, rng);
  report.raw = score_all(g, report.partition, options.scores);
  report.ensembles = null_ensembles(g, options);
  for (std::size_t s = 0; s < report.raw.size(); ++s) {
    if (report.raw[s].ok() && report.ensembles[s].ok()) {
      report.normalized.emplace_back(denoise(report.raw[s].value, report.ensembles[s]));
    } else {
      report.normalized.emplace_back(std::nullopt);
    }
  }
  return report;
}

}  // namespace polar
