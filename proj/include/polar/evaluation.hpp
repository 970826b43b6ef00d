#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polar {

struct LabeledScore {
  std::string network_id;
  double value = 0.0;
  bool polarized = false;
  std::map<std::string, double> covariates;  // "n", "mean_degree"
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // (0,0) ... (1,1), non-decreasing
  double auc = 0.0;
  double gini = 0.0;
};

/// Threshold sweep, higher value predicts polarized. Tied values form one
/// step, so the area equals the pairwise estimator with ties counted 1/2.
RocCurve roc(std::span<const double> values, std::span<const bool> polarized);
RocCurve roc(std::span<const LabeledScore> scores);

struct AucWindow {
  std::size_t begin = 0;  // position in covariate order
  std::size_t end = 0;
  double covariate_min = 0.0;
  double covariate_max = 0.0;
  std::optional<double> auc;  // empty when the window holds one class
};

/// AUC over every run of `window` consecutive networks in covariate order.
std::vector<AucWindow> windowed_auc(std::span<const LabeledScore> scores, const std::string& covariate,
                                    std::size_t window = 100);

struct CombinedScore {
  std::vector<double> values;        // one per network
  std::vector<std::string> used;     // score columns averaged
  std::vector<std::string> dropped;  // constant columns left out
};

/// Min-max rescales each score column over the corpus to [0, 1] and averages
/// them per network.
CombinedScore mean_combine(const std::vector<std::map<std::string, double>>& corpus);

/// Labeled corpus CSV: network_id,label,<columns...>. Columns "n" and
/// "mean_degree" are covariates; every other column is a score.
struct LabeledCorpus {
  std::vector<std::string> network_ids;
  std::vector<bool> polarized;
  std::vector<std::string> score_names;  // file order
  std::map<std::string, std::vector<double>> scores;
  std::map<std::string, std::vector<double>> covariates;

  std::size_t size() const { return network_ids.size(); }
  std::vector<LabeledScore> column(const std::string& score) const;
};

LabeledCorpus read_labeled_corpus(std::istream& in);
bool parse_label(const std::string& text);

void write_roc_csv(std::ostream& out, const RocCurve& curve);

}  // namespace polar
