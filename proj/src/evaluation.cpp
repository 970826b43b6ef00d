#include "polar/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>

#include "polar/error.hpp"

namespace polar {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

RocCurve roc(std::span<const double> values, std::span<const bool> polarized) {
  if (values.size() != polarized.size()) throw Error("values and labels differ in length");
  const auto positives = static_cast<double>(std::count(polarized.begin(), polarized.end(), true));
  const auto negatives = static_cast<double>(polarized.size()) - positives;
  if (positives == 0 || negatives == 0) throw Error("ROC needs both polarized and non-polarized networks");
  for (double v : values) {
    if (std::isnan(v)) throw Error("ROC input contains NaN");
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  double tp = 0, fp = 0, area = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = values[order[i]];
    const double tp0 = tp, fp0 = fp;
    for (; i < order.size() && values[order[i]] == threshold; ++i) {
      if (polarized[order[i]]) ++tp; else ++fp;
    }
    area += (fp - fp0) * (tp + tp0) / 2.0;
    curve.points.push_back({fp / negatives, tp / positives});
  }
  curve.auc = area / (positives * negatives);
  curve.gini = 2.0 * curve.auc - 1.0;
  return curve;
}

RocCurve roc(std::span<const LabeledScore> scores) {
  std::vector<double> values;
  std::unique_ptr<bool[]> labels(new bool[scores.size()]);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    values.push_back(scores[i].value);
    labels[i] = scores[i].polarized;
  }
  return roc(values, std::span<const bool>(labels.get(), scores.size()));
}

std::vector<AucWindow> windowed_auc(std::span<const LabeledScore> scores, const std::string& covariate,
                                    std::size_t window) {
  if (window == 0) throw Error("window must be positive");
  if (scores.size() < window) {
    throw Error("corpus of " + std::to_string(scores.size()) + " networks is smaller than window " +
                std::to_string(window));
  }
  std::vector<double> cov(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    auto it = scores[i].covariates.find(covariate);
    if (it == scores[i].covariates.end()) throw Error("network lacks covariate '" + covariate + "'");
    cov[i] = it->second;
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cov[a] < cov[b]; });

  std::vector<AucWindow> out;
  for (std::size_t begin = 0; begin + window <= scores.size(); ++begin) {
    AucWindow w;
    w.begin = begin;
    w.end = begin + window;
    w.covariate_min = cov[order[begin]];
    w.covariate_max = cov[order[begin + window - 1]];
    std::vector<double> values;
    std::unique_ptr<bool[]> labels(new bool[window]);
    std::size_t positives = 0;
    for (std::size_t i = 0; i < window; ++i) {
      const auto& s = scores[order[begin + i]];
      values.push_back(s.value);
      labels[i] = s.polarized;
      positives += s.polarized;
    }
    if (positives > 0 && positives < window) {
      w.auc = roc(values, std::span<const bool>(labels.get(), window)).auc;
    }
    out.push_back(w);
  }
  return out;
}

CombinedScore mean_combine(const std::vector<std::map<std::string, double>>& corpus) {
  if (corpus.empty()) throw Error("empty corpus");
  std::vector<std::string> names;
  for (const auto& [name, value] : corpus.front()) names.push_back(name);
  for (const auto& row : corpus) {
    if (row.size() < 2) throw Error("score combination needs at least 2 scores per network");
    if (row.size() != names.size() ||
        !std::equal(names.begin(), names.end(), row.begin(), [](const auto& n, const auto& kv) { return n == kv.first; })) {
      throw Error("networks carry different score sets");
    }
  }
  CombinedScore out;
  out.values.assign(corpus.size(), 0.0);
  std::vector<std::pair<double, double>> ranges;
  for (const auto& name : names) {
    double lo = corpus.front().at(name), hi = lo;
    for (const auto& row : corpus) {
      lo = std::min(lo, row.at(name));
      hi = std::max(hi, row.at(name));
    }
    if (hi > lo) {
      out.used.push_back(name);
      ranges.emplace_back(lo, hi);
    } else {
      out.dropped.push_back(name);
    }
  }
  if (out.used.empty()) throw Error("every score column is constant");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < out.used.size(); ++c) {
      const auto [lo, hi] = ranges[c];
      sum += (corpus[i].at(out.used[c]) - lo) / (hi - lo);
    }
    out.values[i] = sum / static_cast<double>(out.used.size());
  }
  return out;
}

bool parse_label(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "polarized" || t == "1" || t == "true" || t == "yes") return true;
  if (t == "non_polarized" || t == "non-polarized" || t == "nonpolarized" || t == "0" || t == "false" || t == "no") {
    return false;
  }
  throw Error("unrecognized label '" + text + "'");
}

std::vector<LabeledScore> LabeledCorpus::column(const std::string& score) const {
  auto it = scores.find(score);
  if (it == scores.end()) throw Error("corpus has no score column '" + score + "'");
  std::vector<LabeledScore> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i].network_id = network_ids[i];
    out[i].value = it->second[i];
    out[i].polarized = polarized[i];
    for (const auto& [name, values] : covariates) out[i].covariates[name] = values[i];
  }
  return out;
}

LabeledCorpus read_labeled_corpus(std::istream& in) {
  LabeledCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = split_csv_line(line);
    break;
  }
  if (header.size() < 3 || header[0] != "network_id" || header[1] != "label") {
    throw ParseError(line_no, "header must start with network_id,label and name at least one score");
  }
  for (std::size_t c = 2; c < header.size(); ++c) {
    if (header[c] == "n" || header[c] == "mean_degree") corpus.covariates[header[c]];
    else {
      corpus.score_names.push_back(header[c]);
      corpus.scores[header[c]];
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    corpus.network_ids.push_back(fields[0]);
    try {
      corpus.polarized.push_back(parse_label(fields[1]));
      for (std::size_t c = 2; c < header.size(); ++c) {
        const double v = std::stod(fields[c]);
        if (header[c] == "n" || header[c] == "mean_degree") corpus.covariates[header[c]].push_back(v);
        else corpus.scores[header[c]].push_back(v);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return corpus;
}

void write_roc_csv(std::ostream& out, const RocCurve& curve) {
  out << "fpr,tpr\n";
  for (const auto& p : curve.points) out << p.fpr << ',' << p.tpr << '\n';
}

}  // namespace polar
