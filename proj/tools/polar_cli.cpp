// polar: command-line front end for scoring, normalization, sweeps,
// evaluation and graph generation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polar/error.hpp"
#include "polar/evaluation.hpp"
#include "polar/graph.hpp"
#include "polar/normalize.hpp"
#include "polar/nullmodels.hpp"
#include "polar/partition.hpp"
#include "polar/rng.hpp"
#include "polar/scores.hpp"

using nlohmann::ordered_json;
using namespace polar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitFatal = 2;

struct CommonOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string partitioner = "mincut";
  std::string scores = "all";
  int k = 10;
  double K = 0.01;
  std::optional<double> dp_K;
  double tol = 1e-6;
  double balance = 0.1;
  std::optional<double> tau;
  std::uint64_t seed = 0;
  std::string partition_out;
};

struct NullOptions {
  std::string null = "d1";
  std::size_t samples = 500;
  int workers = 0;
};

// A JSON number that stays valid for NaN and infinities.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::vector<ScoreId> parse_score_list(const std::string& text) {
  if (text == "all") return {kAllScores.begin(), kAllScores.end()};
  std::vector<ScoreId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_score_id(item));
  }
  if (out.empty()) throw Error("no scores selected");
  return out;
}

ScoreConfig score_config(const CommonOptions& o) {
  ScoreConfig c;
  c.rwc_k = o.k;
  c.arwc_fraction = o.K;
  c.dp_fraction = o.dp_K.value_or(o.K);
  c.dp_tolerance = o.tol;
  c.scores = parse_score_list(o.scores);
  return c;
}

PartitionConfig partition_config(const CommonOptions& o) {
  PartitionConfig c;
  c.balance_tolerance = o.balance;
  c.tau = o.tau;
  return c;
}

int parse_null(const std::string& name) {
  if (name == "d0") return 0;
  if (name == "d1") return 1;
  if (name == "d2") return 2;
  throw Error("unknown null model '" + name + "' (expected d0, d1 or d2)");
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return preprocess(load_edge_list(in));
}

// Writes to --output, or stdout when empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ordered_json graph_summary(const Graph& g) {
  ordered_json j;
  j["n"] = g.node_count();
  j["edges"] = g.edge_count();
  j["mean_degree"] = g.mean_degree();
  j["assortativity"] = number(degree_assortativity(g));
  return j;
}

ordered_json to_json(const ScoreResult& r) {
  ordered_json j;
  j["score_id"] = std::string(to_string(r.id));
  j["value"] = number(r.value);
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  j["params"] = params;
  j["flags"] = r.flags;
  if (r.error) j["error"] = *r.error;
  return j;
}

ordered_json to_json(const NormalizedScore& s, const NullEnsemble& e) {
  ordered_json j;
  j["score_id"] = std::string(to_string(s.id));
  j["raw"] = number(s.raw);
  j["denoised"] = number(s.denoised);
  j["standardized"] = s.standardized ? number(*s.standardized) : ordered_json(nullptr);
  j["null_mean"] = number(s.null_mean);
  j["null_std"] = number(s.null_std);
  j["null_stderr"] = number(s.null_std_error);
  j["n_samples"] = s.n_samples;
  j["flags"] = s.flags;
  j["null_quantiles"] = {{"0.025", e.quantile(0.025)}, {"0.5", e.quantile(0.5)}, {"0.975", e.quantile(0.975)}};
  return j;
}

void write_partition_file(const std::string& path, const Graph& g, const Partition& p) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_partition_csv(out, g, p);
}

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

// -- score -----------------------------------------------------------------

int cmd_score(const CommonOptions& o) {
  const Graph g = read_graph(o.input);
  const auto config = score_config(o);
  auto rng = make_rng(o.seed, 0);
  const Partition p = partition_graph(g, parse_partitioner(o.partitioner), partition_config(o), rng);
  write_partition_file(o.partition_out, g, p);
  const auto results = score_all(g, p, config);

  int status = kExitOk;
  for (const auto& r : results) {
    if (!r.ok()) status = kExitPartial;
  }
  Sink sink(o.output);
  auto& out = sink.stream();
  if (o.format == "csv") {
    out << "score_id,value,flags,error\n";
    for (const auto& r : results) {
      std::string flags;
      for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
      out << to_string(r.id) << ',' << fmt(r.value) << ',' << flags << ',' << csv_escape(r.error.value_or(""))
          << '\n';
    }
  } else {
    ordered_json j;
    j["graph"] = graph_summary(g);
    j["partition"] = {{"method", o.partitioner},
                      {"size_a", p.size_a()},
                      {"size_b", p.size_b()},
                      {"cut", cut_size(g, p)}};
    j["seed"] = o.seed;
    j["scores"] = ordered_json::array();
    for (const auto& r : results) j["scores"].push_back(to_json(r));
    out << j.dump(2) << '\n';
  }
  return status;
}

// -- normalize -------------------------------------------------------------

int cmd_normalize(const CommonOptions& o, const NullOptions& n) {
  const Graph g = read_graph(o.input);
  NullModelOptions options;
  options.dk = parse_null(n.null);
  options.n_samples = n.samples;
  options.workers = n.workers;
  options.seed = o.seed;
  options.partitioner = parse_partitioner(o.partitioner);
  options.partition = partition_config(o);
  options.scores = score_config(o);
  const auto report = normalize_scores(g, options);
  write_partition_file(o.partition_out, g, report.partition);

  int status = kExitOk;
  Sink sink(o.output);
  auto& out = sink.stream();
  const bool csv = o.format == "csv";
  if (csv) out << "score_id,raw,denoised,standardized,null_mean,null_std,null_stderr,n_samples,flags,error\n";
  ordered_json records = ordered_json::array();
  for (std::size_t i = 0; i < report.raw.size(); ++i) {
    const auto& raw = report.raw[i];
    const auto& ens = report.ensembles[i];
    const auto& norm = report.normalized[i];
    std::string error;
    if (!raw.ok()) error = *raw.error;
    else if (!ens.ok()) error = *ens.error;
    if (!norm) status = kExitPartial;
    if (csv) {
      if (norm) {
        std::string flags;
        for (const auto& f : norm->flags) flags += (flags.empty() ? "" : ";") + f;
        out << to_string(norm->id) << ',' << fmt(norm->raw) << ',' << fmt(norm->denoised) << ','
            << (norm->standardized ? fmt(*norm->standardized) : "") << ',' << fmt(norm->null_mean) << ','
            << fmt(norm->null_std) << ',' << fmt(norm->null_std_error) << ',' << norm->n_samples << ',' << flags
            << ",\n";
      } else {
        out << to_string(raw.id) << ',' << fmt(raw.value) << ",,,,,,,," << csv_escape(error) << '\n';
      }
    } else if (norm) {
      records.push_back(to_json(*norm, ens));
    } else {
      records.push_back({{"score_id", std::string(to_string(raw.id))}, {"raw", number(raw.value)}, {"error", error}});
    }
  }
  if (!csv) {
    ordered_json j;
    j["graph"] = graph_summary(g);
    j["partition"] = {{"method", o.partitioner},
                      {"size_a", report.partition.size_a()},
                      {"size_b", report.partition.size_b()},
                      {"cut", cut_size(g, report.partition)}};
    j["null"] = {{"model", n.null}, {"samples", n.samples}, {"seed", o.seed}};
    j["scores"] = records;
    out << j.dump(2) << '\n';
  }
  return status;
}

// -- sweep -----------------------------------------------------------------

struct SweepOptions {
  std::string generator = "er";
  std::vector<std::size_t> n{4000};
  std::vector<double> mean_degree{2, 3, 4, 6, 8, 10, 12, 16};
  std::vector<double> gamma{2.1, 2.5, 3.0};
  std::vector<double> frac_small{0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<std::string> scheme{"low", "medium", "high"};
  double k_in = 4.5;
  double c = 25.0;
  int replicates = 20;
  bool normalize = false;
};

struct GridPoint {
  std::size_t n = 0;
  double mean_degree = NAN;
  double gamma = NAN;
  double frac_small = NAN;
  std::string scheme;
};

int cmd_sweep(const CommonOptions& o, const NullOptions& nopt, const SweepOptions& s) {
  std::vector<GridPoint> grid;
  for (std::size_t n : s.n) {
    if (s.generator == "er") {
      for (double k : s.mean_degree) grid.push_back({n, k, NAN, NAN, ""});
    } else if (s.generator == "powerlaw") {
      for (double k : s.mean_degree) {
        for (double g : s.gamma) grid.push_back({n, k, g, NAN, ""});
      }
    } else if (s.generator == "sbm") {
      for (const auto& sc : s.scheme) {
        for (double f : s.frac_small) grid.push_back({n, NAN, NAN, f, sc});
      }
    } else {
      throw Error("unknown generator '" + s.generator + "' (expected er, powerlaw or sbm)");
    }
  }
  if (s.replicates < 1) throw Error("replicates must be positive");
  const bool planted = o.partitioner == "planted";
  if (planted && s.generator != "sbm") throw Error("the planted partition exists only for sbm");
  const auto config = score_config(o);

  Sink sink(o.output);
  auto& out = sink.stream();
  out << "generator,n,mean_degree,gamma,frac_small,scheme,replicate,nodes,edges,score_id,value,denoised,error\n";
  int status = kExitOk;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const auto& pt = grid[gi];
    for (int rep = 0; rep < s.replicates; ++rep) {
      const std::uint64_t stream = derive_seed(o.seed, gi);
      auto rng = make_rng(stream, static_cast<std::uint64_t>(rep));
      const std::string prefix = s.generator + ',' + std::to_string(pt.n) + ',' + fmt(pt.mean_degree) + ',' +
                                 fmt(pt.gamma) + ',' + fmt(pt.frac_small) + ',' + pt.scheme + ',' +
                                 std::to_string(rep) + ',';
      try {
        Graph g;
        std::optional<Partition> p;
        if (s.generator == "er") {
          const auto m = static_cast<std::size_t>(std::llround(pt.mean_degree * static_cast<double>(pt.n) / 2.0));
          g = preprocess(gen_er(pt.n, m, rng));
        } else if (s.generator == "powerlaw") {
          g = gen_powerlaw(pt.n, pt.gamma, pt.mean_degree, rng);
        } else {
          auto sbm = giant_component(gen_sbm(pt.n, pt.frac_small, s.k_in, s.c, parse_sbm_scheme(pt.scheme), rng));
          g = std::move(sbm.graph);
          if (planted) {
            std::vector<Block> blocks;
            for (auto b : sbm.block) blocks.push_back(b == 0 ? Block::A : Block::B);
            p = Partition(std::move(blocks));
          }
        }
        if (!p) p = partition_graph(g, parse_partitioner(o.partitioner), partition_config(o), rng);
        const auto results = score_all(g, *p, config);

        std::vector<NullEnsemble> ensembles;
        if (s.normalize) {
          NullModelOptions no;
          no.dk = parse_null(nopt.null);
          no.n_samples = nopt.samples;
          no.workers = nopt.workers;
          no.seed = derive_seed(stream, static_cast<std::uint64_t>(rep) + 1000003);
          no.partitioner = planted ? Partitioner::MinCut : parse_partitioner(o.partitioner);
          no.partition = partition_config(o);
          no.scores = config;
          ensembles = null_ensembles(g, no);
        }
        for (std::size_t i = 0; i < results.size(); ++i) {
          const auto& r = results[i];
          std::string denoised, error = r.error.value_or("");
          if (s.normalize) {
            if (ensembles[i].ok() && r.ok()) denoised = fmt(r.value - ensembles[i].mean);
            else if (error.empty()) error = ensembles[i].error.value_or("");
          }
          if (!error.empty()) status = kExitPartial;
          out << prefix << g.node_count() << ',' << g.edge_count() << ',' << to_string(r.id) << ','
              << fmt(r.value) << ',' << denoised << ',' << csv_escape(error) << '\n';
        }
      } catch (const std::exception& e) {
        status = kExitPartial;
        out << prefix << ",,,,," << csv_escape(e.what()) << '\n';
      }
    }
  }
  return status;
}

// -- evaluate --------------------------------------------------------------

struct EvaluateOptions {
  std::optional<std::size_t> window;
  std::string covariate = "n";
  bool combine = false;
  std::string roc_dir;
};

int cmd_evaluate(const CommonOptions& o, const EvaluateOptions& e) {
  std::ifstream in(o.input);
  if (!in) throw Error("cannot open '" + o.input + "'");
  const LabeledCorpus corpus = read_labeled_corpus(in);

  struct Entry {
    std::string name;
    std::vector<LabeledScore> column;
    std::vector<std::string> used, dropped;
  };
  std::vector<Entry> entries;
  for (const auto& name : corpus.score_names) entries.push_back({name, corpus.column(name), {}, {}});
  if (e.combine) {
    std::vector<std::map<std::string, double>> rows(corpus.size());
    for (const auto& name : corpus.score_names) {
      for (std::size_t i = 0; i < corpus.size(); ++i) rows[i][name] = corpus.scores.at(name)[i];
    }
    const auto combined = mean_combine(rows);
    auto column = entries.front().column;
    for (std::size_t i = 0; i < column.size(); ++i) column[i].value = combined.values[i];
    entries.push_back({"combined", std::move(column), combined.used, combined.dropped});
  }

  if (!e.roc_dir.empty()) std::filesystem::create_directories(e.roc_dir);
  Sink sink(o.output);
  auto& out = sink.stream();
  const bool csv = o.format == "csv";
  if (csv) out << "score_id,auc,gini\n";
  ordered_json records = ordered_json::array();
  for (const auto& entry : entries) {
    const RocCurve curve = roc(entry.column);
    if (!e.roc_dir.empty()) {
      std::ofstream f(std::filesystem::path(e.roc_dir) / (entry.name + ".csv"));
      write_roc_csv(f, curve);
    }
    if (csv) {
      out << csv_escape(entry.name) << ',' << fmt(curve.auc) << ',' << fmt(curve.gini) << '\n';
      continue;
    }
    ordered_json j;
    j["score_id"] = entry.name;
    j["auc"] = curve.auc;
    j["gini"] = curve.gini;
    if (entry.name == "combined") {
      j["used"] = entry.used;
      j["dropped"] = entry.dropped;
    }
    if (e.window) {
      ordered_json windows = ordered_json::array();
      for (const auto& w : windowed_auc(entry.column, e.covariate, *e.window)) {
        windows.push_back({{"begin", w.begin},
                           {"end", w.end},
                           {"covariate_min", w.covariate_min},
                           {"covariate_max", w.covariate_max},
                           {"auc", w.auc ? ordered_json(*w.auc) : ordered_json(nullptr)}});
      }
      j["windows"] = windows;
    }
    records.push_back(j);
  }
  if (!csv) {
    ordered_json j;
    j["networks"] = corpus.size();
    if (e.window) j["window"] = {{"size", *e.window}, {"covariate", e.covariate}};
    j["scores"] = records;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

// -- generate --------------------------------------------------------------

struct GenerateOptions {
  std::string model = "er";
  std::size_t n = 1000;
  std::optional<std::size_t> m;
  double mean_degree = 4.0;
  double gamma = 2.5;
  double frac_small = 0.5;
  double k_in = 4.5;
  double c = 25.0;
  std::string scheme = "medium";
  std::string labels;
  bool verify = false;
};

int cmd_generate(const CommonOptions& o, const GenerateOptions& gopt) {
  auto rng = make_rng(o.seed, 0);
  Graph g;
  std::optional<Graph> source;
  std::optional<SbmGraph> sbm;
  if (gopt.model == "er") {
    const auto m = gopt.m.value_or(
        static_cast<std::size_t>(std::llround(gopt.mean_degree * static_cast<double>(gopt.n) / 2.0)));
    g = gen_er(gopt.n, m, rng);
  } else if (gopt.model == "powerlaw") {
    g = gen_powerlaw(gopt.n, gopt.gamma, gopt.mean_degree, rng);
  } else if (gopt.model == "sbm") {
    sbm = gen_sbm(gopt.n, gopt.frac_small, gopt.k_in, gopt.c, parse_sbm_scheme(gopt.scheme), rng);
    g = sbm->graph;
  } else if (gopt.model == "config" || gopt.model == "dk2" || gopt.model == "d0") {
    if (o.input.empty()) throw Error("randomizing needs --input");
    source = read_graph(o.input);
    const int d = gopt.model == "config" ? 1 : gopt.model == "dk2" ? 2 : 0;
    g = randomize(*source, d, rng);
  } else {
    throw Error("unknown model '" + gopt.model + "' (expected er, powerlaw, sbm, config, dk2 or d0)");
  }

  if (gopt.verify) {
    if (!source) throw Error("--verify applies to config, dk2 and d0 randomizations");
    bool ok = false;
    std::string what;
    if (gopt.model == "config") {
      ok = g.degree_sequence() == source->degree_sequence();
      what = "degree sequence";
    } else if (gopt.model == "dk2") {
      ok = joint_degree_matrix(g) == joint_degree_matrix(*source);
      what = "joint degree matrix";
    } else {
      ok = g.node_count() == source->node_count() && g.edge_count() == source->edge_count();
      what = "node and edge counts";
    }
    std::cerr << "verify: " << what << (ok ? " preserved" : " NOT preserved") << '\n';
    if (!ok) return kExitFatal;
  }

  Sink sink(o.output);
  write_edge_list(sink.stream(), g);
  if (!gopt.labels.empty()) {
    std::ofstream out(gopt.labels);
    if (!out) throw Error("cannot write '" + gopt.labels + "'");
    if (sbm) {
      out << "node,group\n";
      for (std::size_t u = 0; u < g.node_count(); ++u) {
        out << csv_escape(g.label(static_cast<NodeId>(u))) << ',' << (sbm->block[u] == 0 ? "small" : "large")
            << '\n';
      }
    } else {
      write_label_map(out, g);
    }
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_input) {
  auto* in = cmd->add_option("-i,--input", o.input, "Edge list file");
  if (needs_input) in->required();
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
}

void add_scoring(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--partitioner", o.partitioner, "mincut, spectral or modularity")->capture_default_str();
  cmd->add_option("--scores", o.scores, "Comma-separated score ids or 'all'")->capture_default_str();
  cmd->add_option("--k", o.k, "RWC influencers per side")->capture_default_str();
  cmd->add_option("--K", o.K, "ARWC and DP influencer fraction")->capture_default_str();
  cmd->add_option("--dp-K", o.dp_K, "DP influencer fraction (overrides --K)");
  cmd->add_option("--tol", o.tol, "DP convergence tolerance")->capture_default_str();
  cmd->add_option("--balance", o.balance, "Mincut balance tolerance")->capture_default_str();
  cmd->add_option("--tau", o.tau, "Spectral regularizer (default: mean degree)");
  cmd->add_option("--partition-out", o.partition_out, "Write the partition as CSV");
}

void add_null(CLI::App* cmd, NullOptions& n) {
  cmd->add_option("--null", n.null, "Null model")->check(CLI::IsMember({"d0", "d1", "d2"}))->capture_default_str();
  cmd->add_option("--samples", n.samples, "Ensemble size")->capture_default_str();
  cmd->add_option("--workers", n.workers, "Worker threads (0: OpenMP default)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural polarization scores with null-model normalization"};
  app.require_subcommand(1);

  CommonOptions common;
  NullOptions null_opts;
  SweepOptions sweep;
  EvaluateOptions eval;
  GenerateOptions gen;

  auto* score = app.add_subcommand("score", "Partition a network and compute scores");
  add_common(score, common, true);
  add_scoring(score, common);

  auto* normalize = app.add_subcommand("normalize", "Scores denoised against a randomized ensemble");
  add_common(normalize, common, true);
  add_scoring(normalize, common);
  add_null(normalize, null_opts);

  auto* sw = app.add_subcommand("sweep", "Scores over a grid of generated networks (CSV)");
  add_common(sw, common, false);
  add_scoring(sw, common);
  add_null(sw, null_opts);
  sw->add_option("--generator", sweep.generator, "er, powerlaw or sbm")->capture_default_str();
  sw->add_option("--n", sweep.n, "Node counts")->delimiter(',');
  sw->add_option("--mean-degree", sweep.mean_degree, "Mean degrees (er, powerlaw)")->delimiter(',');
  sw->add_option("--gamma", sweep.gamma, "Power-law exponents")->delimiter(',');
  sw->add_option("--frac-small", sweep.frac_small, "Smaller-group fractions (sbm)")->delimiter(',');
  sw->add_option("--scheme", sweep.scheme, "SBM schemes")->delimiter(',');
  sw->add_option("--k-in", sweep.k_in, "SBM within-group degree")->capture_default_str();
  sw->add_option("--c", sweep.c, "SBM ratio k_in / k_out")->capture_default_str();
  sw->add_option("--replicates", sweep.replicates, "Replicates per grid point")->capture_default_str();
  sw->add_flag("--normalize", sweep.normalize, "Add denoised values");

  auto* ev = app.add_subcommand("evaluate", "ROC, AUC and Gini of labeled scores");
  ev->add_option("-i,--input", common.input, "Labeled score CSV")->required();
  ev->add_option("-o,--output", common.output, "Output file (default stdout)");
  ev->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  ev->add_option("--window", eval.window, "Moving-window size");
  ev->add_option("--covariate", eval.covariate, "Window ordering: n or mean_degree")
      ->check(CLI::IsMember({"n", "mean_degree"}))
      ->capture_default_str();
  ev->add_flag("--combine", eval.combine, "Add the mean-combined score");
  ev->add_option("--roc-dir", eval.roc_dir, "Write one fpr,tpr CSV per score here");

  auto* ge = app.add_subcommand("generate", "Write a generated or randomized edge list");
  add_common(ge, common, false);
  ge->add_option("--model", gen.model, "er, powerlaw, sbm, config, dk2 or d0")->capture_default_str();
  ge->add_option("--n", gen.n, "Node count")->capture_default_str();
  ge->add_option("--m", gen.m, "Edge count (er)");
  ge->add_option("--mean-degree", gen.mean_degree, "Mean degree (er, powerlaw)")->capture_default_str();
  ge->add_option("--gamma", gen.gamma, "Power-law exponent")->capture_default_str();
  ge->add_option("--frac-small", gen.frac_small, "Smaller-group fraction (sbm)")->capture_default_str();
  ge->add_option("--k-in", gen.k_in, "Within-group degree (sbm)")->capture_default_str();
  ge->add_option("--c", gen.c, "Ratio k_in / k_out (sbm)")->capture_default_str();
  ge->add_option("--scheme", gen.scheme, "low, medium or high (sbm)")->capture_default_str();
  ge->add_option("--labels", gen.labels, "Write node labels (sbm: ground-truth groups)");
  ge->add_flag("--verify", gen.verify, "Check the randomization invariant against the input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    if (*score) return cmd_score(common);
    if (*normalize) return cmd_normalize(common, null_opts);
    if (*sw) return cmd_sweep(common, null_opts, sweep);
    if (*ev) return cmd_evaluate(common, eval);
    if (*ge) return cmd_generate(common, gen);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFatal;
  }
  return kExitFatal;
}
