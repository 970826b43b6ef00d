#include "polar/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "polar/error.hpp"

namespace polar {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw Error("label count " + std::to_string(labels.size()) + " does not match node count " +
                std::to_string(n));
  }
  Graph g;
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);

  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw Error("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(2 * g.edges_.size());
  g.incident_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // neighbor list sorted.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto [u, v] = g.edges_[id];
    g.adjacency_[cursor[v]] = u;
    g.incident_[cursor[v]++] = id;
  }
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto [u, v] = g.edges_[id];
    g.adjacency_[cursor[u]] = v;
    g.incident_[cursor[u]++] = id;
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> k(node_count());
  for (std::size_t u = 0; u < k.size(); ++u) k[u] = degree(static_cast<NodeId>(u));
  return k;
}

int Graph::max_degree() const {
  int best = 0;
  for (std::size_t u = 0; u < node_count(); ++u) best = std::max(best, degree(static_cast<NodeId>(u)));
  return best;
}

double Graph::mean_degree() const {
  if (node_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
}

std::int64_t JointDegreeMatrix::total() const {
  std::int64_t t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

std::int64_t JointDegreeMatrix::at(int k1, int k2) const {
  auto it = counts.find({std::min(k1, k2), std::max(k1, k2)});
  return it == counts.end() ? 0 : it->second;
}

EdgeList load_edge_list(std::istream& in) {
  EdgeList out;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(std::move(t));
    if (parts.size() != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(parts.size()));
    }
    const NodeId u = intern(parts[0]);
    const NodeId v = intern(parts[1]);
    out.pairs.emplace_back(u, v);
  }
  return out;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const std::size_t n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<NodeId> stack;
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> remap(g.node_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(nodes[i]));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] >= 0 && remap[e.v] >= 0) edges.push_back({remap[e.u], remap[e.v]});
  }
  return Graph::from_edges(nodes.size(), std::move(edges), std::move(labels));
}

Graph preprocess(const Graph& g) {
  if (g.node_count() == 0) throw Error("empty graph");
  int count = 0;
  const auto comp = connected_components(g, &count);
  if (count == 1) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (int c : comp) ++sizes[c];
  // Components are numbered in order of their smallest member, so the first
  // maximum is the tie-break winner.
  const int giant = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[giant]);
  for (std::size_t u = 0; u < comp.size(); ++u) {
    if (comp[u] == giant) keep.push_back(static_cast<NodeId>(u));
  }
  return induced_subgraph(g, keep);
}

Graph preprocess(const EdgeList& raw) {
  if (raw.node_count() == 0) throw Error("empty graph");
  std::vector<Edge> edges;
  edges.reserve(raw.pairs.size());
  for (const auto& [u, v] : raw.pairs) edges.push_back({u, v});
  return preprocess(Graph::from_edges(raw.node_count(), std::move(edges), raw.labels));
}

JointDegreeMatrix joint_degree_matrix(const Graph& g) {
  JointDegreeMatrix jdm;
  for (const auto& e : g.edges()) {
    const int a = g.degree(e.u);
    const int b = g.degree(e.v);
    ++jdm.counts[{std::min(a, b), std::max(a, b)}];
  }
  return jdm;
}

double degree_assortativity(const Graph& g) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0) return 0.0;
  double sum_prod = 0, sum_half = 0, sum_sq_half = 0;
  for (const auto& e : g.edges()) {
    const double a = g.degree(e.u);
    const double b = g.degree(e.v);
    sum_prod += a * b;
    sum_half += 0.5 * (a + b);
    sum_sq_half += 0.5 * (a * a + b * b);
  }
  const double mean = sum_half / m;
  const double num = sum_prod / m - mean * mean;
  const double den = sum_sq_half / m - mean * mean;
  if (std::abs(den) < 1e-15) return 0.0;
  return num / den;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_label_map(std::ostream& out, const Graph& g) {
  out << "id,label\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    out << u << ',' << csv_escape(g.label(static_cast<NodeId>(u))) << '\n';
  }
}

}  // namespace polar
