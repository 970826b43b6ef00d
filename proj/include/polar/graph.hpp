#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polar {

using NodeId = std::int32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge list as read from a file: dense ids, original labels, and the raw
/// pairs (self-loops and repeats kept until preprocess).
struct EdgeList {
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> pairs;

  std::size_t node_count() const { return labels.size(); }
};

/// Simple undirected graph in CSR form. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on nodes 0..n-1. Self-loops are dropped and
  /// parallel edges merged. Empty `labels` means labels "0".."n-1".
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(NodeId u) const {
    return {incident_.data() + offsets_[u], incident_.data() + offsets_[u + 1]};
  }
  int degree(NodeId u) const { return static_cast<int>(offsets_[u + 1] - offsets_[u]); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId u) const { return labels_[u]; }

  bool has_edge(NodeId u, NodeId v) const;
  std::vector<int> degree_sequence() const;
  int max_degree() const;
  double mean_degree() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<EdgeId> incident_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Edge counts keyed by the (smaller, larger) degree pair of the endpoints.
struct JointDegreeMatrix {
  std::map<std::pair<int, int>, std::int64_t> counts;

  std::int64_t total() const;
  std::int64_t at(int k1, int k2) const;

  friend bool operator==(const JointDegreeMatrix&, const JointDegreeMatrix&) = default;
};

/// Parses "u v" lines. '#' comments and blank lines are skipped; anything
/// else with a token count other than two raises ParseError.
EdgeList load_edge_list(std::istream& in);

/// Largest connected component with loops and parallel edges removed.
/// Ties between equal-size components go to the one holding the smallest id.
Graph preprocess(const EdgeList& raw);
Graph preprocess(const Graph& g);

/// Subgraph induced by `nodes` (ascending), labels carried over.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Component index per node; components are numbered by smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

JointDegreeMatrix joint_degree_matrix(const Graph& g);

/// Pearson degree correlation over edge endpoints. 0 when undefined.
double degree_assortativity(const Graph& g);

void write_edge_list(std::ostream& out, const Graph& g);
/// Two-column CSV "id,label".
void write_label_map(std::ostream& out, const Graph& g);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_escape(const std::string& field);

}  // namespace polar
