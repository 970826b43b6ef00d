#include "polar/partition.hpp"

#include <algorithm>
#include <ostream>

#include "polar/error.hpp"

namespace polar {

Partition::Partition(std::vector<Block> assignment) : blocks_(std::move(assignment)) {
  size_a_ = static_cast<std::size_t>(std::count(blocks_.begin(), blocks_.end(), Block::A));
}

Partition Partition::swapped() const {
  std::vector<Block> flipped(blocks_.size());
  std::transform(blocks_.begin(), blocks_.end(), flipped.begin(), other);
  return Partition(std::move(flipped));
}

std::size_t cut_size(const Graph& g, const Partition& p) {
  std::size_t cut = 0;
  for (const auto& e : g.edges()) cut += p.block(e.u) != p.block(e.v);
  return cut;
}

bool same_split(const Partition& p, const Partition& q) { return p == q || p == q.swapped(); }

Partition refine_modularity(const Graph& g, const Partition& p, Rng& rng) {
  const std::size_t n = g.node_count();
  if (p.node_count() != n) throw Error("partition does not match graph");
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  std::vector<Block> blocks(p.assignment().begin(), p.assignment().end());
  if (n < 2 || m == 0) return Partition(std::move(blocks));

  std::int64_t volume[2] = {0, 0};
  std::size_t count[2] = {0, 0};
  for (std::size_t u = 0; u < n; ++u) {
    const auto b = static_cast<int>(blocks[u]);
    volume[b] += g.degree(static_cast<NodeId>(u));
    ++count[b];
  }

  const std::size_t attempts = 2 * n;
  for (std::size_t t = 0; t < attempts; ++t) {
    const auto u = static_cast<NodeId>(uniform_index(rng, n));
    const int from = static_cast<int>(blocks[u]);
    const int to = 1 - from;
    if (count[from] == 1) continue;
    std::int64_t links_from = 0, links_to = 0;
    for (NodeId v : g.neighbors(u)) {
      if (static_cast<int>(blocks[v]) == from) ++links_from; else ++links_to;
    }
    const std::int64_t k = g.degree(u);
    // 4m^2 times the modularity change of the move; exact in integers.
    const std::int64_t gain =
        4 * m * (links_to - links_from) - 2 * k * (volume[to] - volume[from] + k);
    if (gain <= 0) continue;
    blocks[u] = static_cast<Block>(to);
    volume[from] -= k;
    volume[to] += k;
    --count[from];
    ++count[to];
  }
  return Partition(std::move(blocks));
}

Partition partition_graph(const Graph& g, Partitioner kind, const PartitionConfig& config,
                          Rng& rng) {
  switch (kind) {
    case Partitioner::MinCut:
      return bisect_mincut(g, config.balance_tolerance, rng);
    case Partitioner::Spectral:
      return bisect_spectral(g, config.tau);
    case Partitioner::Modularity:
      return refine_modularity(g, bisect_mincut(g, config.balance_tolerance, rng), rng);
  }
  throw Error("unknown partitioner");
}

std::string to_string(Partitioner kind) {
  switch (kind) {
    case Partitioner::MinCut: return "mincut";
    case Partitioner::Spectral: return "spectral";
    case Partitioner::Modularity: return "modularity";
  }
  return "?";
}

Partitioner parse_partitioner(const std::string& name) {
  if (name == "mincut") return Partitioner::MinCut;
  if (name == "spectral") return Partitioner::Spectral;
  if (name == "modularity") return Partitioner::Modularity;
  throw Error("unknown partitioner '" + name + "'");
}

void write_partition_csv(std::ostream& out, const Graph& g, const Partition& p) {
  out << "node_label,block\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    out << csv_escape(g.label(static_cast<NodeId>(u))) << ','
        << (p.in_a(static_cast<NodeId>(u)) ? 'A' : 'B') << '\n';
  }
}

}  // namespace polar
