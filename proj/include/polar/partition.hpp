#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/graph.hpp"
#include "polar/rng.hpp"

namespace polar {

enum class Block : std::uint8_t { A = 0, B = 1 };

constexpr Block other(Block b) { return b == Block::A ? Block::B : Block::A; }

/// Two-block labeling of every node of a graph.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Block> assignment);

  std::size_t node_count() const { return blocks_.size(); }
  Block block(NodeId u) const { return blocks_[u]; }
  bool in_a(NodeId u) const { return blocks_[u] == Block::A; }
  std::size_t size_a() const { return size_a_; }
  std::size_t size_b() const { return blocks_.size() - size_a_; }
  std::size_t size(Block b) const { return b == Block::A ? size_a() : size_b(); }
  std::span<const Block> assignment() const { return blocks_; }

  /// Same split with the block names exchanged.
  Partition swapped() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
  std::size_t size_a_ = 0;
};

/// Number of edges whose endpoints lie in different blocks.
std::size_t cut_size(const Graph& g, const Partition& p);

/// True when p and q describe the same split, up to block names.
bool same_split(const Partition& p, const Partition& q);

/// Multilevel balanced min-cut bisection: heavy-edge matching coarsening,
/// greedy-growing initial bisection, Fiduccia-Mattheyses refinement on the way
/// back up. The heavier block holds at most max(ceil(n/2), (1+tol)*n/2) nodes.
Partition bisect_mincut(const Graph& g, double balance_tolerance, Rng& rng);

struct FiedlerVector {
  std::vector<double> values;  // unit eigenvector of the normalized operator
  double eigenvalue = 0.0;     // of the symmetric normalized Laplacian
  double residual = 0.0;
  std::size_t matvecs = 0;
};

/// Eigenvector of the second-smallest eigenvalue of the symmetric normalized
/// Laplacian of A + (tau/n) * ones. Restarted Lanczos with full
/// reorthogonalization; throws after 10*n operator applications.
FiedlerVector fiedler_vector(const Graph& g, double tau, double tolerance = 1e-8);

/// Regularized spectral bisection by the sign of the Fiedler vector.
/// Nodes with value 0 go to block A. Default tau is the mean degree.
Partition bisect_spectral(const Graph& g, std::optional<double> tau = std::nullopt);

/// Greedy stochastic modularity fine-tuning: 2*n attempted single-node moves,
/// each kept only if modularity strictly increases. Never empties a block.
Partition refine_modularity(const Graph& g, const Partition& p, Rng& rng);

enum class Partitioner { MinCut, Spectral, Modularity };

struct PartitionConfig {
  double balance_tolerance = 0.1;
  std::optional<double> tau;
};

/// Modularity partitioning refines a min-cut bisection.
Partition partition_graph(const Graph& g, Partitioner kind, const PartitionConfig& config,
                          Rng& rng);

std::string to_string(Partitioner kind);
Partitioner parse_partitioner(const std::string& name);

/// Two-column CSV "node_label,block".
void write_partition_csv(std::ostream& out, const Graph& g, const Partition& p);

}  // namespace polar
