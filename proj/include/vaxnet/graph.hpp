#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "vaxnet/common.hpp"

namespace vaxnet {

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in compressed adjacency form.
//
// Neighbor lists are sorted strictly ascending, symmetric, and contain no
// self-loops. Each node carries an external label; freshly built graphs use
// the identity labelling and delete_nodes() keeps the surviving labels.
class Graph {
 public:
  Graph() = default;

  // Deduplicates pairs, drops self-loops and symmetrizes. Without an explicit
  // node count, n = max index + 1.
  static Graph from_edges(std::span<const Edge> edges,
                          std::optional<std::size_t> n = std::nullopt);
  static Graph from_edges(std::span<const Edge> edges, std::size_t n,
                          std::vector<std::int64_t> labels);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  std::int64_t label(NodeId v) const noexcept { return labels_[v]; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  // Hash of the adjacency structure (labels excluded).
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<std::int64_t> labels_;
};

// Induced subgraph on the nodes not in `victims` (principal submatrix of A).
// Survivors are re-indexed densely in their original order and keep their
// labels. Duplicate victims are ignored.
Graph delete_nodes(const Graph& g, std::span<const NodeId> victims);

struct DegreeStats {
  double avg = 0.0;
  std::size_t max = 0;
  std::size_t min = 0;
};

DegreeStats degree_stats(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' comments and blank lines
// ignored. Reading with an explicit node count keeps trailing isolated nodes.
Graph read_edge_list(std::istream& in, std::optional<std::size_t> n = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace vaxnet
