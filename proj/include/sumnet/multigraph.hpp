#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumnet/error.hpp"

namespace sumnet {

struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  EdgeId id;
  NodeId tail;
  NodeId head;
  std::string name;
};

/// Square-ish boolean table indexed by (source index, terminal index).
class PairMatrix {
 public:
  PairMatrix() = default;
  PairMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { cells_[r * cols_ + c] = v ? 1 : 0; }
  std::size_t count() const noexcept;

  friend bool operator==(const PairMatrix&, const PairMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<char> cells_;
};

/// Immutable directed acyclic multigraph with ordered source and terminal
/// lists. Node ids are dense (0..node_count-1); edge ids are stable across
/// removals, so an EdgeId taken from a network stays valid in every variant
/// derived from it that still contains the edge.
class SumNetwork {
 public:
  /// Validates and freezes the parts. Throws ValidationError for bad
  /// references, self-loops, duplicate names or overlapping source/terminal
  /// lists, and CycleDetected when the edges contain a directed cycle.
  static SumNetwork create(std::vector<std::string> node_names, std::vector<Edge> edges,
                           std::vector<NodeId> sources, std::vector<NodeId> terminals);

  std::size_t node_count() const noexcept { return node_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending id order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(EdgeId e) const noexcept;
  bool has_node(NodeId v) const noexcept { return v.value < node_names_.size(); }
  const Edge& edge(EdgeId e) const;
  /// Position of the edge inside edges().
  std::size_t edge_index(EdgeId e) const;
  /// One past the largest edge id in use.
  std::uint32_t edge_id_bound() const noexcept { return static_cast<std::uint32_t>(index_.size()); }

  /// Incident edges in ascending id order.
  std::span<const EdgeId> in_edges(NodeId v) const;
  std::span<const EdgeId> out_edges(NodeId v) const;

  const std::vector<NodeId>& sources() const noexcept { return sources_; }
  const std::vector<NodeId>& terminals() const noexcept { return terminals_; }
  std::optional<std::size_t> source_index(NodeId v) const;
  std::optional<std::size_t> terminal_index(NodeId v) const;

  const std::string& node_name(NodeId v) const;
  const std::vector<std::string>& node_names() const noexcept { return node_names_; }
  std::optional<NodeId> find_node(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Tails before heads; ties broken by smaller node id.
  std::span<const NodeId> topological_order() const noexcept { return topo_; }

  /// Directed path of at least one edge. reachable(v, v) is always false.
  bool reachable(NodeId from, NodeId to) const;
  /// reachable(from, to) || from == to.
  bool reaches_or_equal(NodeId from, NodeId to) const;

  bool is_three_by_three() const noexcept {
    return sources_.size() == 3 && terminals_.size() == 3;
  }

  friend bool operator==(const SumNetwork& a, const SumNetwork& b);

 private:
  SumNetwork() = default;
  void require_node(NodeId v) const;

  std::vector<std::string> node_names_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> index_;  // edge id -> position, -1 if absent
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> terminals_;
  std::vector<NodeId> topo_;
  std::vector<std::vector<std::uint64_t>> descendants_;
  std::unordered_map<std::string, NodeId> node_lookup_;
  std::unordered_map<std::string, EdgeId> edge_lookup_;
};

/// Incremental construction with auto-generated names for unnamed items.
class NetworkBuilder {
 public:
  NodeId add_node(std::string name = {});
  NodeId add_source(std::string name = {});
  NodeId add_terminal(std::string name = {});
  EdgeId add_edge(NodeId tail, NodeId head, std::string name = {});

  SumNetwork build() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> terminals_;
};

std::vector<NodeId> topological_order(const SumNetwork& net);

bool reachable(const SumNetwork& net, NodeId from, NodeId to);

/// Nodes reachable from every node of `from` and reaching every node of `to`.
/// An empty side imposes no constraint. Result is sorted by id.
std::vector<NodeId> gamma(const SumNetwork& net, std::span<const NodeId> from,
                          std::span<const NodeId> to);

/// Minimum number of edges whose removal leaves no path from `from` to `to`.
std::size_t mincut(const SumNetwork& net, std::span<const NodeId> from,
                   std::span<const NodeId> to);

SumNetwork reverse(const SumNetwork& net);

SumNetwork remove_edges(const SumNetwork& net, std::span<const EdgeId> edges);

/// Which (source, terminal) pairs are joined by a path avoiding `removed`.
/// Does not copy the network.
PairMatrix pair_connectivity(const SumNetwork& net, std::span<const EdgeId> removed = {});

/// Whether some node of `from` has a path (>= 1 edge) to some node of `to`
/// avoiding `removed`.
bool any_path(const SumNetwork& net, std::span<const NodeId> from, std::span<const NodeId> to,
              std::span<const EdgeId> removed = {});

}  // namespace sumnet

template <>
struct std::hash<sumnet::EdgeId> {
  std::size_t operator()(const sumnet::EdgeId& e) const noexcept { return e.value; }
};
template <>
struct std::hash<sumnet::NodeId> {
  std::size_t operator()(const sumnet::NodeId& v) const noexcept { return v.value; }
};
