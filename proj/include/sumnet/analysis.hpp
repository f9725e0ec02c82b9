#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumnet/multigraph.hpp"

namespace sumnet {

/// (source index, terminal index), both 0-based.
using SourceTerminalPair = std::pair<std::size_t, std::size_t>;

struct DisconnectSet {
  EdgeId edge;
  /// Sorted. A pair appears iff it is connected in the network and no
  /// longer connected once `edge` is removed.
  std::vector<SourceTerminalPair> pairs;
};

/// Tags of a maximum-disconnecting edge. A: the head reaches at most one
/// terminal. B: at most one source reaches the tail. C: at least two sources
/// reach the tail and the head reaches at least two terminals. A source or
/// terminal sitting at the tail/head counts as reaching it.
enum EdgeTag : std::uint8_t {
  kTagA = 1U << 0U,
  kTagB = 1U << 1U,
  kTagC = 1U << 2U,
};

struct AnalysisReport {
  PairMatrix connectivity;
  bool connected = false;
  std::size_t kappa = 0;
  std::vector<DisconnectSet> disconnect;  // one per edge, ascending edge id
  std::vector<EdgeId> max_disconnecting;
  std::map<EdgeId, std::uint8_t> abc;     // only max-disconnecting edges
  std::optional<NodeId> hub;              // only filled for 3s/3t networks
};

DisconnectSet disconnect_set(const SumNetwork& net, EdgeId e);

/// Largest disconnect set over all edges (0 for an edgeless network).
std::size_t kappa(const SumNetwork& net);

std::vector<EdgeId> max_disconnecting_edges(const SumNetwork& net);

std::map<EdgeId, std::uint8_t> classify_abc(const SumNetwork& net);

bool is_connected_sum_network(const SumNetwork& net);

/// A node that all three sources reach and that reaches at least two
/// terminals, or that at least two sources reach and that reaches all three
/// terminals. Lowest node id wins. Requires a 3s/3t network.
std::optional<NodeId> find_hub_node(const SumNetwork& net);

/// Whether some source reaches another source, or some terminal reaches
/// another terminal.
bool has_role_shortcut(const SumNetwork& net);

/// Adds one new edge in parallel with each listed edge. New edges get fresh
/// ids above the current bound and the name "<orig>*" (made unique).
SumNetwork augment_parallel(const SumNetwork& net, std::span<const EdgeId> edges);

AnalysisReport analyze(const SumNetwork& net);

}  // namespace sumnet
