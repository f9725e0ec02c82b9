#include "sumnet/analysis.hpp"

#include <algorithm>

namespace sumnet {

namespace {

DisconnectSet disconnect_against(const SumNetwork& net, const PairMatrix& base, EdgeId e) {
  const PairMatrix after = pair_connectivity(net, std::span<const EdgeId>(&e, 1));
  DisconnectSet out{e, {}};
  for (std::size_t i = 0; i < base.rows(); ++i) {
    for (std::size_t j = 0; j < base.cols(); ++j) {
      if (base.at(i, j) && !after.at(i, j)) out.pairs.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<DisconnectSet> all_disconnect_sets(const SumNetwork& net) {
  const PairMatrix base = pair_connectivity(net);
  std::vector<DisconnectSet> out;
  out.reserve(net.edge_count());
  for (const Edge& e : net.edges()) out.push_back(disconnect_against(net, base, e.id));
  return out;
}

std::size_t max_size(const std::vector<DisconnectSet>& sets) {
  std::size_t k = 0;
  for (const auto& d : sets) k = std::max(k, d.pairs.size());
  return k;
}

std::size_t sources_reaching(const SumNetwork& net, NodeId v) {
  return static_cast<std::size_t>(std::count_if(net.sources().begin(), net.sources().end(),
                                                [&](NodeId s) { return net.reaches_or_equal(s, v); }));
}

std::size_t terminals_reached(const SumNetwork& net, NodeId v) {
  return static_cast<std::size_t>(std::count_if(net.terminals().begin(), net.terminals().end(),
                                                [&](NodeId t) { return net.reaches_or_equal(v, t); }));
}

std::uint8_t tags_for(const SumNetwork& net, const Edge& e) {
  const std::size_t up = sources_reaching(net, e.tail);
  const std::size_t down = terminals_reached(net, e.head);
  std::uint8_t tags = 0;
  if (down <= 1) tags |= kTagA;
  if (up <= 1) tags |= kTagB;
  if (up >= 2 && down >= 2) tags |= kTagC;
  return tags;
}

std::map<EdgeId, std::uint8_t> abc_from(const SumNetwork& net, const std::vector<EdgeId>& maxed) {
  std::map<EdgeId, std::uint8_t> out;
  for (EdgeId e : maxed) out[e] = tags_for(net, net.edge(e));
  return out;
}

std::vector<EdgeId> maxed_from(const std::vector<DisconnectSet>& sets, std::size_t k) {
  std::vector<EdgeId> out;
  for (const auto& d : sets) {
    if (d.pairs.size() == k) out.push_back(d.edge);
  }
  return out;
}

}  // namespace

DisconnectSet disconnect_set(const SumNetwork& net, EdgeId e) {
  if (!net.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "unknown edge id " + std::to_string(e.value));
  return disconnect_against(net, pair_connectivity(net), e);
}

std::size_t kappa(const SumNetwork& net) { return max_size(all_disconnect_sets(net)); }

std::vector<EdgeId> max_disconnecting_edges(const SumNetwork& net) {
  const auto sets = all_disconnect_sets(net);
  return maxed_from(sets, max_size(sets));
}

std::map<EdgeId, std::uint8_t> classify_abc(const SumNetwork& net) {
  return abc_from(net, max_disconnecting_edges(net));
}

bool is_connected_sum_network(const SumNetwork& net) {
  const PairMatrix m = pair_connectivity(net);
  return m.count() == m.rows() * m.cols();
}

std::optional<NodeId> find_hub_node(const SumNetwork& net) {
  if (!net.is_three_by_three()) {
    throw Error(ErrorCode::NotThreeByThree, "hub search needs 3 sources and 3 terminals");
  }
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    NodeId v{i};
    const std::size_t up = sources_reaching(net, v);
    const std::size_t down = terminals_reached(net, v);
    if ((up == 3 && down >= 2) || (up >= 2 && down == 3)) return v;
  }
  return std::nullopt;
}

bool has_role_shortcut(const SumNetwork& net) {
  auto within = [&](const std::vector<NodeId>& group) {
    for (NodeId a : group) {
      for (NodeId b : group) {
        if (a != b && net.reachable(a, b)) return true;
      }
    }
    return false;
  };
  return within(net.sources()) || within(net.terminals());
}

SumNetwork augment_parallel(const SumNetwork& net, std::span<const EdgeId> edges) {
  std::vector<Edge> all(net.edges().begin(), net.edges().end());
  std::uint32_t next = net.edge_id_bound();
  for (EdgeId e : edges) {
    const Edge& orig = net.edge(e);
    std::string name = orig.name + "*";
    while (net.find_edge(name) ||
           std::any_of(all.begin(), all.end(), [&](const Edge& x) { return x.name == name; })) {
      name += "*";
    }
    all.push_back({EdgeId{next++}, orig.tail, orig.head, std::move(name)});
  }
  return SumNetwork::create(net.node_names(), std::move(all), net.sources(), net.terminals());
}

AnalysisReport analyze(const SumNetwork& net) {
  AnalysisReport r;
  r.connectivity = pair_connectivity(net);
  r.connected = r.connectivity.count() == r.connectivity.rows() * r.connectivity.cols();
  r.disconnect = all_disconnect_sets(net);
  r.kappa = max_size(r.disconnect);
  r.max_disconnecting = maxed_from(r.disconnect, r.kappa);
  r.abc = abc_from(net, r.max_disconnecting);
  if (net.is_three_by_three()) r.hub = find_hub_node(net);
  return r;
}

}  // namespace sumnet
