#include "sumnet/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace sumnet {

std::size_t PairMatrix::count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint32_t i) {
  return (bits[i / 64] >> (i % 64)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t i) {
  bits[i / 64] |= std::uint64_t{1} << (i % 64);
}

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::ValidationError, msg);
}

}  // namespace

SumNetwork SumNetwork::create(std::vector<std::string> node_names, std::vector<Edge> edges,
                              std::vector<NodeId> sources, std::vector<NodeId> terminals) {
  SumNetwork net;
  const std::size_t n = node_names.size();
  net.node_names_ = std::move(node_names);
  for (std::size_t i = 0; i < n; ++i) {
    if (net.node_names_[i].empty()) invalid("node " + std::to_string(i) + " has an empty name");
    if (!net.node_lookup_.emplace(net.node_names_[i], NodeId{static_cast<std::uint32_t>(i)}).second) {
      invalid("duplicate node name '" + net.node_names_[i] + "'");
    }
  }

  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  net.edges_ = std::move(edges);
  std::uint32_t bound = net.edges_.empty() ? 0 : net.edges_.back().id.value + 1;
  net.index_.assign(bound, -1);
  net.in_.resize(n);
  net.out_.resize(n);
  for (std::size_t i = 0; i < net.edges_.size(); ++i) {
    const Edge& e = net.edges_[i];
    if (net.index_[e.id.value] != -1) invalid("duplicate edge id " + std::to_string(e.id.value));
    if (e.tail.value >= n || e.head.value >= n) invalid("edge '" + e.name + "' references an unknown node");
    if (e.tail == e.head) throw Error(ErrorCode::CycleDetected, "edge '" + e.name + "' is a self-loop");
    if (e.name.empty()) invalid("edge " + std::to_string(e.id.value) + " has an empty name");
    if (!net.edge_lookup_.emplace(e.name, e.id).second) invalid("duplicate edge name '" + e.name + "'");
    net.index_[e.id.value] = static_cast<std::int32_t>(i);
    net.out_[e.tail.value].push_back(e.id);
    net.in_[e.head.value].push_back(e.id);
  }

  std::vector<char> role(n, 0);
  for (NodeId s : sources) {
    if (s.value >= n) invalid("unknown source node");
    if (role[s.value] != 0) invalid("node '" + net.node_names_[s.value] + "' listed twice as source/terminal");
    role[s.value] = 1;
  }
  for (NodeId t : terminals) {
    if (t.value >= n) invalid("unknown terminal node");
    if (role[t.value] != 0) invalid("node '" + net.node_names_[t.value] + "' listed twice as source/terminal");
    role[t.value] = 2;
  }
  net.sources_ = std::move(sources);
  net.terminals_ = std::move(terminals);

  // Kahn with a min-heap so the order is deterministic.
  std::vector<std::size_t> indeg(n, 0);
  for (const Edge& e : net.edges_) ++indeg[e.head.value];
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    std::uint32_t v = ready.top();
    ready.pop();
    net.topo_.push_back(NodeId{v});
    for (EdgeId eid : net.out_[v]) {
      std::uint32_t h = net.edge(eid).head.value;
      if (--indeg[h] == 0) ready.push(h);
    }
  }
  if (net.topo_.size() != n) {
    throw Error(ErrorCode::CycleDetected, "edge set contains a directed cycle");
  }

  const std::size_t words = (n + 63) / 64;
  net.descendants_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = net.topo_.rbegin(); it != net.topo_.rend(); ++it) {
    auto& mine = net.descendants_[it->value];
    for (EdgeId eid : net.out_[it->value]) {
      std::uint32_t h = net.edge(eid).head.value;
      set_bit(mine, h);
      const auto& theirs = net.descendants_[h];
      for (std::size_t w = 0; w < words; ++w) mine[w] |= theirs[w];
    }
  }
  return net;
}

bool SumNetwork::has_edge(EdgeId e) const noexcept {
  return e.value < index_.size() && index_[e.value] >= 0;
}

const Edge& SumNetwork::edge(EdgeId e) const { return edges_[edge_index(e)]; }

std::size_t SumNetwork::edge_index(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "unknown edge id " + std::to_string(e.value));
  return static_cast<std::size_t>(index_[e.value]);
}

void SumNetwork::require_node(NodeId v) const {
  if (!has_node(v)) throw Error(ErrorCode::UnknownNode, "unknown node id " + std::to_string(v.value));
}

std::span<const EdgeId> SumNetwork::in_edges(NodeId v) const {
  require_node(v);
  return in_[v.value];
}

std::span<const EdgeId> SumNetwork::out_edges(NodeId v) const {
  require_node(v);
  return out_[v.value];
}

std::optional<std::size_t> SumNetwork::source_index(NodeId v) const {
  auto it = std::find(sources_.begin(), sources_.end(), v);
  if (it == sources_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sources_.begin());
}

std::optional<std::size_t> SumNetwork::terminal_index(NodeId v) const {
  auto it = std::find(terminals_.begin(), terminals_.end(), v);
  if (it == terminals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - terminals_.begin());
}

const std::string& SumNetwork::node_name(NodeId v) const {
  require_node(v);
  return node_names_[v.value];
}

std::optional<NodeId> SumNetwork::find_node(std::string_view name) const {
  auto it = node_lookup_.find(std::string(name));
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> SumNetwork::find_edge(std::string_view name) const {
  auto it = edge_lookup_.find(std::string(name));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

bool SumNetwork::reachable(NodeId from, NodeId to) const {
  require_node(from);
  require_node(to);
  return test_bit(descendants_[from.value], to.value);
}

bool SumNetwork::reaches_or_equal(NodeId from, NodeId to) const {
  return from == to ? (require_node(from), true) : reachable(from, to);
}

bool operator==(const SumNetwork& a, const SumNetwork& b) {
  if (a.node_names_ != b.node_names_ || a.sources_ != b.sources_ ||
      a.terminals_ != b.terminals_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.name != y.name) return false;
  }
  return true;
}

NodeId NetworkBuilder::add_node(std::string name) {
  NodeId id{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(name.empty() ? "v" + std::to_string(id.value) : std::move(name));
  return id;
}

NodeId NetworkBuilder::add_source(std::string name) {
  if (name.empty()) name = "s" + std::to_string(sources_.size() + 1);
  NodeId id = add_node(std::move(name));
  sources_.push_back(id);
  return id;
}

NodeId NetworkBuilder::add_terminal(std::string name) {
  if (name.empty()) name = "t" + std::to_string(terminals_.size() + 1);
  NodeId id = add_node(std::move(name));
  terminals_.push_back(id);
  return id;
}

EdgeId NetworkBuilder::add_edge(NodeId tail, NodeId head, std::string name) {
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edges_.push_back({id, tail, head, name.empty() ? "e" + std::to_string(id.value) : std::move(name)});
  return id;
}

SumNetwork NetworkBuilder::build() const {
  return SumNetwork::create(names_, edges_, sources_, terminals_);
}

std::vector<NodeId> topological_order(const SumNetwork& net) {
  auto order = net.topological_order();
  return {order.begin(), order.end()};
}

bool reachable(const SumNetwork& net, NodeId from, NodeId to) { return net.reachable(from, to); }

std::vector<NodeId> gamma(const SumNetwork& net, std::span<const NodeId> from,
                          std::span<const NodeId> to) {
  for (NodeId v : from) {
    if (!net.has_node(v)) throw Error(ErrorCode::UnknownNode, "unknown node in gamma");
  }
  for (NodeId v : to) {
    if (!net.has_node(v)) throw Error(ErrorCode::UnknownNode, "unknown node in gamma");
  }
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    NodeId v{i};
    bool ok = std::all_of(from.begin(), from.end(), [&](NodeId a) { return net.reachable(a, v); }) &&
              std::all_of(to.begin(), to.end(), [&](NodeId b) { return net.reachable(v, b); });
    if (ok) out.push_back(v);
  }
  return out;
}

namespace {

// Dinic-free Edmonds-Karp; graphs here have at most a few hundred arcs.
class FlowGraph {
 public:
  explicit FlowGraph(std::size_t n) : adj_(n) {}

  void add_arc(std::size_t u, std::size_t v, std::int64_t cap) {
    adj_[u].push_back(arcs_.size());
    arcs_.push_back({v, cap});
    adj_[v].push_back(arcs_.size());
    arcs_.push_back({u, 0});
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (true) {
      std::vector<std::int64_t> via(adj_.size(), -1);
      std::vector<char> seen(adj_.size(), 0);
      std::deque<std::size_t> queue{s};
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t a : adj_[u]) {
          if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = 1;
            via[arcs_[a].to] = static_cast<std::int64_t>(a);
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[t]) return flow;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        push = std::min(push, arcs_[via[v]].cap);
      }
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      flow += push;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t mincut(const SumNetwork& net, std::span<const NodeId> from,
                   std::span<const NodeId> to) {
  if (from.empty() || to.empty()) {
    throw Error(ErrorCode::InvalidArgument, "mincut needs nonempty node sets");
  }
  for (NodeId v : from) {
    if (!net.has_node(v)) throw Error(ErrorCode::UnknownNode, "unknown node in mincut");
    if (std::find(to.begin(), to.end(), v) != to.end()) {
      throw Error(ErrorCode::InvalidArgument, "mincut node sets must be disjoint");
    }
  }
  for (NodeId v : to) {
    if (!net.has_node(v)) throw Error(ErrorCode::UnknownNode, "unknown node in mincut");
  }
  const std::size_t n = net.node_count();
  const std::size_t super_source = n;
  const std::size_t super_sink = n + 1;
  const auto infinite = static_cast<std::int64_t>(net.edge_count() + 1);
  FlowGraph g(n + 2);
  for (const Edge& e : net.edges()) g.add_arc(e.tail.value, e.head.value, 1);
  for (NodeId v : from) g.add_arc(super_source, v.value, infinite);
  for (NodeId v : to) g.add_arc(v.value, super_sink, infinite);
  return static_cast<std::size_t>(g.max_flow(super_source, super_sink));
}

SumNetwork reverse(const SumNetwork& net) {
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  for (Edge& e : edges) std::swap(e.tail, e.head);
  return SumNetwork::create(net.node_names(), std::move(edges), net.terminals(), net.sources());
}

SumNetwork remove_edges(const SumNetwork& net, std::span<const EdgeId> edges) {
  std::vector<char> drop(net.edge_id_bound(), 0);
  for (EdgeId e : edges) {
    if (!net.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "cannot remove unknown edge " + std::to_string(e.value));
    drop[e.value] = 1;
  }
  std::vector<Edge> kept;
  for (const Edge& e : net.edges()) {
    if (!drop[e.id.value]) kept.push_back(e);
  }
  return SumNetwork::create(net.node_names(), std::move(kept), net.sources(), net.terminals());
}

namespace {

// Nodes reachable by >= 1 edge from any start node, skipping removed edges.
std::vector<char> forward_closure(const SumNetwork& net, std::span<const NodeId> starts,
                                  const std::vector<char>& removed) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> stack;
  auto expand = [&](NodeId u) {
    for (EdgeId eid : net.out_edges(u)) {
      if (removed[eid.value]) continue;
      NodeId h = net.edge(eid).head;
      if (!seen[h.value]) {
        seen[h.value] = 1;
        stack.push_back(h);
      }
    }
  };
  for (NodeId s : starts) expand(s);
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    expand(u);
  }
  return seen;
}

std::vector<char> removal_mask(const SumNetwork& net, std::span<const EdgeId> removed) {
  std::vector<char> mask(net.edge_id_bound(), 0);
  for (EdgeId e : removed) {
    if (!net.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "unknown edge id " + std::to_string(e.value));
    mask[e.value] = 1;
  }
  return mask;
}

}  // namespace

PairMatrix pair_connectivity(const SumNetwork& net, std::span<const EdgeId> removed) {
  const auto mask = removal_mask(net, removed);
  PairMatrix m(net.sources().size(), net.terminals().size());
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    NodeId s = net.sources()[i];
    auto seen = forward_closure(net, std::span<const NodeId>(&s, 1), mask);
    for (std::size_t j = 0; j < net.terminals().size(); ++j) {
      m.set(i, j, seen[net.terminals()[j].value] != 0);
    }
  }
  return m;
}

bool any_path(const SumNetwork& net, std::span<const NodeId> from, std::span<const NodeId> to,
              std::span<const EdgeId> removed) {
  const auto seen = forward_closure(net, from, removal_mask(net, removed));
  return std::any_of(to.begin(), to.end(), [&](NodeId v) { return seen[v.value] != 0; });
}

}  // namespace sumnet
