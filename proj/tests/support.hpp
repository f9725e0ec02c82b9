// Fixtures and independent reference computations shared by the tests.
// Nothing here calls the library's graph algorithms.
#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sumnet/analysis.hpp"
#include "sumnet/classifier.hpp"
#include "sumnet/io.hpp"
#include "sumnet/multigraph.hpp"
#include "sumnet/netcode.hpp"
#include "sumnet/oracle.hpp"

namespace testing {

using namespace sumnet;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(SUMNET_TEST_DATA) + "/" + name; }

inline SumNetwork fixture(const std::string& name) { return parse_network(read_text(fixture_path(name + ".net"))); }

inline EdgeId edge(const SumNetwork& net, const std::string& name) { return *net.find_edge(name); }
inline NodeId node(const SumNetwork& net, const std::string& name) { return *net.find_node(name); }

/// Mixed stream of random networks: plain layered ones and ones grown
/// from a two-bottleneck skeleton.
inline SumNetwork random_net(std::uint64_t seed, bool connected = true) {
  GeneratorConfig g;
  g.seed = seed;
  g.ensure_connected = connected;
  if (seed % 2 == 1) {
    g.plant_cut_pair = true;
    g.node_budget = 10;
    g.edge_budget = 16;
  }
  return generate_random(g);
}

// --- reference graph computations -------------------------------------------

/// Plain DFS over the edge list. Paths need at least one edge.
inline bool ref_reach(const SumNetwork& net, NodeId from, NodeId to, const std::set<EdgeId>& removed = {}) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> stack;
  for (const Edge& e : net.edges()) {
    if (e.tail == from && !removed.count(e.id) && !seen[e.head.value]) {
      seen[e.head.value] = 1;
      stack.push_back(e.head);
    }
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const Edge& e : net.edges()) {
      if (e.tail == v && !removed.count(e.id) && !seen[e.head.value]) {
        seen[e.head.value] = 1;
        stack.push_back(e.head);
      }
    }
  }
  return seen[to.value] != 0;
}

inline bool ref_reach_any(const SumNetwork& net, const std::vector<NodeId>& from, const std::vector<NodeId>& to,
                          const std::set<EdgeId>& removed) {
  for (NodeId a : from) {
    for (NodeId b : to) {
      if (ref_reach(net, a, b, removed)) return true;
    }
  }
  return false;
}

/// Smallest edge set separating `from` from `to`, by trying subsets in
/// increasing size.
inline std::size_t ref_mincut(const SumNetwork& net, const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
  std::vector<EdgeId> ids;
  for (const Edge& e : net.edges()) ids.push_back(e.id);
  for (std::size_t k = 0; k <= ids.size(); ++k) {
    std::vector<char> pick(ids.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      std::set<EdgeId> removed;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (pick[i]) removed.insert(ids[i]);
      }
      if (!ref_reach_any(net, from, to, removed)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return ids.size();
}

/// Edge-disjoint path count by repeated DFS augmentation in the residual
/// graph (edges used forward can be cancelled backward).
inline std::size_t ref_disjoint_paths(const SumNetwork& net, const std::vector<NodeId>& from,
                                      const std::vector<NodeId>& to) {
  const auto edges = net.edges();
  std::vector<int> flow(edges.size(), 0);
  std::set<std::uint32_t> sinks;
  for (NodeId t : to) sinks.insert(t.value);
  std::size_t paths = 0;
  while (true) {
    std::vector<int> via(net.node_count(), -2);  // -1: start node
    std::vector<int> dir(net.node_count(), 0);
    std::vector<NodeId> stack;
    for (NodeId s : from) {
      if (via[s.value] == -2) {
        via[s.value] = -1;
        stack.push_back(s);
      }
    }
    std::optional<NodeId> hit;
    while (!stack.empty() && !hit) {
      NodeId v = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        NodeId next{};
        int d = 0;
        if (e.tail == v && flow[i] == 0) {
          next = e.head;
          d = 1;
        } else if (e.head == v && flow[i] == 1) {
          next = e.tail;
          d = -1;
        } else {
          continue;
        }
        if (via[next.value] != -2) continue;
        via[next.value] = static_cast<int>(i);
        dir[next.value] = d;
        if (sinks.count(next.value)) {
          hit = next;
          break;
        }
        stack.push_back(next);
      }
    }
    if (!hit) return paths;
    for (NodeId v = *hit; via[v.value] >= 0;) {
      const auto i = static_cast<std::size_t>(via[v.value]);
      if (dir[v.value] == 1) {
        flow[i] = 1;
        v = edges[i].tail;
      } else {
        flow[i] = 0;
        v = edges[i].head;
      }
    }
    ++paths;
  }
}

inline std::vector<SourceTerminalPair> ref_disconnect(const SumNetwork& net, EdgeId e) {
  std::vector<SourceTerminalPair> out;
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    for (std::size_t j = 0; j < net.terminals().size(); ++j) {
      const NodeId s = net.sources()[i], t = net.terminals()[j];
      if (ref_reach(net, s, t) && !ref_reach(net, s, t, {e})) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Condition list for the nonsolvable pair, spelled out with reference
/// reachability. Mutual unreachability treats head(e) == tail(f) as e -> f.
inline bool ref_nonsolvable_pair(const SumNetwork& net, EdgeId e1, EdgeId e2, const Labeling& lab) {
  if (e1 == e2) return false;
  auto s = [&](int i) { return net.sources()[lab.source_perm[static_cast<std::size_t>(i)]]; };
  auto t = [&](int i) { return net.terminals()[lab.terminal_perm[static_cast<std::size_t>(i)]]; };
  auto leads = [&](EdgeId a, EdgeId b) {
    const NodeId h = net.edge(a).head, tl = net.edge(b).tail;
    return h == tl || ref_reach(net, h, tl);
  };
  return !ref_reach(net, s(0), t(2), {e1}) && !ref_reach(net, s(2), t(0), {e1}) &&
         !ref_reach(net, s(1), t(2), {e2}) && !ref_reach(net, s(1), t(1), {e2}) &&
         !ref_reach(net, s(2), t(1), {e2}) && !ref_reach(net, s(2), t(2), {e1, e2}) && !leads(e1, e2) &&
         !leads(e2, e1);
}

// --- codes ---------------------------------------------------------------------

inline ScalarLinearCode random_code(const SumNetwork& net, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f.p() - 1);
  ScalarLinearCode code = ScalarLinearCode::zero(net, f);
  for (auto& [id, lc] : code.edges) {
    for (Elem& c : lc.from_edges) c = pick(rng);
    if (lc.from_source) lc.from_source = pick(rng);
  }
  for (auto& d : code.decoders) {
    for (Elem& c : d) c = pick(rng);
  }
  return code;
}

/// Runs the code on one tuple with a plain recursive evaluator.
inline std::vector<Elem> ref_outputs(const SumNetwork& net, const ScalarLinearCode& code, const std::vector<Elem>& x) {
  const PrimeField& f = code.field;
  std::map<EdgeId, Elem> memo;
  std::function<Elem(EdgeId)> symbol = [&](EdgeId id) -> Elem {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const Edge& e = net.edge(id);
    const LocalCoding& lc = code.edges.at(id);
    Elem v = 0;
    const auto ins = net.in_edges(e.tail);
    for (std::size_t i = 0; i < ins.size(); ++i) v = f.add(v, f.mul(lc.from_edges[i], symbol(ins[i])));
    if (auto s = net.source_index(e.tail)) v = f.add(v, f.mul(*lc.from_source, x[*s]));
    return memo[id] = v;
  };
  std::vector<Elem> out;
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    const auto ins = net.in_edges(net.terminals()[j]);
    Elem v = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) v = f.add(v, f.mul(code.decoders[j][i], symbol(ins[i])));
    out.push_back(v);
  }
  return out;
}

inline bool ref_solves(const SumNetwork& net, const ScalarLinearCode& code) {
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  std::vector<Elem> x(l, 0);
  while (true) {
    Elem sum = 0;
    for (Elem v : x) sum = f.add(sum, v);
    for (Elem out : ref_outputs(net, code, x)) {
      if (out != sum) return false;
    }
    std::size_t i = 0;
    while (i < l && ++x[i] == f.p()) x[i++] = 0;
    if (i == l) return true;
  }
}

}  // namespace testing
