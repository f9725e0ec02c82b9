#include "sumnet/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sumnet/analysis.hpp"

namespace sumnet {

namespace {

std::size_t arity(const SumNetwork& net, const Edge& e) {
  return net.in_edges(e.tail).size() + (net.source_index(e.tail) ? 1 : 0);
}

bool enumerated(std::size_t a, const OracleOptions& options) {
  return options.normalize_single_inputs ? a >= 2 : a >= 1;
}

}  // namespace

std::size_t default_slot_cap(const PrimeField& field) {
  if (field.p() == 2) return 14;
  constexpr std::uint64_t kLimit = 59049;  // 3^10
  std::size_t slots = 0;
  for (std::uint64_t size = field.p(); size <= kLimit; size *= field.p()) ++slots;
  return slots;
}

std::size_t coefficient_slots(const SumNetwork& net, const OracleOptions& options) {
  std::size_t slots = 0;
  for (const Edge& e : net.edges()) {
    const std::size_t a = arity(net, e);
    if (enumerated(a, options)) slots += a;
  }
  return slots;
}

std::optional<ScalarLinearCode> brute_force_solvable(const SumNetwork& net, const PrimeField& field,
                                                     const OracleOptions& options) {
  const std::size_t slots = coefficient_slots(net, options);
  const std::size_t cap = options.max_slots.value_or(default_slot_cap(field));
  if (slots > cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(slots) + " coefficient slots exceed the cap of " + std::to_string(cap));
  }
  const std::size_t l = net.sources().size();
  const auto order = topological_order(net);
  std::vector<EdgeId> edges;
  for (NodeId v : order) {
    for (EdgeId e : net.out_edges(v)) edges.push_back(e);
  }

  std::vector<Elem> slot(slots, 0);
  std::map<EdgeId, std::vector<Elem>> carried;
  while (true) {
    // Evaluate the candidate symbolically: each edge as a vector over sources.
    ScalarLinearCode code = ScalarLinearCode::zero(net, field);
    std::size_t next = 0;
    for (EdgeId id : edges) {
      const Edge& e = net.edge(id);
      const auto ins = net.in_edges(e.tail);
      const auto src = net.source_index(e.tail);
      LocalCoding& lc = code.edges.at(id);
      const std::size_t a = arity(net, e);
      if (enumerated(a, options)) {
        for (Elem& c : lc.from_edges) c = slot[next++];
        if (src) lc.from_source = slot[next++];
      } else if (a == 1) {
        if (src) lc.from_source = 1;
        else lc.from_edges[0] = 1;
      }
      std::vector<Elem> v(l, 0);
      for (std::size_t i = 0; i < ins.size(); ++i) {
        for (std::size_t s = 0; s < l; ++s) v[s] = field.add(v[s], field.mul(lc.from_edges[i], carried[ins[i]][s]));
      }
      if (src) v[*src] = field.add(v[*src], *lc.from_source);
      carried[id] = std::move(v);
    }
    bool ok = true;
    for (std::size_t t = 0; t < net.terminals().size() && ok; ++t) {
      const auto ins = net.in_edges(net.terminals()[t]);
      Matrix a(ins.size(), l);
      for (std::size_t r = 0; r < ins.size(); ++r) {
        for (std::size_t s = 0; s < l; ++s) a.at(r, s) = carried[ins[r]][s];
      }
      Matrix ones(1, l);
      std::fill(ones.data.begin(), ones.data.end(), 1);
      auto x = ins.empty() ? std::nullopt : solve_left(field, a, ones);
      if (!x) ok = false;
      else code.decoders[t] = x->data;
    }
    if (ok) return code;

    std::size_t pos = slots;
    while (pos > 0 && slot[pos - 1] == field.p() - 1) slot[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++slot[pos - 1];
  }
}

SumNetwork generate_random(const GeneratorConfig& config) {
  if (config.node_budget < 6 || config.edge_budget < 6) {
    throw Error(ErrorCode::InvalidArgument, "budgets too small for a connected 3s/3t network");
  }
  if (config.plant_cut_pair && (config.node_budget < 10 || config.edge_budget < 12)) {
    throw Error(ErrorCode::InvalidArgument, "a planted cut pair needs 10 nodes and 12 edges");
  }
  if (config.node_budget == 6 && config.edge_budget < 9) {
    throw Error(ErrorCode::InvalidArgument, "six nodes need at least nine edges to connect every pair");
  }
  std::mt19937_64 rng(config.seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    const bool planted = config.plant_cut_pair;
    const std::size_t internal =
        planted ? 4 : uniform(config.node_budget == 6 ? 0 : 1, config.node_budget - 6);
    const std::size_t layers = planted ? 2 : internal >= 2 ? uniform(1, 2) : (internal == 1 ? 1 : 0);
    // layer_of[v]: 0 sources, 1..layers internal, layers+1 terminals.
    std::vector<std::size_t> layer_of;
    for (int i = 0; i < 3; ++i) layer_of.push_back(0);
    for (std::size_t i = 0; i < internal; ++i) {
      layer_of.push_back(planted ? 1 + i / 2 : layers == 2 ? uniform(1, 2) : 1);
    }
    for (int i = 0; i < 3; ++i) layer_of.push_back(layers + 1);
    const std::size_t n = layer_of.size();
    const std::size_t terminal_layer = layers + 1;

    auto pick_tail_for = [&](std::size_t head) {
      std::vector<std::size_t> c;
      for (std::size_t v = 0; v < n; ++v) {
        if (layer_of[v] < layer_of[head]) c.push_back(v);
      }
      return c[uniform(0, c.size() - 1)];
    };
    auto pick_head_for = [&](std::size_t tail) {
      std::vector<std::size_t> c;
      for (std::size_t v = 0; v < n; ++v) {
        if (layer_of[v] > layer_of[tail]) c.push_back(v);
      }
      return c[uniform(0, c.size() - 1)];
    };

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    if (planted) {
      // A two-bottleneck skeleton under a random relabeling, then a few
      // random changes that may or may not spoil it.
      std::vector<std::size_t> src{0, 1, 2}, dst{n - 3, n - 2, n - 1};
      std::shuffle(src.begin(), src.end(), rng);
      std::shuffle(dst.begin(), dst.end(), rng);
      arcs = {{3, 5}, {4, 6},                                    // middle edges
              {src[0], 3}, {src[2], 3}, {src[1], 4}, {src[2], 4},  // into them
              {5, dst[0]}, {5, dst[2]}, {6, dst[1]}, {6, dst[2]},  // out of them
              {src[0], dst[1]}, {src[1], dst[0]}};
      if (uniform(0, 1) == 0) {
        arcs.emplace_back(src[0], dst[0]);
        arcs.emplace_back(src[1], dst[1]);
      }
      if (uniform(0, 3) == 0) arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(uniform(2, arcs.size() - 1)));
      for (std::size_t extra = uniform(0, 2); extra > 0 && arcs.size() < config.edge_budget; --extra) {
        std::size_t tail = uniform(0, n - 1);
        while (layer_of[tail] == terminal_layer) tail = uniform(0, n - 1);
        arcs.emplace_back(tail, pick_head_for(tail));
      }
      while (arcs.size() > config.edge_budget) arcs.pop_back();
    } else {
      for (std::size_t s = 0; s < 3; ++s) arcs.emplace_back(s, pick_head_for(s));
      for (std::size_t t = n - 3; t < n; ++t) arcs.emplace_back(pick_tail_for(t), t);
    }
    const std::size_t total =
        planted ? arcs.size() : uniform(std::min<std::size_t>(7, config.edge_budget), config.edge_budget);
    while (arcs.size() < total) {
      std::size_t tail = uniform(0, n - 1);
      while (layer_of[tail] == terminal_layer) tail = uniform(0, n - 1);
      arcs.emplace_back(tail, pick_head_for(tail));
    }

    // Drop internal nodes that ended up isolated, then name everything.
    std::vector<char> used(n, 0);
    for (auto [a, b] : arcs) used[a] = used[b] = 1;
    std::vector<std::size_t> remap(n, 0);
    std::vector<std::string> names;
    std::size_t internal_seen = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const bool is_internal = layer_of[v] != 0 && layer_of[v] != terminal_layer;
      if (is_internal && !used[v]) continue;
      remap[v] = names.size();
      if (layer_of[v] == 0) names.push_back("s" + std::to_string(v + 1));
      else if (layer_of[v] == terminal_layer) names.push_back("t" + std::to_string(v - (n - 3) + 1));
      else names.push_back("v" + std::to_string(++internal_seen));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      edges.push_back(Edge{EdgeId{static_cast<std::uint32_t>(i)}, NodeId{static_cast<std::uint32_t>(remap[arcs[i].first])},
                           NodeId{static_cast<std::uint32_t>(remap[arcs[i].second])}, "e" + std::to_string(i + 1)});
    }
    std::vector<NodeId> sources, terminals;
    for (std::size_t v = 0; v < 3; ++v) sources.push_back(NodeId{static_cast<std::uint32_t>(remap[v])});
    for (std::size_t v = n - 3; v < n; ++v) terminals.push_back(NodeId{static_cast<std::uint32_t>(remap[v])});
    SumNetwork net = SumNetwork::create(std::move(names), std::move(edges), sources, terminals);

    if (config.ensure_connected && !is_connected_sum_network(net)) continue;
    if (config.ensure_kappa && kappa(net) != *config.ensure_kappa) continue;
    return net;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no network met the requirements after " + std::to_string(config.max_attempts) + " attempts");
}

}  // namespace sumnet
