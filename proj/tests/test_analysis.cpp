#include <doctest.h>

#include "support.hpp"

using namespace sumnet;
using namespace testing;

TEST_CASE("bottleneck network has kappa 9 and a hub") {
  const SumNetwork net = fixture("bottleneck");
  CHECK(kappa(net) == 9);
  const auto a = analyze(net);
  CHECK(a.connected);
  CHECK(a.connectivity.count() == 9);
  const auto max = max_disconnecting_edges(net);
  // Every edge on the s -> u -> w -> t spine carries all nine pairs only in
  // the middle.
  CHECK(max == std::vector<EdgeId>{edge(net, "m")});
  CHECK(a.abc.at(edge(net, "m")) == kTagC);
  CHECK(find_hub_node(net) == node(net, "u"));
  CHECK(disconnect_set(net, edge(net, "a1")).pairs.size() == 3);
  CHECK(disconnect_set(net, edge(net, "b2")).pairs.size() == 3);
}

TEST_CASE("nine disjoint edges") {
  const SumNetwork net = fixture("disjoint9");
  CHECK(kappa(net) == 1);
  CHECK(max_disconnecting_edges(net).size() == 9);
  for (const auto& [e, tags] : classify_abc(net)) CHECK(tags == (kTagA | kTagB));
  CHECK_FALSE(find_hub_node(net).has_value());
  CHECK(is_connected_sum_network(net));
}

TEST_CASE("witness fixtures") {
  const SumNetwork ns = fixture("nonsolvable_pair");
  CHECK(kappa(ns) == 3);
  CHECK(disconnect_set(ns, edge(ns, "e1")).pairs ==
        std::vector<SourceTerminalPair>{{0, 0}, {0, 2}, {2, 0}});
  const SumNetwork ex = fixture("except_f2_pair");
  CHECK(kappa(ex) == 2);
  CHECK(disconnect_set(ex, edge(ex, "e1")).pairs == std::vector<SourceTerminalPair>{{0, 2}, {2, 0}});
  CHECK(disconnect_set(ex, edge(ex, "e2")).pairs == std::vector<SourceTerminalPair>{{1, 2}, {2, 1}});
}

TEST_CASE("disconnected network") {
  const SumNetwork net = fixture("disconnected");
  CHECK_FALSE(is_connected_sum_network(net));
  const auto a = analyze(net);
  CHECK_FALSE(a.connectivity.at(2, 2));
  // A pair that was never connected is never in a disconnect set.
  for (const auto& d : a.disconnect) {
    for (const auto& p : d.pairs) CHECK(p != SourceTerminalPair{2, 2});
  }
}

TEST_CASE("edgeless network") {
  NetworkBuilder b;
  for (int i = 0; i < 3; ++i) b.add_source();
  for (int i = 0; i < 3; ++i) b.add_terminal();
  const SumNetwork net = b.build();
  CHECK(kappa(net) == 0);
  CHECK(max_disconnecting_edges(net).empty());
  CHECK_FALSE(is_connected_sum_network(net));
}

TEST_CASE("disconnect sets agree with a reference sweep") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const SumNetwork net = random_net(seed, seed % 4 != 0);
    std::size_t best = 0;
    for (const Edge& e : net.edges()) {
      const auto expect = ref_disconnect(net, e.id);
      CHECK(disconnect_set(net, e.id).pairs == expect);
      best = std::max(best, expect.size());
    }
    CHECK(kappa(net) == best);
  }
}

TEST_CASE("generator honours a kappa target") {
  for (std::size_t target : {1u, 2u, 3u, 4u}) {
    GeneratorConfig g;
    g.seed = 3;
    g.ensure_kappa = target;
    const SumNetwork net = generate_random(g);
    std::size_t best = 0;
    for (const Edge& e : net.edges()) best = std::max(best, ref_disconnect(net, e.id).size());
    CHECK(best == target);
  }
}

TEST_CASE("hub node matches its definition") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const SumNetwork net = random_net(seed);
    std::optional<NodeId> expect;
    for (std::uint32_t v = 0; v < net.node_count() && !expect; ++v) {
      const NodeId x{v};
      std::size_t from = 0, to = 0;
      for (NodeId s : net.sources()) from += (s == x || ref_reach(net, s, x)) ? 1 : 0;
      for (NodeId t : net.terminals()) to += (t == x || ref_reach(net, x, t)) ? 1 : 0;
      if ((from == 3 && to >= 2) || (from >= 2 && to == 3)) expect = x;
    }
    CHECK(find_hub_node(net) == expect);
  }
}

TEST_CASE("role shortcuts") {
  NetworkBuilder b;
  NodeId s1 = b.add_source(), s2 = b.add_source(), s3 = b.add_source();
  NodeId t1 = b.add_terminal(), t2 = b.add_terminal(), t3 = b.add_terminal();
  b.add_edge(s1, t1);
  b.add_edge(s2, t2);
  b.add_edge(s3, t3);
  CHECK_FALSE(has_role_shortcut(b.build()));
  b.add_edge(s1, s2);
  CHECK(has_role_shortcut(b.build()));
}

TEST_CASE("augment_parallel adds fresh parallel edges") {
  const SumNetwork net = fixture("disjoint9");
  const EdgeId pick[] = {edge(net, "d11"), edge(net, "d23")};
  const SumNetwork aug = augment_parallel(net, pick);
  CHECK(aug.edge_count() == 11);
  const EdgeId fresh = *aug.find_edge("d11*");
  CHECK(fresh.value >= net.edge_id_bound());
  CHECK(aug.edge(fresh).tail == net.edge(pick[0]).tail);
  CHECK(aug.edge(fresh).head == net.edge(pick[0]).head);
  CHECK(disconnect_set(aug, pick[0]).pairs.empty());
  // Original ids survive.
  for (const Edge& e : net.edges()) CHECK(aug.edge(e.id).name == e.name);
}

TEST_CASE("kappa is invariant under reversal") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const SumNetwork net = random_net(seed);
    CHECK(kappa(net) == kappa(reverse(net)));
  }
}
