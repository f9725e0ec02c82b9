#include <doctest.h>

#include "support.hpp"

using namespace sumnet;
using namespace testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("builder assigns ids and default names") {
  NetworkBuilder b;
  NodeId s = b.add_source();
  NodeId v = b.add_node("mid");
  NodeId t = b.add_terminal();
  EdgeId e0 = b.add_edge(s, v);
  EdgeId e1 = b.add_edge(v, t, "out");
  EdgeId e2 = b.add_edge(v, t);
  SumNetwork net = b.build();
  CHECK(net.node_count() == 3);
  CHECK(net.edge_count() == 3);
  CHECK(e0.value == 0);
  CHECK(e2.value == 2);
  CHECK(net.edge(e1).name == "out");
  CHECK(net.node_name(v) == "mid");
  CHECK(net.find_edge("out") == e1);
  CHECK(net.in_edges(t).size() == 2);
  CHECK(net.source_index(s) == 0u);
  CHECK(net.terminal_index(t) == 0u);
  CHECK_FALSE(net.source_index(v).has_value());
}

TEST_CASE("validation rejects malformed networks") {
  SUBCASE("cycle") {
    NetworkBuilder b;
    NodeId s = b.add_source(), u = b.add_node(), w = b.add_node(), t = b.add_terminal();
    b.add_edge(s, u);
    b.add_edge(u, w);
    b.add_edge(w, u);
    b.add_edge(w, t);
    CHECK(code_of([&] { b.build(); }) == ErrorCode::CycleDetected);
  }
  SUBCASE("self loop") {
    NetworkBuilder b;
    NodeId s = b.add_source();
    b.add_edge(s, s);
    CHECK(code_of([&] { b.build(); }) == ErrorCode::CycleDetected);
  }
  SUBCASE("duplicate names") {
    NetworkBuilder b;
    b.add_source("x");
    b.add_terminal("x");
    CHECK(code_of([&] { b.build(); }) == ErrorCode::ValidationError);
  }
  SUBCASE("node both source and terminal") {
    CHECK(code_of([&] { SumNetwork::create({"a"}, {}, {NodeId{0}}, {NodeId{0}}); }) == ErrorCode::ValidationError);
  }
  SUBCASE("edge to an unknown node") {
    CHECK(code_of([&] {
            SumNetwork::create({"a", "b"}, {Edge{EdgeId{0}, NodeId{0}, NodeId{7}, "e"}}, {NodeId{0}}, {NodeId{1}});
          }) == ErrorCode::ValidationError);
  }
}

TEST_CASE("parallel edges keep separate identities") {
  NetworkBuilder b;
  NodeId s = b.add_source(), t = b.add_terminal();
  EdgeId a = b.add_edge(s, t), c = b.add_edge(s, t);
  SumNetwork net = b.build();
  CHECK(a != c);
  const NodeId ss[] = {s}, tt[] = {t};
  CHECK(mincut(net, ss, tt) == 2);
  const EdgeId one[] = {a};
  CHECK(mincut(remove_edges(net, one), ss, tt) == 1);
}

TEST_CASE("reachability needs at least one edge") {
  const SumNetwork net = fixture("bottleneck");
  const NodeId s1 = node(net, "s1"), u = node(net, "u"), t3 = node(net, "t3");
  CHECK(net.reachable(s1, t3));
  CHECK_FALSE(net.reachable(t3, s1));
  CHECK_FALSE(net.reachable(u, u));
  CHECK(net.reaches_or_equal(u, u));
  CHECK(reachable(net, s1, u));
}

TEST_CASE("topological order respects every edge") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SumNetwork net = random_net(seed);
    const auto order = topological_order(net);
    std::vector<std::size_t> pos(net.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].value] = i;
    CHECK(order.size() == net.node_count());
    for (const Edge& e : net.edges()) CHECK(pos[e.tail.value] < pos[e.head.value]);
  }
}

TEST_CASE("reachability agrees with a plain DFS") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SumNetwork net = random_net(seed, seed % 3 == 0);
    for (std::uint32_t a = 0; a < net.node_count(); ++a) {
      for (std::uint32_t b = 0; b < net.node_count(); ++b) {
        CHECK(net.reachable(NodeId{a}, NodeId{b}) == ref_reach(net, NodeId{a}, NodeId{b}));
      }
    }
  }
}

TEST_CASE("gamma sets") {
  const SumNetwork net = fixture("bottleneck");
  const auto& S = net.sources();
  const auto& T = net.terminals();
  const auto g = gamma(net, S, T);
  CHECK(g == std::vector<NodeId>{node(net, "u"), node(net, "w")});

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const SumNetwork r = random_net(seed);
    const std::vector<NodeId> from{r.sources()[0], r.sources()[2]};
    const std::vector<NodeId> to{r.terminals()[1]};
    std::vector<NodeId> expect;
    for (std::uint32_t v = 0; v < r.node_count(); ++v) {
      bool ok = true;
      for (NodeId a : from) ok = ok && ref_reach(r, a, NodeId{v});
      for (NodeId b : to) ok = ok && ref_reach(r, NodeId{v}, b);
      if (ok) expect.push_back(NodeId{v});
    }
    CHECK(gamma(r, from, to) == expect);
  }
}

TEST_CASE("mincut edge cases") {
  const SumNetwork net = fixture("bottleneck");
  const NodeId s[] = {node(net, "s1")};
  const NodeId t[] = {node(net, "t1")};
  CHECK(mincut(net, s, t) == 1);
  CHECK(mincut(net, net.sources(), net.terminals()) == 1);
  const NodeId t3[] = {node(net, "t3")};
  CHECK(mincut(net, t3, s) == 0);
  CHECK(code_of([&] { mincut(net, {}, t); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { mincut(net, s, s); }) == ErrorCode::InvalidArgument);

  const SumNetwork nine = fixture("disjoint9");
  CHECK(mincut(nine, nine.sources(), nine.terminals()) == 9);
}

TEST_CASE("mincut matches brute-force cuts and disjoint paths") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    g.edge_budget = 10;
    g.node_budget = 8;
    const SumNetwork net = generate_random(g);
    for (std::uint32_t a = 0; a < net.node_count(); ++a) {
      for (std::uint32_t b = 0; b < net.node_count(); ++b) {
        if (a == b) continue;
        const std::vector<NodeId> from{NodeId{a}}, to{NodeId{b}};
        const std::size_t m = mincut(net, from, to);
        CHECK(m == ref_disjoint_paths(net, from, to));
        CHECK(m == ref_mincut(net, from, to));
      }
    }
  }
}

TEST_CASE("reverse swaps roles and directions") {
  const SumNetwork net = fixture("nonsolvable_pair");
  const SumNetwork rev = reverse(net);
  CHECK(rev.sources() == net.terminals());
  CHECK(rev.terminals() == net.sources());
  for (const Edge& e : net.edges()) {
    CHECK(rev.edge(e.id).tail == e.head);
    CHECK(rev.edge(e.id).head == e.tail);
    CHECK(rev.edge(e.id).name == e.name);
  }
  CHECK(reverse(rev) == net);
}

TEST_CASE("remove_edges") {
  const SumNetwork net = fixture("bottleneck");
  const EdgeId m[] = {edge(net, "m")};
  const SumNetwork cut = remove_edges(net, m);
  CHECK(cut.edge_count() == net.edge_count() - 1);
  CHECK_FALSE(cut.has_edge(m[0]));
  CHECK(cut.has_edge(edge(net, "b3")));
  CHECK(cut.edge(edge(net, "b3")).name == "b3");
  CHECK_FALSE(cut.reachable(node(net, "s1"), node(net, "t1")));
  const EdgeId bogus[] = {EdgeId{99}};
  CHECK(code_of([&] { remove_edges(net, bogus); }) == ErrorCode::UnknownEdge);
}
