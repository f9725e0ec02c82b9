#include <doctest.h>

#include "support.hpp"

using namespace sumnet;
using namespace testing;

TEST_CASE("labelings") {
  const auto& all = all_labelings();
  CHECK(all.size() == 36);
  CHECK(all.front() == Labeling{});
  CHECK(all[1].terminal_perm == std::array<std::uint8_t, 3>{0, 2, 1});
  CHECK(all[6].source_perm == std::array<std::uint8_t, 3>{0, 2, 1});
}

TEST_CASE("fixture classes") {
  CHECK(classify(fixture("bottleneck")).variant == Verdict::SolvableAllFields);
  CHECK(classify(fixture("disjoint9")).variant == Verdict::SolvableAllFields);

  const SumNetwork ns = fixture("nonsolvable_pair");
  const auto c = classify(ns);
  CHECK(c.variant == Verdict::Nonsolvable);
  CHECK(c.capacity.str() == "2/3");
  CHECK(c.decided_by == Decision::Theorem1Witness);
  REQUIRE(c.witness);
  CHECK(c.witness->e1 == edge(ns, "e1"));
  CHECK(c.witness->e2 == edge(ns, "e2"));
  CHECK(c.witness->labeling == Labeling{});

  const SumNetwork ex = fixture("except_f2_pair");
  const auto d = classify(ex);
  CHECK(d.variant == Verdict::SolvableExceptF2);
  CHECK(d.capacity.str() == ">=1");
  REQUIRE(d.witness);
  CHECK(check_theorem2(ex, d.witness->e1, d.witness->e2, d.witness->labeling));

  const auto n = classify(fixture("disconnected"));
  CHECK(n.variant == Verdict::NotConnected);
  CHECK(n.capacity.str() == "0");
  CHECK_FALSE(n.witness.has_value());
}

TEST_CASE("pair checks") {
  const SumNetwork ns = fixture("nonsolvable_pair");
  const EdgeId e1 = edge(ns, "e1"), e2 = edge(ns, "e2");
  CHECK(check_theorem1(ns, e1, e2, Labeling{}));
  CHECK_FALSE(check_theorem1(ns, e2, e1, Labeling{}));
  CHECK(check_theorem1(ns, e2, e1, Labeling{{1, 0, 2}, {1, 0, 2}}));
  CHECK_FALSE(check_theorem1(ns, e1, e1, Labeling{}));
  CHECK_FALSE(check_theorem2(ns, e1, e2, Labeling{}));

  const SumNetwork ex = fixture("except_f2_pair");
  CHECK(check_theorem2(ex, edge(ex, "e1"), edge(ex, "e2"), Labeling{}));
  CHECK_FALSE(check_theorem1(ex, edge(ex, "e1"), edge(ex, "e2"), Labeling{}));
}

TEST_CASE("non 3s/3t networks are refused") {
  NetworkBuilder b;
  NodeId s = b.add_source(), t = b.add_terminal();
  b.add_edge(s, t);
  try {
    classify(b.build());
    FAIL("expected NotThreeByThree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotThreeByThree);
  }
}

TEST_CASE("pair conditions agree with a reference implementation") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SumNetwork net = random_net(seed);
    for (const Edge& a : net.edges()) {
      for (const Edge& b : net.edges()) {
        for (const Labeling& lab : all_labelings()) {
          CHECK(check_theorem1(net, a.id, b.id, lab) == ref_nonsolvable_pair(net, a.id, b.id, lab));
        }
      }
    }
  }
}

TEST_CASE("adjacent witness edges count as leading into each other") {
  // head(e1) == tail(e2): with the zero-length convention the pair is
  // comparable, so it cannot witness anything.
  NetworkBuilder b;
  NodeId s1 = b.add_source("s1"), s2 = b.add_source("s2"), s3 = b.add_source("s3");
  NodeId t1 = b.add_terminal("t1"), t2 = b.add_terminal("t2"), t3 = b.add_terminal("t3");
  NodeId a = b.add_node("a"), m = b.add_node("m"), c = b.add_node("c");
  b.add_edge(s1, a);
  b.add_edge(s3, a);
  EdgeId e1 = b.add_edge(a, m, "w1");
  b.add_edge(s2, m);
  EdgeId e2 = b.add_edge(m, c, "w2");
  b.add_edge(c, t1);
  b.add_edge(c, t2);
  b.add_edge(c, t3);
  b.add_edge(s1, t2);
  b.add_edge(s2, t1);
  const SumNetwork net = b.build();
  for (const Labeling& lab : all_labelings()) {
    CHECK_FALSE(check_theorem1(net, e1, e2, lab));
    CHECK_FALSE(check_theorem2(net, e1, e2, lab));
  }
}

TEST_CASE("shortcuts never change the verdict") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const SumNetwork net = random_net(seed);
    const auto fast = classify(net);
    const auto full = classify(net, ClassifyOptions{false});
    CHECK(fast.variant == full.variant);
    const std::size_t k = kappa(net);
    if (k != 2 && k != 3) CHECK(fast.variant == Verdict::SolvableAllFields);
    if (find_hub_node(net)) CHECK(full.variant == Verdict::SolvableAllFields);
  }
}

TEST_CASE("classification is stable under reversal") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const SumNetwork net = random_net(seed);
    CHECK(classify(net).variant == classify(reverse(net)).variant);
  }
}

TEST_CASE("nonsolvable and except-F2 witnesses never coexist") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const SumNetwork net = random_net(seed);
    if (find_theorem1_witness(net)) CHECK_FALSE(find_theorem2_witness(net).has_value());
  }
}
