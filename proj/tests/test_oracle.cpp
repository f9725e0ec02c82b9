#include <doctest.h>

#include "sumnet/constructor.hpp"
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

TEST_CASE("slot caps") {
  CHECK(default_slot_cap(PrimeField(2)) == 14);
  CHECK(default_slot_cap(PrimeField(3)) == 10);
  CHECK(default_slot_cap(PrimeField(5)) == 6);
  CHECK(default_slot_cap(PrimeField(7)) == 5);
}

TEST_CASE("slot counting") {
  CHECK(coefficient_slots(fixture("disjoint9")) == 0);
  CHECK(coefficient_slots(fixture("disjoint9"), {false, std::nullopt}) == 9);
  CHECK(coefficient_slots(fixture("bottleneck")) == 3);
  CHECK(coefficient_slots(fixture("nonsolvable_pair")) == 4);
}

TEST_CASE("nine disjoint edges: the all-ones code") {
  const SumNetwork net = fixture("disjoint9");
  const auto code = brute_force_solvable(net, PrimeField(2));
  REQUIRE(code);
  for (const auto& [id, lc] : code->edges) CHECK(lc.from_source == Elem{1});
  for (const auto& d : code->decoders) CHECK(d == std::vector<Elem>{1, 1, 1});
}

TEST_CASE("witness fixtures") {
  const SumNetwork ns = fixture("nonsolvable_pair");
  for (std::uint32_t p : {2u, 3u, 5u}) CHECK_FALSE(brute_force_solvable(ns, PrimeField(p)).has_value());
  const SumNetwork ex = fixture("except_f2_pair");
  CHECK_FALSE(brute_force_solvable(ex, PrimeField(2)).has_value());
  const auto c = brute_force_solvable(ex, PrimeField(3));
  REQUIRE(c);
  CHECK(ref_solves(ex, *c));
  CHECK_FALSE(brute_force_solvable(fixture("disconnected"), PrimeField(3)).has_value());
}

TEST_CASE("oversized networks are refused") {
  const SumNetwork ns = fixture("nonsolvable_pair");
  OracleOptions tight;
  tight.max_slots = 3;
  CHECK(code_of([&] { brute_force_solvable(ns, PrimeField(2), tight); }) == ErrorCode::SearchSpaceTooLarge);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const SumNetwork net = random_net(seed);
    if (coefficient_slots(net) > 10) {
      CHECK(code_of([&] { brute_force_solvable(net, PrimeField(3)); }) == ErrorCode::SearchSpaceTooLarge);
      return;
    }
  }
  FAIL("no oversized network in the stream");
}

TEST_CASE("single-input normalization is harmless") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    g.node_budget = 7;
    g.edge_budget = 9;
    const SumNetwork net = generate_random(g);
    const OracleOptions raw{false, std::nullopt};
    const std::size_t slots = coefficient_slots(net, raw);
    if (slots > 13) continue;
    for (std::uint32_t p : {2u, 3u}) {
      if (p == 3 && slots > 10) continue;
      OracleOptions uncapped = raw;
      uncapped.max_slots = 13;
      CHECK(brute_force_solvable(net, PrimeField(p)).has_value() ==
            brute_force_solvable(net, PrimeField(p), uncapped).has_value());
    }
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("oracle and search pick the same least code over small fields") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const SumNetwork net = random_net(seed);
    if (coefficient_slots(net) > 10) continue;
    for (std::uint32_t p : {2u, 3u}) {
      const auto o = brute_force_solvable(net, PrimeField(p));
      const auto s = search_scalar(net, PrimeField(p), SearchBudget{}, false);
      REQUIRE(o.has_value() == s.code.has_value());
      if (o) CHECK(*o == *s.code);
    }
  }
}

TEST_CASE("binary solvability brings an XOR code over GF(3)") {
  int seen = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const SumNetwork net = random_net(seed);
    if (coefficient_slots(net) > 14) continue;
    if (!brute_force_solvable(net, PrimeField(2))) continue;
    ++seen;
    const auto x = search_scalar(net, PrimeField(3), SearchBudget{}, true);
    REQUIRE(x.code);
    CHECK(is_xor_code(*x.code));
  }
  CHECK(seen >= 20);
}

TEST_CASE("nonsolvable witnesses are unsolvable over GF(3)") {
  int seen = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const SumNetwork net = random_net(seed);
    if (!find_theorem1_witness(net) || coefficient_slots(net) > 10) continue;
    ++seen;
    CHECK_FALSE(brute_force_solvable(net, PrimeField(3)).has_value());
  }
  CHECK(seen >= 10);
}

TEST_CASE("generator") {
  GeneratorConfig g;
  g.seed = 42;
  CHECK(render_network(generate_random(g)) == render_network(generate_random(g)));
  g.seed = 43;
  const SumNetwork other = generate_random(g);
  g.seed = 42;
  CHECK(render_network(generate_random(g)) != render_network(other));

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SumNetwork net = random_net(seed);
    CHECK(net.is_three_by_three());
    CHECK(is_connected_sum_network(net));
    for (NodeId s : net.sources()) CHECK(net.in_edges(s).empty());
    for (NodeId t : net.terminals()) CHECK(net.out_edges(t).empty());
  }

  GeneratorConfig target;
  target.seed = 9;
  target.ensure_kappa = 2;
  CHECK(kappa(generate_random(target)) == 2);

  GeneratorConfig impossible;
  impossible.ensure_kappa = 10;
  impossible.max_attempts = 50;
  CHECK(code_of([&] { generate_random(impossible); }) == ErrorCode::GenerationFailed);

  GeneratorConfig small;
  small.node_budget = 5;
  CHECK(code_of([&] { generate_random(small); }) == ErrorCode::InvalidArgument);
  GeneratorConfig planted_small;
  planted_small.plant_cut_pair = true;
  CHECK(code_of([&] { generate_random(planted_small); }) == ErrorCode::InvalidArgument);
}
