#include "sumnet/classifier.hpp"

#include <algorithm>

#include "sumnet/analysis.hpp"

namespace sumnet {

const std::vector<Labeling>& all_labelings() {
  static const std::vector<Labeling> labelings = [] {
    std::vector<Labeling> out;
    std::array<std::uint8_t, 3> s{0, 1, 2};
    do {
      std::array<std::uint8_t, 3> t{0, 1, 2};
      do {
        out.push_back({s, t});
      } while (std::next_permutation(t.begin(), t.end()));
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
  }();
  return labelings;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotConnected: return "NotConnected";
    case Verdict::Nonsolvable: return "Nonsolvable";
    case Verdict::SolvableExceptF2: return "SolvableExceptF2";
    case Verdict::SolvableAllFields: return "SolvableAllFields";
  }
  return "?";
}

const char* to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Disconnected: return "disconnected";
    case Decision::Theorem1Witness: return "theorem1-witness";
    case Decision::Theorem2Witness: return "theorem2-witness";
    case Decision::HubNode: return "hub-node";
    case Decision::RoleShortcut: return "source-or-terminal-path";
    case Decision::KappaOutsideTwoThree: return "kappa-not-2-or-3";
    case Decision::NoWitness: return "no-witness";
  }
  return "?";
}

std::string CapacityNote::str() const {
  std::string s = lower_bound ? ">=" : "";
  s += std::to_string(value.num);
  if (value.den != 1) s += "/" + std::to_string(value.den);
  return s;
}

namespace {

// 9-bit connectivity mask, bit 3*i+j for (source i, terminal j).
using Mask = std::uint16_t;

constexpr Mask bit(std::size_t i, std::size_t j) { return static_cast<Mask>(1U << (3 * i + j)); }

Mask to_mask(const PairMatrix& m) {
  Mask out = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (m.at(i, j)) out |= bit(i, j);
    }
  }
  return out;
}

Mask mask_without(const SumNetwork& net, std::initializer_list<EdgeId> removed) {
  std::vector<EdgeId> r(removed);
  return to_mask(pair_connectivity(net, r));
}

// e -> f: head(e) reaches tail(f) or coincides with it.
bool edge_reaches(const SumNetwork& net, EdgeId e, EdgeId f) {
  return net.reaches_or_equal(net.edge(e).head, net.edge(f).tail);
}

bool incomparable(const SumNetwork& net, EdgeId e1, EdgeId e2) {
  return !edge_reaches(net, e1, e2) && !edge_reaches(net, e2, e1);
}

void require_inputs(const SumNetwork& net, EdgeId e1, EdgeId e2) {
  if (!net.is_three_by_three()) {
    throw Error(ErrorCode::NotThreeByThree, "network must have 3 sources and 3 terminals");
  }
  if (!net.has_edge(e1) || !net.has_edge(e2)) throw Error(ErrorCode::UnknownEdge, "unknown witness edge");
}

bool theorem1_masks(Mask w1, Mask w2, Mask w12, const Labeling& lab) {
  const auto& s = lab.source_perm;
  const auto& t = lab.terminal_perm;
  return !(w1 & bit(s[0], t[2])) && !(w1 & bit(s[2], t[0])) && !(w2 & bit(s[1], t[2])) &&
         !(w2 & bit(s[1], t[1])) && !(w2 & bit(s[2], t[1])) && !(w12 & bit(s[2], t[2]));
}

bool theorem2_masks(Mask base, Mask w1, Mask w2, Mask w12, const Labeling& lab) {
  const auto& s = lab.source_perm;
  const auto& t = lab.terminal_perm;
  const Mask cut1 = base & static_cast<Mask>(~w1);
  const Mask cut2 = base & static_cast<Mask>(~w2);
  return cut1 == (bit(s[0], t[2]) | bit(s[2], t[0])) && cut2 == (bit(s[1], t[2]) | bit(s[2], t[1])) &&
         !(w12 & bit(s[2], t[2]));
}

// Shared scan for both theorems; masks of single-edge removals are computed
// once, pair removals once per unordered pair.
template <typename Accept>
std::optional<WitnessPair> scan(const SumNetwork& net, Accept accept) {
  if (!net.is_three_by_three()) {
    throw Error(ErrorCode::NotThreeByThree, "network must have 3 sources and 3 terminals");
  }
  const Mask base = to_mask(pair_connectivity(net));
  const auto edges = net.edges();
  std::vector<Mask> single(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) single[i] = mask_without(net, {edges[i].id});
  std::vector<std::vector<Mask>> both(edges.size(), std::vector<Mask>(edges.size(), 0));
  std::vector<std::vector<char>> known(edges.size(), std::vector<char>(edges.size(), 0));

  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (a == b) continue;
      const EdgeId e1 = edges[a].id;
      const EdgeId e2 = edges[b].id;
      if (!incomparable(net, e1, e2)) continue;
      if (!known[a][b]) {
        both[a][b] = both[b][a] = mask_without(net, {e1, e2});
        known[a][b] = known[b][a] = 1;
      }
      for (const Labeling& lab : all_labelings()) {
        if (accept(base, single[a], single[b], both[a][b], lab)) return WitnessPair{e1, e2, lab};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool check_theorem1(const SumNetwork& net, EdgeId e1, EdgeId e2, const Labeling& lab) {
  require_inputs(net, e1, e2);
  if (e1 == e2) return false;
  if (!incomparable(net, e1, e2)) return false;
  return theorem1_masks(mask_without(net, {e1}), mask_without(net, {e2}), mask_without(net, {e1, e2}),
                        lab);
}

bool check_theorem2(const SumNetwork& net, EdgeId e1, EdgeId e2, const Labeling& lab) {
  require_inputs(net, e1, e2);
  if (e1 == e2) return false;
  if (!incomparable(net, e1, e2)) return false;
  return theorem2_masks(to_mask(pair_connectivity(net)), mask_without(net, {e1}),
                        mask_without(net, {e2}), mask_without(net, {e1, e2}), lab);
}

std::optional<WitnessPair> find_theorem1_witness(const SumNetwork& net) {
  return scan(net, [](Mask, Mask w1, Mask w2, Mask w12, const Labeling& lab) {
    return theorem1_masks(w1, w2, w12, lab);
  });
}

std::optional<WitnessPair> find_theorem2_witness(const SumNetwork& net) {
  return scan(net, [](Mask base, Mask w1, Mask w2, Mask w12, const Labeling& lab) {
    return theorem2_masks(base, w1, w2, w12, lab);
  });
}

SolvabilityClass classify(const SumNetwork& net, const ClassifyOptions& options) {
  if (!net.is_three_by_three()) {
    throw Error(ErrorCode::NotThreeByThree, "network must have 3 sources and 3 terminals");
  }
  const CapacityNote at_least_one{{1, 1}, true};
  if (!is_connected_sum_network(net)) {
    return {Verdict::NotConnected, std::nullopt, {{0, 1}, false}, Decision::Disconnected};
  }
  if (options.use_shortcuts) {
    if (has_role_shortcut(net)) {
      return {Verdict::SolvableAllFields, std::nullopt, at_least_one, Decision::RoleShortcut};
    }
    if (find_hub_node(net)) {
      return {Verdict::SolvableAllFields, std::nullopt, at_least_one, Decision::HubNode};
    }
    const std::size_t k = kappa(net);
    if (k != 2 && k != 3) {
      return {Verdict::SolvableAllFields, std::nullopt, at_least_one, Decision::KappaOutsideTwoThree};
    }
  }
  if (auto w = find_theorem1_witness(net)) {
    return {Verdict::Nonsolvable, w, {{2, 3}, false}, Decision::Theorem1Witness};
  }
  if (auto w = find_theorem2_witness(net)) {
    return {Verdict::SolvableExceptF2, w, at_least_one, Decision::Theorem2Witness};
  }
  return {Verdict::SolvableAllFields, std::nullopt, at_least_one, Decision::NoWitness};
}

}  // namespace sumnet
