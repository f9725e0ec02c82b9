#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumnet/multigraph.hpp"

namespace sumnet {

/// Relabeling of a 3s/3t network: labeled source k is
/// net.sources()[source_perm[k]], likewise for terminals.
struct Labeling {
  std::array<std::uint8_t, 3> source_perm{0, 1, 2};
  std::array<std::uint8_t, 3> terminal_perm{0, 1, 2};

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// All 36 labelings, source permutation major, each in lexicographic order.
const std::vector<Labeling>& all_labelings();

struct WitnessPair {
  EdgeId e1;
  EdgeId e2;
  Labeling labeling;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

enum class Verdict { NotConnected, Nonsolvable, SolvableExceptF2, SolvableAllFields };

const char* to_string(Verdict v) noexcept;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Capacity as reported: exact for 0 and 2/3, a lower bound (">= 1") for
/// solvable networks.
struct CapacityNote {
  Rational value;
  bool lower_bound = false;

  std::string str() const;
};

/// Which rule settled the verdict.
enum class Decision {
  Disconnected,
  Theorem1Witness,
  Theorem2Witness,
  HubNode,
  RoleShortcut,
  KappaOutsideTwoThree,
  NoWitness,
};

const char* to_string(Decision d) noexcept;

struct SolvabilityClass {
  Verdict variant = Verdict::NotConnected;
  std::optional<WitnessPair> witness;
  CapacityNote capacity;
  Decision decided_by = Decision::Disconnected;
};

/// Nonsolvable-pair conditions under the labeling:
///  (1) s1 -/-> t3 without e1     (2) s3 -/-> t1 without e1
///  (3) s2 -/-> t3 without e2     (4) {s2,s3} -/-> t2 without e2
///  (5) s3 -/-> t3 without e1,e2  (6) e1 -/-> e2 and e2 -/-> e1
/// e -> f means head(e) reaches or equals tail(f).
bool check_theorem1(const SumNetwork& net, EdgeId e1, EdgeId e2, const Labeling& lab);

/// Except-F2 pair conditions: e1 disconnects exactly {(s1,t3),(s3,t1)}, e2
/// disconnects exactly {(s2,t3),(s3,t2)}, removing both cuts (s3,t3), and
/// the edges are mutually unreachable as above.
bool check_theorem2(const SumNetwork& net, EdgeId e1, EdgeId e2, const Labeling& lab);

/// Exhaustive scans over ordered edge pairs (ascending ids) x labelings;
/// the first hit wins.
std::optional<WitnessPair> find_theorem1_witness(const SumNetwork& net);
std::optional<WitnessPair> find_theorem2_witness(const SumNetwork& net);

struct ClassifyOptions {
  /// Settle solvable networks early through the hub-node, source/terminal
  /// path and kappa shortcuts. Disabled, every connected network goes
  /// through the full pair search.
  bool use_shortcuts = true;
};

/// Requires 3 sources and 3 terminals (NotThreeByThree otherwise).
SolvabilityClass classify(const SumNetwork& net, const ClassifyOptions& options = {});

}  // namespace sumnet
