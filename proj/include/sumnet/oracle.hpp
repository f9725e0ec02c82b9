#pragma once

#include <cstdint>
#include <optional>

#include "sumnet/gf.hpp"
#include "sumnet/multigraph.hpp"
#include "sumnet/netcode.hpp"

namespace sumnet {

struct OracleOptions {
  /// Edges with a single input carry it unchanged. Off, their coefficient
  /// is enumerated like any other (used to check the normalization).
  bool normalize_single_inputs = true;
  /// Overrides the per-field slot cap.
  std::optional<std::size_t> max_slots;
};

/// Default cap on enumerated coefficient slots: 14 over GF(2), 10 over
/// GF(3), and for larger p the most slots with p^slots <= 3^10.
std::size_t default_slot_cap(const PrimeField& field);

/// Local coefficients the oracle has to enumerate for `net`. Decoders are
/// solved, not enumerated, so they never count.
std::size_t coefficient_slots(const SumNetwork& net, const OracleOptions& options = {});

/// Exhaustive scalar linear code search: the lexicographically least code
/// (in slot order) whose terminals can all decode, or nullopt after every
/// assignment has been tried. Throws SearchSpaceTooLarge above the cap.
std::optional<ScalarLinearCode> brute_force_solvable(const SumNetwork& net, const PrimeField& field,
                                                     const OracleOptions& options = {});

struct GeneratorConfig {
  std::size_t node_budget = 9;
  std::size_t edge_budget = 12;
  std::uint64_t seed = 1;
  bool ensure_connected = true;
  std::optional<std::size_t> ensure_kappa;
  std::size_t max_attempts = 10'000;
  /// Start from a fixed two-bottleneck skeleton (randomly relabeled, with a
  /// few random edits) instead of uniform random edges, so networks whose
  /// class hinges on an edge pair come up often. Needs node_budget >= 10
  /// and edge_budget >= 12.
  bool plant_cut_pair = false;
};

/// Layered random 3s/3t DAG: sources, one or two internal layers, terminals.
/// Sources have no in-edges and terminals no out-edges. Same config, same
/// network. Throws GenerationFailed when no attempt meets the requirements
/// and InvalidArgument when the budgets cannot fit a connected network.
SumNetwork generate_random(const GeneratorConfig& config);

}  // namespace sumnet
