#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumnet/classifier.hpp"
#include "sumnet/gf.hpp"
#include "sumnet/multigraph.hpp"
#include "sumnet/netcode.hpp"

namespace sumnet {

struct SearchBudget {
  /// Cap on the number of candidate codes examined.
  std::uint64_t max_codes = 2'000'000;
  /// Allowed local coefficients; empty means the whole field (searched
  /// after the {0, +1, -1} subset).
  std::vector<Elem> coefficient_set;
  double time_limit_seconds = 120.0;
  /// Seeds the sampler used when a space is too large to enumerate.
  std::uint64_t seed = 1;
};

/// Result of a bounded search. `complete` means the whole candidate space
/// was covered, so an empty `code` is a proof of absence (relative to the
/// coefficients searched; see `exhaustive_over_field`).
template <typename Code>
struct SearchOutcome {
  std::optional<Code> code;
  bool complete = false;
  bool exhaustive_over_field = false;
  std::uint64_t examined = 0;
};

/// Scalar code search for any connected sum-network (not only 3s/3t).
/// Enumerates local coefficients edge by edge in field-element order and
/// solves for terminal decoders exactly, so decoders never enlarge the
/// space. Edges with exactly one input carry that input unchanged.
/// With `xor_only`, coefficients and decoders are drawn from {0, +1, -1}.
/// Every returned code has passed verify_transfer and verify_exhaustive.
SearchOutcome<ScalarLinearCode> search_scalar(const SumNetwork& net, const PrimeField& field,
                                              const SearchBudget& budget, bool xor_only);

struct FractionalSearchOptions {
  /// Skip candidates where some terminal sees fewer than k independent
  /// combinations before attempting the decoder solve.
  bool prune_by_rank = true;
  /// Carry single-input edges unchanged instead of enumerating their maps.
  bool normalize_single_inputs = true;
};

/// (k, n) code search. Exhaustive when the candidate space fits the budget,
/// otherwise seeded random sampling (never reported complete).
SearchOutcome<FractionalLinearCode> search_fractional(const SumNetwork& net, const PrimeField& field,
                                                      std::size_t k, std::size_t n,
                                                      const SearchBudget& budget,
                                                      const FractionalSearchOptions& options = {});

/// Edge list of a path; empty when start and end coincide.
using Path = std::vector<EdgeId>;

/// Paths used by the alpha/beta/gamma construction, in labeled terms.
struct PathSet {
  Path q1;  // s1 -> t1 avoiding e1
  Path q2;  // s2 -> t2 avoiding e2
  Path r1;  // s1 -> t2
  Path r2;  // s2 -> t1
  Path s1_to_e1;
  Path s3_to_e1;
  Path s2_to_e2;
  Path s3_to_e2;
  Path e1_to_t1;
  Path e1_to_t3;
  Path e2_to_t2;
  Path e2_to_t3;
};

/// Shortest path (fewest edges, then smallest edge-id sequence) avoiding
/// `avoid`; nullopt when none exists.
std::optional<Path> shortest_path(const SumNetwork& net, NodeId from, NodeId to,
                                  std::span<const EdgeId> avoid = {});

/// Throws NoValidPaths when a required path is missing.
PathSet find_theorem2_paths(const SumNetwork& net, const WitnessPair& witness);

/// Explicit code for a network with an except-F2 witness over any field but
/// GF(2): e1 carries x1 + alpha*x3, e2 carries x3 + beta*x2, and the paths
/// s1/s2 -> t1/t2 that avoid the witness deliver x2 + gamma*x1 to t1 and
/// t2. Throws InvalidWitness, InvalidAlpha or NoValidPaths.
ScalarLinearCode construct_theorem2(const SumNetwork& net, const WitnessPair& witness,
                                    const PrimeField& field, const FieldElement& alpha);

struct CutBound {
  bool admissible = false;         // 3k <= 2n
  std::uint64_t cut_symbols = 0;   // 2n: what e1 and e2 can carry together
  std::uint64_t message_symbols = 0;  // 3k: what t3 must tell apart
};

/// Counting bound for networks with a nonsolvable witness pair: t3 can recover
/// all three messages from the two witness edges, so 3k symbols must fit
/// into 2n. Throws InvalidWitness or InvalidArgument (k or n zero).
CutBound cut_bound_check(const SumNetwork& net, const WitnessPair& witness, std::size_t k,
                         std::size_t n);

}  // namespace sumnet
