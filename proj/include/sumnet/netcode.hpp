#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sumnet/gf.hpp"
#include "sumnet/matrix.hpp"
#include "sumnet/multigraph.hpp"

namespace sumnet {

/// Local coding coefficients of one edge. The inputs of an edge are the
/// in-edges of its tail (ascending edge id) and, when the tail is a source,
/// that source's own symbol.
struct LocalCoding {
  std::vector<Elem> from_edges;
  std::optional<Elem> from_source;

  friend bool operator==(const LocalCoding&, const LocalCoding&) = default;
};

struct ScalarLinearCode {
  PrimeField field{2};
  std::map<EdgeId, LocalCoding> edges;
  /// Per terminal index, one coefficient per in-edge of the terminal.
  std::vector<std::vector<Elem>> decoders;

  /// All-zero code with the right shape for `net`.
  static ScalarLinearCode zero(const SumNetwork& net, const PrimeField& field);

  friend bool operator==(const ScalarLinearCode&, const ScalarLinearCode&) = default;
};

/// Coefficient of each source symbol carried by an edge (or decoded by a
/// terminal), indexed like net.sources().
using TransferVector = std::vector<Elem>;

struct Evaluation {
  std::map<EdgeId, Elem> edge_symbols;
  std::vector<Elem> terminal_outputs;
};

/// Throws CodeShapeMismatch unless every edge and terminal of `net` has a
/// map of the right arity and all values are canonical field elements.
void check_shape(const SumNetwork& net, const ScalarLinearCode& code);

/// One use of the network on the given source symbols (one per source).
Evaluation evaluate(const SumNetwork& net, const ScalarLinearCode& code,
                    std::span<const FieldElement> inputs);

std::map<EdgeId, TransferVector> transfer_vectors(const SumNetwork& net,
                                                  const ScalarLinearCode& code);
/// What each terminal's decoder computes, as a combination of the sources.
std::vector<TransferVector> decoded_vectors(const SumNetwork& net, const ScalarLinearCode& code);

/// Tries all |F|^l source tuples; each terminal must output their sum.
bool verify_exhaustive(const SumNetwork& net, const ScalarLinearCode& code);
/// First source tuple (lexicographic) on which some terminal is wrong.
std::optional<std::vector<Elem>> find_counterexample(const SumNetwork& net,
                                                     const ScalarLinearCode& code);
/// Every terminal decodes the all-ones combination.
bool verify_transfer(const SumNetwork& net, const ScalarLinearCode& code);

/// Every coefficient is 0, +1 or -1: nodes only add, subtract or ignore
/// their inputs.
bool is_xor_code(const ScalarLinearCode& code);

/// A code for reverse(net), obtained by transposing the local coding
/// kernel: the coefficient from edge f into edge e becomes the coefficient
/// from reversed e into reversed f, decoders become source injections and
/// vice versa. Throws InputCodeInvalid unless `code` solves `net`.
ScalarLinearCode reverse_code(const SumNetwork& net, const ScalarLinearCode& code);

// --- (k, n) fractional codes ---------------------------------------------

struct FractionalLocalCoding {
  std::vector<Matrix> from_edges;     // n x n each
  std::optional<Matrix> from_source;  // n x k
};

struct FractionalLinearCode {
  PrimeField field{2};
  std::size_t k = 1;
  std::size_t n = 1;
  std::map<EdgeId, FractionalLocalCoding> edges;
  /// Per terminal index: k x (n * indegree), in-edges in ascending id order.
  std::vector<Matrix> decoders;
};

void check_shape(const SumNetwork& net, const FractionalLinearCode& code);

FractionalLinearCode wrap_scalar(const SumNetwork& net, const ScalarLinearCode& code);

/// Per edge, the n x (l*k) matrix mapping the stacked source blocks to the
/// edge's packet.
std::map<EdgeId, Matrix> transfer_matrices(const SumNetwork& net, const FractionalLinearCode& code);

/// Each terminal's composite map equals [I_k | I_k | ... | I_k].
bool verify_fractional(const SumNetwork& net, const FractionalLinearCode& code);

/// Same question answered by running the code on every source tuple.
/// Throws SearchSpaceTooLarge when |F|^(l*k) exceeds 729.
bool verify_fractional_exhaustive(const SumNetwork& net, const FractionalLinearCode& code);

}  // namespace sumnet
