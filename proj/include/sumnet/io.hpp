#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "sumnet/multigraph.hpp"
#include "sumnet/netcode.hpp"

namespace sumnet {

/// Network text format, one declaration per line:
///   node <name> [source|terminal]
///   edge <name> <tail> <head>
/// `#` starts a comment. Nodes and edges get ids in declaration order, and
/// sources/terminals are indexed in declaration order. Throws ParseError
/// (with line and column) or ValidationError / CycleDetected.
SumNetwork parse_network(std::string_view text);

/// Nodes then edges, in id order. Parsing the result gives back an equal
/// network when the edge ids are 0..m-1.
std::string render_network(const SumNetwork& net);

using AnyCode = std::variant<ScalarLinearCode, FractionalLinearCode>;

/// Code text format:
///   field <p>
///   fractional <k> <n>                      (optional, fractional codes only)
///   edge <edge> [<input-edge>=<c>]... [@source=<c>]
///   decoder <terminal> [<input-edge>=<c>]...
/// Coefficients are integers (reduced mod p); in fractional codes they are
/// matrices written row by row, `1,0;0,1`. Omitted inputs are zero.
AnyCode parse_code(const SumNetwork& net, std::string_view text);

std::string render_code(const SumNetwork& net, const ScalarLinearCode& code);
std::string render_code(const SumNetwork& net, const FractionalLinearCode& code);

}  // namespace sumnet
