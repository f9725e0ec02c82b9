#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sumnet/constructor.hpp"
#include "sumnet/multigraph.hpp"

namespace sumnet {

/// Everything a command reports. Both renderings are produced from this one
/// value.
struct Report {
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

enum class ReportFormat { Text, Structured };

std::string render(const Report& report, ReportFormat format);

Report analyze_report(const SumNetwork& net);
/// Analysis plus class, witness and capacity. Requires a 3s/3t network.
Report classify_report(const SumNetwork& net);

enum class ConstructMode { Xor, Linear, Theorem2, Fractional };

struct ConstructRequest {
  ConstructMode mode = ConstructMode::Linear;
  std::uint32_t field = 2;
  std::size_t k = 2;
  std::size_t n = 3;
  std::optional<std::int64_t> alpha;
  SearchBudget budget;
};

enum class ConstructStatus { Found, NoneComplete, BudgetExhausted };

struct ConstructResult {
  ConstructStatus status = ConstructStatus::BudgetExhausted;
  Report report;
  std::string code_text;  // empty unless found
};

/// Throws InvalidField, InvalidAlpha, ClassMismatch (theorem2 mode on a
/// network without a matching witness) or InvalidArgument.
ConstructResult construct_report(const SumNetwork& net, const ConstructRequest& request);

struct VerifyResult {
  bool passed = false;
  Report report;
};

/// Runs the transfer check and, when the source tuple space is small enough,
/// the exhaustive check. `expected_field` guards against a code written for
/// another field (FieldMismatch).
VerifyResult verify_report(const SumNetwork& net, std::string_view code_text,
                           std::optional<std::uint32_t> expected_field = std::nullopt);

struct OracleResult {
  bool found = false;
  Report report;
  std::string code_text;
};

OracleResult oracle_report(const SumNetwork& net, std::uint32_t field);

}  // namespace sumnet
