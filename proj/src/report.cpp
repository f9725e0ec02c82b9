#include "sumnet/report.hpp"

#include <sstream>

#include "sumnet/analysis.hpp"
#include "sumnet/classifier.hpp"
#include "sumnet/io.hpp"
#include "sumnet/oracle.hpp"

namespace sumnet {

namespace {

using Json = nlohmann::ordered_json;

// --- text rendering ----------------------------------------------------------

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  // Lists of sentences (code lines) read better one per line.
  if (!v.empty() && v[0].is_string() && v[0].get<std::string>().find(' ') != std::string::npos) return false;
  for (const auto& x : v) {
    if (!is_flat(x)) return false;
  }
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

void render_text(std::ostream& out, const Json& obj, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : obj.items()) {
    if (is_flat(v)) {
      out << pad << key << ": " << scalar_text(v) << '\n';
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(out, v, indent + 2);
    } else {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        out << pad << "  -";
        if (item.is_object() && std::all_of(item.begin(), item.end(), is_flat)) {
          for (const auto& [k, x] : item.items()) out << ' ' << k << '=' << scalar_text(x);
          out << '\n';
        } else if (item.is_object()) {
          out << '\n';
          render_text(out, item, indent + 4);
        } else {
          out << ' ' << scalar_text(item) << '\n';
        }
      }
    }
  }
}

// --- report sections ---------------------------------------------------------

std::string pair_name(const SumNetwork& net, const SourceTerminalPair& p) {
  return net.node_name(net.sources()[p.first]) + "->" + net.node_name(net.terminals()[p.second]);
}

std::string tag_text(std::uint8_t tags) {
  std::string s;
  if (tags & kTagA) s += 'A';
  if (tags & kTagB) s += 'B';
  if (tags & kTagC) s += 'C';
  return s;
}

Json names_of(const SumNetwork& net, const std::vector<NodeId>& nodes) {
  Json a = Json::array();
  for (NodeId v : nodes) a.push_back(net.node_name(v));
  return a;
}

void add_analysis(Json& out, const SumNetwork& net) {
  const AnalysisReport a = analyze(net);
  out["network"] = {{"nodes", net.node_count()},
                    {"edges", net.edge_count()},
                    {"sources", names_of(net, net.sources())},
                    {"terminals", names_of(net, net.terminals())}};
  Json table = Json::array();
  for (std::size_t i = 0; i < a.connectivity.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.connectivity.cols(); ++j) row.push_back(a.connectivity.at(i, j) ? 1 : 0);
    table.push_back(row);
  }
  out["connectivity"] = table;
  out["connected"] = a.connected;
  out["kappa"] = a.kappa;
  Json sets = Json::array();
  for (const DisconnectSet& d : a.disconnect) {
    Json pairs = Json::array();
    for (const auto& p : d.pairs) pairs.push_back(pair_name(net, p));
    sets.push_back({{"edge", net.edge(d.edge).name}, {"pairs", pairs}});
  }
  out["disconnect_sets"] = sets;
  Json maxd = Json::array();
  for (EdgeId e : a.max_disconnecting) {
    maxd.push_back({{"edge", net.edge(e).name}, {"tags", tag_text(a.abc.count(e) ? a.abc.at(e) : 0)}});
  }
  out["max_disconnecting"] = maxd;
  if (net.is_three_by_three()) out["hub"] = a.hub ? Json(net.node_name(*a.hub)) : Json(nullptr);
}

std::string summary(const SolvabilityClass& c) {
  switch (c.variant) {
    case Verdict::NotConnected: return "NotConnected, capacity 0";
    case Verdict::Nonsolvable: return "Nonsolvable, capacity 2/3";
    case Verdict::SolvableExceptF2: return "Solvable over all fields except F2, capacity >= 1";
    case Verdict::SolvableAllFields: return "Solvable over all fields, capacity >= 1";
  }
  return "";
}

Json witness_json(const SumNetwork& net, const WitnessPair& w) {
  Json s = Json::array(), t = Json::array();
  for (int i = 0; i < 3; ++i) {
    s.push_back(net.node_name(net.sources()[w.labeling.source_perm[i]]));
    t.push_back(net.node_name(net.terminals()[w.labeling.terminal_perm[i]]));
  }
  return {{"e1", net.edge(w.e1).name}, {"e2", net.edge(w.e2).name}, {"source_order", s}, {"terminal_order", t}};
}

void add_classification(Json& out, const SumNetwork& net, const SolvabilityClass& c) {
  Json j = {{"class", to_string(c.variant)},
            {"summary", summary(c)},
            {"capacity", c.capacity.str()},
            {"decided_by", to_string(c.decided_by)}};
  j["witness"] = c.witness ? witness_json(net, *c.witness) : Json(nullptr);
  out["classification"] = j;
}

Json code_lines(const std::string& text) {
  Json lines = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const char* status_text(ConstructStatus s) {
  switch (s) {
    case ConstructStatus::Found: return "found";
    case ConstructStatus::NoneComplete: return "none (complete)";
    case ConstructStatus::BudgetExhausted: return "none (budget exhausted)";
  }
  return "";
}

const char* mode_text(ConstructMode m) {
  switch (m) {
    case ConstructMode::Xor: return "xor";
    case ConstructMode::Linear: return "linear";
    case ConstructMode::Theorem2: return "theorem2";
    case ConstructMode::Fractional: return "fractional";
  }
  return "";
}

template <typename Code>
ConstructStatus status_of(const SearchOutcome<Code>& o) {
  if (o.code) return ConstructStatus::Found;
  return o.complete ? ConstructStatus::NoneComplete : ConstructStatus::BudgetExhausted;
}

// Largest source-tuple count the exhaustive verifier is asked to cover.
constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

bool exhaustive_feasible(const SumNetwork& net, std::uint32_t p) {
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    states *= p;
    if (states > kExhaustiveLimit) return false;
  }
  return true;
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Structured) return report.data.dump(2) + "\n";
  std::ostringstream out;
  render_text(out, report.data, 0);
  return out.str();
}

Report analyze_report(const SumNetwork& net) {
  Report r;
  r.data["command"] = "analyze";
  add_analysis(r.data, net);
  return r;
}

Report classify_report(const SumNetwork& net) {
  if (!net.is_three_by_three()) throw Error(ErrorCode::NotThreeByThree, "classification needs 3 sources and 3 terminals");
  Report r;
  r.data["command"] = "classify";
  add_analysis(r.data, net);
  add_classification(r.data, net, classify(net));
  return r;
}

ConstructResult construct_report(const SumNetwork& net, const ConstructRequest& req) {
  const PrimeField field(req.field);
  ConstructResult result;
  Json& d = result.report.data;
  d["command"] = "construct";
  d["mode"] = mode_text(req.mode);
  d["field"] = field.p();

  switch (req.mode) {
    case ConstructMode::Xor:
    case ConstructMode::Linear: {
      const bool xor_only = req.mode == ConstructMode::Xor;
      const auto out = search_scalar(net, field, req.budget, xor_only);
      result.status = status_of(out);
      d["coefficients"] = xor_only || !req.budget.coefficient_set.empty() ? "restricted" : "whole field";
      d["examined"] = out.examined;
      d["exhaustive_over_field"] = out.exhaustive_over_field;
      if (out.code) result.code_text = render_code(net, *out.code);
      break;
    }
    case ConstructMode::Theorem2: {
      if (!net.is_three_by_three()) throw Error(ErrorCode::NotThreeByThree, "theorem2 mode needs a 3s/3t network");
      const SolvabilityClass c = classify(net);
      if (c.variant != Verdict::SolvableExceptF2 || !c.witness) {
        throw Error(ErrorCode::ClassMismatch, std::string("theorem2 mode needs a SolvableExceptF2 network; this one is ") +
                                                  to_string(c.variant));
      }
      const FieldElement alpha = req.alpha ? FieldElement(field, *req.alpha) : default_alpha(field);
      const auto [beta, gamma] = theorem2_constants(field, alpha);
      d["constants"] = {{"alpha", alpha.value()}, {"beta", beta.value()}, {"gamma", gamma.value()}};
      d["witness"] = witness_json(net, *c.witness);
      const ScalarLinearCode code = construct_theorem2(net, *c.witness, field, alpha);
      result.status = ConstructStatus::Found;
      result.code_text = render_code(net, code);
      break;
    }
    case ConstructMode::Fractional: {
      if (req.k == 0 || req.n == 0) throw Error(ErrorCode::InvalidArgument, "block lengths must be positive");
      d["k"] = req.k;
      d["n"] = req.n;
      if (net.is_three_by_three()) {
        const SolvabilityClass c = classify(net);
        if (c.variant == Verdict::Nonsolvable && c.witness) {
          const CutBound b = cut_bound_check(net, *c.witness, req.k, req.n);
          d["cut_bound"] = {{"admissible", b.admissible},
                            {"cut_symbols", b.cut_symbols},
                            {"message_symbols", b.message_symbols}};
          if (!b.admissible) {
            result.status = ConstructStatus::NoneComplete;
            break;
          }
        }
      }
      const auto out = search_fractional(net, field, req.k, req.n, req.budget);
      result.status = status_of(out);
      d["examined"] = out.examined;
      if (out.code) result.code_text = render_code(net, *out.code);
      break;
    }
  }
  d["status"] = status_text(result.status);
  if (!result.code_text.empty()) d["code"] = code_lines(result.code_text);
  return result;
}

VerifyResult verify_report(const SumNetwork& net, std::string_view code_text,
                           std::optional<std::uint32_t> expected_field) {
  const AnyCode any = parse_code(net, code_text);
  const std::uint32_t p = std::visit([](const auto& c) { return c.field.p(); }, any);
  if (expected_field && *expected_field != p) {
    throw Error(ErrorCode::FieldMismatch, "code is over GF(" + std::to_string(p) + "), expected GF(" +
                                              std::to_string(*expected_field) + ")");
  }
  VerifyResult result;
  Json& d = result.report.data;
  d["command"] = "verify";
  d["field"] = p;
  if (const auto* code = std::get_if<ScalarLinearCode>(&any)) {
    d["kind"] = "scalar";
    const bool transfer = verify_transfer(net, *code);
    d["transfer"] = transfer;
    if (exhaustive_feasible(net, p)) {
      const auto counter = find_counterexample(net, *code);
      d["exhaustive"] = !counter.has_value();
      d["agree"] = transfer == !counter.has_value();
      d["counterexample"] = counter ? Json(*counter) : Json(nullptr);
      result.passed = transfer && !counter;
    } else {
      d["exhaustive"] = "skipped";
      result.passed = transfer;
    }
    d["xor"] = is_xor_code(*code);
  } else {
    const auto& fcode = std::get<FractionalLinearCode>(any);
    d["kind"] = "fractional";
    d["k"] = fcode.k;
    d["n"] = fcode.n;
    const bool transfer = verify_fractional(net, fcode);
    d["transfer"] = transfer;
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < net.sources().size() * fcode.k && states <= 729; ++i) states *= p;
    if (states <= 729) {
      const bool exhaustive = verify_fractional_exhaustive(net, fcode);
      d["exhaustive"] = exhaustive;
      d["agree"] = transfer == exhaustive;
      result.passed = transfer && exhaustive;
    } else {
      d["exhaustive"] = "skipped";
      result.passed = transfer;
    }
  }
  d["passed"] = result.passed;
  return result;
}

OracleResult oracle_report(const SumNetwork& net, std::uint32_t field_size) {
  const PrimeField field(field_size);
  OracleResult result;
  Json& d = result.report.data;
  d["command"] = "oracle";
  d["field"] = field.p();
  d["slots"] = coefficient_slots(net);
  d["slot_cap"] = default_slot_cap(field);
  const auto code = brute_force_solvable(net, field);
  result.found = code.has_value();
  d["found"] = result.found;
  d["complete"] = true;
  if (code) {
    result.code_text = render_code(net, *code);
    d["code"] = code_lines(result.code_text);
  }
  return result;
}

}  // namespace sumnet
