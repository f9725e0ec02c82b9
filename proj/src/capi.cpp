#include "sumnet/sumnet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sumnet/analysis.hpp"
#include "sumnet/classifier.hpp"
#include "sumnet/io.hpp"
#include "sumnet/oracle.hpp"
#include "sumnet/report.hpp"

struct sumnet_network {
  sumnet::SumNetwork net;
};

namespace {

thread_local std::string g_last_error;

sumnet_status status_for(sumnet::ErrorCode code) {
  using sumnet::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return SUMNET_ERR_PARSE;
    case ErrorCode::ValidationError:
    case ErrorCode::UnknownNode:
    case ErrorCode::UnknownEdge: return SUMNET_ERR_VALIDATION;
    case ErrorCode::CycleDetected: return SUMNET_ERR_CYCLE;
    case ErrorCode::NotThreeByThree: return SUMNET_ERR_NOT_THREE_BY_THREE;
    case ErrorCode::InvalidField: return SUMNET_ERR_INVALID_FIELD;
    case ErrorCode::InvalidAlpha:
    case ErrorCode::DivisionByZero: return SUMNET_ERR_INVALID_ALPHA;
    case ErrorCode::FieldMismatch: return SUMNET_ERR_FIELD_MISMATCH;
    case ErrorCode::CodeShapeMismatch:
    case ErrorCode::InputCodeInvalid: return SUMNET_ERR_CODE_SHAPE;
    case ErrorCode::ClassMismatch: return SUMNET_ERR_CLASS_MISMATCH;
    case ErrorCode::NoValidPaths: return SUMNET_ERR_NO_VALID_PATHS;
    case ErrorCode::InvalidWitness: return SUMNET_ERR_INVALID_WITNESS;
    case ErrorCode::SearchSpaceTooLarge: return SUMNET_ERR_SEARCH_SPACE_TOO_LARGE;
    case ErrorCode::GenerationFailed: return SUMNET_ERR_GENERATION_FAILED;
    case ErrorCode::InvalidArgument: return SUMNET_ERR_INVALID_ARGUMENT;
  }
  return SUMNET_ERR_INTERNAL;
}

template <typename F>
sumnet_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SUMNET_OK;
  } catch (const sumnet::Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return SUMNET_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw sumnet::Error(sumnet::ErrorCode::InvalidArgument, what);
}

sumnet::ReportFormat format_of(sumnet_format f) {
  return f == SUMNET_FORMAT_STRUCTURED ? sumnet::ReportFormat::Structured : sumnet::ReportFormat::Text;
}

}  // namespace

extern "C" {

void sumnet_construct_options_init(sumnet_construct_options* o) {
  if (!o) return;
  *o = sumnet_construct_options{};
  o->mode = SUMNET_MODE_LINEAR;
  o->field = 2;
  o->k = 2;
  o->n = 3;
  o->seed = 1;
}

void sumnet_generator_config_init(sumnet_generator_config* c) {
  if (!c) return;
  const sumnet::GeneratorConfig d;
  *c = sumnet_generator_config{};
  c->node_budget = d.node_budget;
  c->edge_budget = d.edge_budget;
  c->seed = d.seed;
  c->ensure_connected = d.ensure_connected ? 1 : 0;
}

const char* sumnet_last_error(void) { return g_last_error.c_str(); }

const char* sumnet_status_name(sumnet_status s) {
  switch (s) {
    case SUMNET_OK: return "ok";
    case SUMNET_ERR_PARSE: return "parse error";
    case SUMNET_ERR_VALIDATION: return "validation error";
    case SUMNET_ERR_CYCLE: return "cycle detected";
    case SUMNET_ERR_NOT_THREE_BY_THREE: return "not a 3-source 3-terminal network";
    case SUMNET_ERR_INVALID_FIELD: return "invalid field";
    case SUMNET_ERR_INVALID_ALPHA: return "invalid alpha";
    case SUMNET_ERR_FIELD_MISMATCH: return "field mismatch";
    case SUMNET_ERR_CODE_SHAPE: return "code shape mismatch";
    case SUMNET_ERR_CLASS_MISMATCH: return "class mismatch";
    case SUMNET_ERR_NO_VALID_PATHS: return "no valid paths";
    case SUMNET_ERR_INVALID_WITNESS: return "invalid witness";
    case SUMNET_ERR_SEARCH_SPACE_TOO_LARGE: return "search space too large";
    case SUMNET_ERR_GENERATION_FAILED: return "generation failed";
    case SUMNET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SUMNET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sumnet_string_free(char* s) { std::free(s); }

sumnet_status sumnet_network_parse(const char* text, sumnet_network** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new sumnet_network{sumnet::parse_network(text)};
  });
}

void sumnet_network_free(sumnet_network* net) { delete net; }

sumnet_status sumnet_network_render(const sumnet_network* net, char** out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = copy_string(sumnet::render_network(net->net));
  });
}

sumnet_status sumnet_network_size(const sumnet_network* net, size_t* nodes, size_t* edges) {
  return guarded([&] {
    require(net, "null network");
    if (nodes) *nodes = net->net.node_count();
    if (edges) *edges = net->net.edge_count();
  });
}

sumnet_status sumnet_kappa(const sumnet_network* net, size_t* out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = sumnet::kappa(net->net);
  });
}

sumnet_status sumnet_analyze(const sumnet_network* net, sumnet_format format, char** report) {
  return guarded([&] {
    require(net && report, "null argument");
    *report = copy_string(sumnet::render(sumnet::analyze_report(net->net), format_of(format)));
  });
}

sumnet_status sumnet_classify(const sumnet_network* net, sumnet_format format, sumnet_verdict* verdict,
                              char** report) {
  return guarded([&] {
    require(net, "null network");
    const sumnet::Report r = sumnet::classify_report(net->net);
    if (verdict) {
      const std::string v = r.data["classification"]["class"].get<std::string>();
      *verdict = v == sumnet::to_string(sumnet::Verdict::NotConnected)  ? SUMNET_NOT_CONNECTED
                 : v == sumnet::to_string(sumnet::Verdict::Nonsolvable) ? SUMNET_NONSOLVABLE
                 : v == sumnet::to_string(sumnet::Verdict::SolvableExceptF2) ? SUMNET_SOLVABLE_EXCEPT_F2
                                                                              : SUMNET_SOLVABLE_ALL_FIELDS;
    }
    if (report) *report = copy_string(sumnet::render(r, format_of(format)));
  });
}

sumnet_status sumnet_construct(const sumnet_network* net, const sumnet_construct_options* options,
                               sumnet_format format, sumnet_outcome* outcome, char** report, char** code_text) {
  return guarded([&] {
    require(net && options, "null argument");
    if (code_text) *code_text = nullptr;
    sumnet::ConstructRequest req;
    switch (options->mode) {
      case SUMNET_MODE_XOR: req.mode = sumnet::ConstructMode::Xor; break;
      case SUMNET_MODE_LINEAR: req.mode = sumnet::ConstructMode::Linear; break;
      case SUMNET_MODE_THEOREM2: req.mode = sumnet::ConstructMode::Theorem2; break;
      case SUMNET_MODE_FRACTIONAL: req.mode = sumnet::ConstructMode::Fractional; break;
      default: require(false, "unknown construction mode");
    }
    req.field = options->field;
    req.k = options->k;
    req.n = options->n;
    if (options->has_alpha) req.alpha = options->alpha;
    if (options->max_codes > 0) req.budget.max_codes = options->max_codes;
    if (options->time_limit_seconds > 0) req.budget.time_limit_seconds = options->time_limit_seconds;
    req.budget.seed = options->seed;
    const sumnet::ConstructResult r = sumnet::construct_report(net->net, req);
    if (outcome) {
      *outcome = r.status == sumnet::ConstructStatus::Found          ? SUMNET_FOUND
                 : r.status == sumnet::ConstructStatus::NoneComplete ? SUMNET_NONE_COMPLETE
                                                                     : SUMNET_BUDGET_EXHAUSTED;
    }
    if (report) *report = copy_string(sumnet::render(r.report, format_of(format)));
    if (code_text && !r.code_text.empty()) *code_text = copy_string(r.code_text);
  });
}

sumnet_status sumnet_verify(const sumnet_network* net, const char* code_text, uint32_t expected_field,
                            sumnet_format format, int* passed, char** report) {
  return guarded([&] {
    require(net && code_text, "null argument");
    const auto r = sumnet::verify_report(net->net, code_text,
                                         expected_field ? std::optional<std::uint32_t>(expected_field) : std::nullopt);
    if (passed) *passed = r.passed ? 1 : 0;
    if (report) *report = copy_string(sumnet::render(r.report, format_of(format)));
  });
}

sumnet_status sumnet_oracle(const sumnet_network* net, uint32_t field, sumnet_format format, int* found,
                            char** report) {
  return guarded([&] {
    require(net, "null network");
    const auto r = sumnet::oracle_report(net->net, field);
    if (found) *found = r.found ? 1 : 0;
    if (report) *report = copy_string(sumnet::render(r.report, format_of(format)));
  });
}

sumnet_status sumnet_generate(const sumnet_generator_config* config, sumnet_network** out) {
  return guarded([&] {
    require(config && out, "null argument");
    *out = nullptr;
    sumnet::GeneratorConfig c;
    c.node_budget = config->node_budget;
    c.edge_budget = config->edge_budget;
    c.seed = config->seed;
    c.ensure_connected = config->ensure_connected != 0;
    if (config->has_kappa) c.ensure_kappa = config->kappa;
    c.plant_cut_pair = config->plant_cut_pair != 0;
    *out = new sumnet_network{sumnet::generate_random(c)};
  });
}

}  // extern "C"
