// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "sumnet/sumnet.h"

namespace {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kNoCode = 5,
  kBudget = 6,
  kClassMismatch = 7,
  kTooLarge = 8,
  kInternal = 9,
};

int exit_for(sumnet_status s) {
  switch (s) {
    case SUMNET_OK: return kOk;
    case SUMNET_ERR_PARSE:
    case SUMNET_ERR_FIELD_MISMATCH:
    case SUMNET_ERR_CODE_SHAPE: return kParse;
    case SUMNET_ERR_VALIDATION:
    case SUMNET_ERR_CYCLE:
    case SUMNET_ERR_NOT_THREE_BY_THREE: return kValidation;
    case SUMNET_ERR_INVALID_FIELD:
    case SUMNET_ERR_INVALID_ALPHA:
    case SUMNET_ERR_INVALID_ARGUMENT: return kUsage;
    case SUMNET_ERR_CLASS_MISMATCH: return kClassMismatch;
    case SUMNET_ERR_SEARCH_SPACE_TOO_LARGE: return kTooLarge;
    case SUMNET_ERR_GENERATION_FAILED: return kBudget;
    default: return kInternal;
  }
}

struct Failure {
  int exit_code;
};

[[noreturn]] void fail(sumnet_status s) {
  std::cerr << "error: " << sumnet_status_name(s) << ": " << sumnet_last_error() << '\n';
  throw Failure{exit_for(s)};
}

void check(sumnet_status s) {
  if (s != SUMNET_OK) fail(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw Failure{kParse};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{kUsage};
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { sumnet_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Network = std::unique_ptr<sumnet_network, decltype(&sumnet_network_free)>;

Network load(const std::string& path) {
  const std::string text = read_file(path);
  sumnet_network* raw = nullptr;
  const sumnet_status s = sumnet_network_parse(text.c_str(), &raw);
  if (s != SUMNET_OK) {
    std::cerr << path << ": ";
    fail(s);
  }
  return Network(raw, &sumnet_network_free);
}

sumnet_format format_of(const std::string& f) {
  return f == "structured" ? SUMNET_FORMAT_STRUCTURED : SUMNET_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify 3-source 3-terminal sum-networks and build network codes for them"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));

  std::string net_path, code_path, output;
  auto* analyze = app.add_subcommand("analyze", "Connectivity, disconnect sets, kappa and edge tags");
  analyze->add_option("network", net_path, "Network file")->required();

  auto* classify = app.add_subcommand("classify", "Solvability class, witness pair and capacity");
  classify->add_option("network", net_path, "Network file")->required();

  std::string mode;
  std::uint32_t field = 2;
  std::uint32_t k = 2, n = 3;
  std::int64_t alpha = 0;
  std::uint64_t max_codes = 0, seed = 1;
  double time_limit = 0;
  auto* construct = app.add_subcommand("construct", "Build and verify a code");
  construct->add_option("network", net_path, "Network file")->required();
  construct->add_option("mode", mode, "xor | linear | theorem2 | fractional")
      ->required()
      ->check(CLI::IsMember({"xor", "linear", "theorem2", "fractional"}));
  construct->add_option("k", k, "Source packet length (fractional)");
  construct->add_option("n", n, "Edge packet length (fractional)");
  construct->add_option("--field", field, "Field size (prime)");
  auto* alpha_opt = construct->add_option("--alpha", alpha, "alpha for theorem2 mode (default 2)");
  construct->add_option("--max-codes", max_codes, "Candidate cap for searches");
  construct->add_option("--time-limit", time_limit, "Seconds allowed for searches");
  construct->add_option("--seed", seed, "Sampler seed for large fractional searches");
  construct->add_option("-o,--output", output, "Write the code to this file");

  std::uint32_t expect_field = 0;
  auto* verify = app.add_subcommand("verify", "Check a code file against a network");
  verify->add_option("network", net_path, "Network file")->required();
  verify->add_option("code", code_path, "Code file")->required();
  verify->add_option("--field", expect_field, "Require the code to be over this field");

  sumnet_generator_config gen;
  sumnet_generator_config_init(&gen);
  std::size_t gen_kappa = 0;
  bool allow_disconnected = false;
  auto* generate = app.add_subcommand("generate", "Write a random layered network");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--nodes", gen.node_budget, "Node budget");
  generate->add_option("--edges", gen.edge_budget, "Edge budget");
  auto* kappa_opt = generate->add_option("--kappa", gen_kappa, "Required kappa");
  generate->add_flag("--planted", gen.plant_cut_pair, "Start from a two-bottleneck skeleton");
  generate->add_flag("--allow-disconnected", allow_disconnected, "Do not require every pair connected");
  generate->add_option("-o,--output", output, "Write here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive scalar linear code search");
  oracle->add_option("network", net_path, "Network file")->required();
  oracle->add_option("--field", field, "Field size (prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const sumnet_format fmt = format_of(format);
  try {
    CString report;
    if (*analyze) {
      auto net = load(net_path);
      check(sumnet_analyze(net.get(), fmt, &report.p));
      std::cout << report.str();
      return kOk;
    }
    if (*classify) {
      auto net = load(net_path);
      sumnet_verdict verdict{};
      check(sumnet_classify(net.get(), fmt, &verdict, &report.p));
      std::cout << report.str();
      return kOk;
    }
    if (*construct) {
      auto net = load(net_path);
      sumnet_construct_options opts;
      sumnet_construct_options_init(&opts);
      opts.mode = mode == "xor"        ? SUMNET_MODE_XOR
                  : mode == "linear"   ? SUMNET_MODE_LINEAR
                  : mode == "theorem2" ? SUMNET_MODE_THEOREM2
                                       : SUMNET_MODE_FRACTIONAL;
      opts.field = field;
      opts.k = k;
      opts.n = n;
      opts.has_alpha = alpha_opt->count() > 0 ? 1 : 0;
      opts.alpha = alpha;
      opts.max_codes = max_codes;
      opts.time_limit_seconds = time_limit;
      opts.seed = seed;
      sumnet_outcome outcome{};
      CString code;
      check(sumnet_construct(net.get(), &opts, fmt, &outcome, &report.p, &code.p));
      std::cout << report.str();
      if (!output.empty() && code.p) write_file(output, code.str());
      if (outcome == SUMNET_FOUND) return kOk;
      return outcome == SUMNET_NONE_COMPLETE ? kNoCode : kBudget;
    }
    if (*verify) {
      auto net = load(net_path);
      const std::string text = read_file(code_path);
      int passed = 0;
      const sumnet_status s = sumnet_verify(net.get(), text.c_str(), expect_field, fmt, &passed, &report.p);
      if (s != SUMNET_OK) {
        std::cerr << code_path << ": ";
        fail(s);
      }
      std::cout << report.str();
      return passed ? kOk : kVerifyFailed;
    }
    if (*generate) {
      gen.ensure_connected = allow_disconnected ? 0 : 1;
      gen.has_kappa = kappa_opt->count() > 0 ? 1 : 0;
      gen.kappa = gen_kappa;
      sumnet_network* raw = nullptr;
      check(sumnet_generate(&gen, &raw));
      Network net(raw, &sumnet_network_free);
      CString text;
      check(sumnet_network_render(net.get(), &text.p));
      if (output.empty()) std::cout << text.str();
      else write_file(output, text.str());
      return kOk;
    }
    if (*oracle) {
      auto net = load(net_path);
      int found = 0;
      check(sumnet_oracle(net.get(), field, fmt, &found, &report.p));
      std::cout << report.str();
      return found ? kOk : kNoCode;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kUsage;
}
