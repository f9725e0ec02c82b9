#include "sumnet/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace sumnet {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::size_t end_column;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}, raw.size() + 1};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (text.empty()) break;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& what) {
  throw ParseError(line.number, column, what);
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what) {
  fail(line, tok.column, what);
}

void expect_count(const Line& line, std::size_t lo, std::size_t hi, const char* usage) {
  if (line.tokens.size() < lo) fail(line, line.end_column, std::string("expected ") + usage);
  if (line.tokens.size() > hi) fail(line, line.tokens[hi], std::string("unexpected token; expected ") + usage);
}

std::int64_t parse_int(const Line& line, const Token& tok, std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(line, tok, "'" + std::string(s) + "' is not an integer");
  }
  return v;
}

}  // namespace

SumNetwork parse_network(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, NodeId, std::less<>> node_ids;
  std::vector<NodeId> sources, terminals;
  struct PendingEdge {
    const Line* line;
    Token name, tail, head;
  };
  const auto lines = tokenize(text);
  std::vector<PendingEdge> pending;
  for (const Line& line : lines) {
    const Token& kw = line.tokens[0];
    if (kw.text == "node") {
      expect_count(line, 2, 3, "'node <name> [source|terminal]'");
      const std::string name(line.tokens[1].text);
      if (node_ids.count(name)) {
        throw Error(ErrorCode::ValidationError,
                    "line " + std::to_string(line.number) + ": duplicate node name '" + name + "'");
      }
      const NodeId id{static_cast<std::uint32_t>(names.size())};
      names.push_back(name);
      node_ids.emplace(name, id);
      if (line.tokens.size() == 3) {
        const Token& role = line.tokens[2];
        if (role.text == "source") sources.push_back(id);
        else if (role.text == "terminal") terminals.push_back(id);
        else fail(line, role, "node role must be 'source' or 'terminal'");
      }
    } else if (kw.text == "edge") {
      expect_count(line, 4, 4, "'edge <name> <tail> <head>'");
      const Token& name = line.tokens[1];
      if (name.text.find('=') != std::string_view::npos || name.text.front() == '@') {
        fail(line, name, "edge names may not contain '=' or start with '@'");
      }
      pending.push_back({&line, line.tokens[1], line.tokens[2], line.tokens[3]});
    } else {
      fail(line, kw, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }
  std::vector<Edge> edges;
  std::set<std::string_view> edge_names;
  for (const PendingEdge& p : pending) {
    auto resolve = [&](const Token& tok) {
      auto it = node_ids.find(tok.text);
      if (it == node_ids.end()) fail(*p.line, tok, "undeclared node '" + std::string(tok.text) + "'");
      return it->second;
    };
    if (!edge_names.insert(p.name.text).second) {
      throw Error(ErrorCode::ValidationError, "line " + std::to_string(p.line->number) +
                                                  ": duplicate edge name '" + std::string(p.name.text) + "'");
    }
    edges.push_back(Edge{EdgeId{static_cast<std::uint32_t>(edges.size())}, resolve(p.tail), resolve(p.head),
                         std::string(p.name.text)});
  }
  return SumNetwork::create(std::move(names), std::move(edges), std::move(sources), std::move(terminals));
}

std::string render_network(const SumNetwork& net) {
  std::ostringstream out;
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    const NodeId id{v};
    out << "node " << net.node_name(id);
    if (net.source_index(id)) out << " source";
    if (net.terminal_index(id)) out << " terminal";
    out << '\n';
  }
  for (const Edge& e : net.edges()) {
    out << "edge " << e.name << ' ' << net.node_name(e.tail) << ' ' << net.node_name(e.head) << '\n';
  }
  return out.str();
}

// --- codes -------------------------------------------------------------------

namespace {

struct Assignment {
  Token whole;
  std::string_view key;
  std::string_view value;
};

Assignment split_assignment(const Line& line, const Token& tok) {
  const auto eq = tok.text.find('=');
  if (eq == std::string_view::npos || eq == 0) fail(line, tok, "expected '<input>=<coefficient>'");
  return {tok, tok.text.substr(0, eq), tok.text.substr(eq + 1)};
}

class CodeReader {
 public:
  CodeReader(const SumNetwork& net, std::string_view text) : net_(net), lines_(tokenize(text)) {}

  AnyCode read() {
    for (const Line& line : lines_) {
      const Token& kw = line.tokens[0];
      if (kw.text == "field") {
        expect_count(line, 2, 2, "'field <p>'");
        if (field_) fail(line, kw, "field declared twice");
        const auto p = parse_int(line, line.tokens[1], line.tokens[1].text);
        if (p < 2 || p > 65521 || !is_prime(static_cast<Elem>(p))) {
          fail(line, line.tokens[1], "field size must be a prime below 65536");
        }
        field_ = PrimeField(static_cast<Elem>(p));
      } else if (kw.text == "fractional") {
        expect_count(line, 3, 3, "'fractional <k> <n>'");
        if (!field_) fail(line, kw, "'field' must come first");
        if (fractional_ || started_) fail(line, kw, "'fractional' must directly follow 'field'");
        const auto k = parse_int(line, line.tokens[1], line.tokens[1].text);
        const auto n = parse_int(line, line.tokens[2], line.tokens[2].text);
        if (k < 1 || n < 1 || k > 64 || n > 64) fail(line, line.tokens[1], "block lengths must be in 1..64");
        fractional_ = std::make_pair(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
      } else if (kw.text == "edge" || kw.text == "decoder") {
        if (!field_) fail(line, kw, "'field' must come first");
        started_ = true;
        if (line.tokens.size() < 2) fail(line, line.end_column, "expected a name");
        if (kw.text == "edge") edge_line(line);
        else decoder_line(line);
      } else {
        fail(line, kw, "unknown keyword '" + std::string(kw.text) + "'");
      }
    }
    if (!field_) throw ParseError(lines_.empty() ? 1 : lines_.back().number, 1, "missing 'field' line");
    return build();
  }

 private:
  struct Entry {
    const Line* line;
    Token token;
    std::string_view value;
  };
  // Per edge (or terminal), input position -> raw coefficient; position
  // == number of edge inputs stands for the source symbol.
  using Entries = std::map<std::size_t, Entry>;

  void edge_line(const Line& line) {
    const Token& name = line.tokens[1];
    const auto id = net_.find_edge(name.text);
    if (!id) fail(line, name, "unknown edge '" + std::string(name.text) + "'");
    if (edges_.count(*id)) fail(line, name, "edge '" + std::string(name.text) + "' listed twice");
    Entries& entries = edges_[*id];
    const Edge& e = net_.edge(*id);
    const auto ins = net_.in_edges(e.tail);
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      const Assignment a = split_assignment(line, line.tokens[i]);
      std::size_t pos = 0;
      if (a.key == "@source") {
        if (!net_.source_index(e.tail)) fail(line, a.whole, "tail of '" + e.name + "' is not a source");
        pos = ins.size();
      } else {
        pos = input_position(line, a, ins, e.name);
      }
      if (!entries.emplace(pos, Entry{&line, a.whole, a.value}).second) fail(line, a.whole, "input given twice");
    }
  }

  void decoder_line(const Line& line) {
    const Token& name = line.tokens[1];
    const auto node = net_.find_node(name.text);
    const auto j = node ? net_.terminal_index(*node) : std::nullopt;
    if (!j) fail(line, name, "'" + std::string(name.text) + "' is not a terminal");
    if (decoders_.count(*j)) fail(line, name, "decoder for '" + std::string(name.text) + "' listed twice");
    Entries& entries = decoders_[*j];
    const auto ins = net_.in_edges(*node);
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      const Assignment a = split_assignment(line, line.tokens[i]);
      const std::size_t pos = input_position(line, a, ins, std::string(name.text));
      if (!entries.emplace(pos, Entry{&line, a.whole, a.value}).second) fail(line, a.whole, "input given twice");
    }
  }

  std::size_t input_position(const Line& line, const Assignment& a, std::span<const EdgeId> ins,
                             const std::string& owner) const {
    const auto in = net_.find_edge(a.key);
    const auto it = in ? std::find(ins.begin(), ins.end(), *in) : ins.end();
    if (it == ins.end()) fail(line, a.whole, "'" + std::string(a.key) + "' is not an input of '" + owner + "'");
    return static_cast<std::size_t>(it - ins.begin());
  }

  Elem scalar(const Entry& e) const {
    return FieldElement(*field_, parse_int(*e.line, e.token, e.value)).value();
  }

  Matrix matrix(const Entry& e, std::size_t rows, std::size_t cols) const {
    Matrix m(rows, cols);
    std::size_t r = 0;
    std::string_view rest = e.value;
    while (true) {
      const auto semi = rest.find(';');
      std::string_view row = rest.substr(0, semi);
      if (r >= rows) fail(*e.line, e.token, "matrix needs " + std::to_string(rows) + " rows");
      std::size_t c = 0;
      while (true) {
        const auto comma = row.find(',');
        if (c >= cols) fail(*e.line, e.token, "matrix needs " + std::to_string(cols) + " columns");
        m.at(r, c++) = FieldElement(*field_, parse_int(*e.line, e.token, row.substr(0, comma))).value();
        if (comma == std::string_view::npos) break;
        row = row.substr(comma + 1);
      }
      if (c != cols) fail(*e.line, e.token, "matrix needs " + std::to_string(cols) + " columns");
      ++r;
      if (semi == std::string_view::npos) break;
      rest = rest.substr(semi + 1);
    }
    if (r != rows) fail(*e.line, e.token, "matrix needs " + std::to_string(rows) + " rows");
    return m;
  }

  AnyCode build() const {
    if (!fractional_) {
      ScalarLinearCode code = ScalarLinearCode::zero(net_, *field_);
      for (const auto& [id, entries] : edges_) {
        LocalCoding& lc = code.edges.at(id);
        for (const auto& [pos, entry] : entries) {
          if (pos == lc.from_edges.size()) lc.from_source = scalar(entry);
          else lc.from_edges[pos] = scalar(entry);
        }
      }
      for (const auto& [j, entries] : decoders_) {
        for (const auto& [pos, entry] : entries) code.decoders[j][pos] = scalar(entry);
      }
      return code;
    }
    const auto [k, n] = *fractional_;
    FractionalLinearCode code;
    code.field = *field_;
    code.k = k;
    code.n = n;
    for (const Edge& e : net_.edges()) {
      FractionalLocalCoding lc;
      const std::size_t inputs = net_.in_edges(e.tail).size();
      lc.from_edges.assign(inputs, Matrix(n, n));
      if (net_.source_index(e.tail)) lc.from_source = Matrix(n, k);
      if (auto it = edges_.find(e.id); it != edges_.end()) {
        for (const auto& [pos, entry] : it->second) {
          if (pos == inputs) lc.from_source = matrix(entry, n, k);
          else lc.from_edges[pos] = matrix(entry, n, n);
        }
      }
      code.edges.emplace(e.id, std::move(lc));
    }
    for (std::size_t j = 0; j < net_.terminals().size(); ++j) {
      const std::size_t inputs = net_.in_edges(net_.terminals()[j]).size();
      Matrix d(k, n * inputs);
      if (auto it = decoders_.find(j); it != decoders_.end()) {
        for (const auto& [pos, entry] : it->second) {
          const Matrix block = matrix(entry, k, n);
          for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < n; ++c) d.at(r, pos * n + c) = block.at(r, c);
          }
        }
      }
      code.decoders.push_back(std::move(d));
    }
    return code;
  }

  const SumNetwork& net_;
  std::vector<Line> lines_;
  std::optional<PrimeField> field_;
  std::optional<std::pair<std::size_t, std::size_t>> fractional_;
  bool started_ = false;
  std::map<EdgeId, Entries> edges_;
  std::map<std::size_t, Entries> decoders_;
};

std::string render_matrix(const Matrix& m, std::size_t col0, std::size_t cols) {
  std::string s;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) s += ',';
      s += std::to_string(m.at(r, col0 + c));
    }
  }
  return s;
}

}  // namespace

AnyCode parse_code(const SumNetwork& net, std::string_view text) { return CodeReader(net, text).read(); }

std::string render_code(const SumNetwork& net, const ScalarLinearCode& code) {
  check_shape(net, code);
  std::ostringstream out;
  out << "field " << code.field.p() << '\n';
  for (const Edge& e : net.edges()) {
    const LocalCoding& lc = code.edges.at(e.id);
    out << "edge " << e.name;
    const auto ins = net.in_edges(e.tail);
    for (std::size_t i = 0; i < ins.size(); ++i) out << ' ' << net.edge(ins[i]).name << '=' << lc.from_edges[i];
    if (lc.from_source) out << " @source=" << *lc.from_source;
    out << '\n';
  }
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    out << "decoder " << net.node_name(net.terminals()[j]);
    const auto ins = net.in_edges(net.terminals()[j]);
    for (std::size_t i = 0; i < ins.size(); ++i) out << ' ' << net.edge(ins[i]).name << '=' << code.decoders[j][i];
    out << '\n';
  }
  return out.str();
}

std::string render_code(const SumNetwork& net, const FractionalLinearCode& code) {
  check_shape(net, code);
  std::ostringstream out;
  out << "field " << code.field.p() << '\n' << "fractional " << code.k << ' ' << code.n << '\n';
  for (const Edge& e : net.edges()) {
    const FractionalLocalCoding& lc = code.edges.at(e.id);
    out << "edge " << e.name;
    const auto ins = net.in_edges(e.tail);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      out << ' ' << net.edge(ins[i]).name << '=' << render_matrix(lc.from_edges[i], 0, code.n);
    }
    if (lc.from_source) out << " @source=" << render_matrix(*lc.from_source, 0, code.k);
    out << '\n';
  }
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    out << "decoder " << net.node_name(net.terminals()[j]);
    const auto ins = net.in_edges(net.terminals()[j]);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      out << ' ' << net.edge(ins[i]).name << '=' << render_matrix(code.decoders[j], i * code.n, code.n);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sumnet
