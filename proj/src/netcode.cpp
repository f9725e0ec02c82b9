#include "sumnet/netcode.hpp"

#include <algorithm>
#include <string>

namespace sumnet {

namespace {

[[noreturn]] void shape_error(const std::string& msg) {
  throw Error(ErrorCode::CodeShapeMismatch, msg);
}

// Edges in an order where every edge comes after all in-edges of its tail.
std::vector<EdgeId> edge_order(const SumNetwork& net) {
  std::vector<EdgeId> out;
  out.reserve(net.edge_count());
  for (NodeId v : net.topological_order()) {
    for (EdgeId e : net.out_edges(v)) out.push_back(e);
  }
  return out;
}

std::size_t position_of(std::span<const EdgeId> list, EdgeId e) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), e) - list.begin());
}

bool canonical(const PrimeField& f, Elem v) { return v < f.p(); }

}  // namespace

ScalarLinearCode ScalarLinearCode::zero(const SumNetwork& net, const PrimeField& field) {
  ScalarLinearCode code;
  code.field = field;
  for (const Edge& e : net.edges()) {
    LocalCoding lc;
    lc.from_edges.assign(net.in_edges(e.tail).size(), 0);
    if (net.source_index(e.tail)) lc.from_source = 0;
    code.edges.emplace(e.id, std::move(lc));
  }
  for (NodeId t : net.terminals()) code.decoders.emplace_back(net.in_edges(t).size(), 0);
  return code;
}

void check_shape(const SumNetwork& net, const ScalarLinearCode& code) {
  const PrimeField& f = code.field;
  if (code.edges.size() != net.edge_count()) shape_error("code covers a different edge set");
  for (const Edge& e : net.edges()) {
    auto it = code.edges.find(e.id);
    if (it == code.edges.end()) shape_error("no local coding for edge '" + e.name + "'");
    const LocalCoding& lc = it->second;
    if (lc.from_edges.size() != net.in_edges(e.tail).size()) {
      shape_error("edge '" + e.name + "' has the wrong number of inputs");
    }
    if (lc.from_source.has_value() != net.source_index(e.tail).has_value()) {
      shape_error("edge '" + e.name + "' source-symbol input does not match its tail");
    }
    if (!std::all_of(lc.from_edges.begin(), lc.from_edges.end(), [&](Elem v) { return canonical(f, v); }) ||
        (lc.from_source && !canonical(f, *lc.from_source))) {
      shape_error("edge '" + e.name + "' has a coefficient outside the field");
    }
  }
  if (code.decoders.size() != net.terminals().size()) shape_error("wrong number of terminal decoders");
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    const auto& d = code.decoders[j];
    if (d.size() != net.in_edges(net.terminals()[j]).size()) {
      shape_error("decoder of terminal '" + net.node_name(net.terminals()[j]) + "' has the wrong arity");
    }
    if (!std::all_of(d.begin(), d.end(), [&](Elem v) { return canonical(f, v); })) {
      shape_error("decoder coefficient outside the field");
    }
  }
}

namespace {

// Symbol propagation on raw values; `inputs` already validated.
Evaluation run(const SumNetwork& net, const ScalarLinearCode& code, std::span<const Elem> inputs) {
  const PrimeField& f = code.field;
  std::vector<Elem> symbol(net.edge_id_bound(), 0);
  Evaluation out;
  for (EdgeId eid : edge_order(net)) {
    const Edge& e = net.edge(eid);
    const LocalCoding& lc = code.edges.at(eid);
    const auto ins = net.in_edges(e.tail);
    Elem acc = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) acc = f.add(acc, f.mul(lc.from_edges[i], symbol[ins[i].value]));
    if (lc.from_source) acc = f.add(acc, f.mul(*lc.from_source, inputs[*net.source_index(e.tail)]));
    symbol[eid.value] = acc;
    out.edge_symbols[eid] = acc;
  }
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    const auto ins = net.in_edges(net.terminals()[j]);
    Elem acc = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) acc = f.add(acc, f.mul(code.decoders[j][i], symbol[ins[i].value]));
    out.terminal_outputs.push_back(acc);
  }
  return out;
}

}  // namespace

Evaluation evaluate(const SumNetwork& net, const ScalarLinearCode& code,
                    std::span<const FieldElement> inputs) {
  check_shape(net, code);
  if (inputs.size() != net.sources().size()) shape_error("need one input symbol per source");
  std::vector<Elem> raw;
  for (const FieldElement& x : inputs) {
    if (x.field() != code.field) throw Error(ErrorCode::FieldMismatch, "input symbol from another field");
    raw.push_back(x.value());
  }
  return run(net, code, raw);
}

std::map<EdgeId, TransferVector> transfer_vectors(const SumNetwork& net,
                                                  const ScalarLinearCode& code) {
  check_shape(net, code);
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  std::map<EdgeId, TransferVector> out;
  for (EdgeId eid : edge_order(net)) {
    const Edge& e = net.edge(eid);
    const LocalCoding& lc = code.edges.at(eid);
    TransferVector v(l, 0);
    const auto ins = net.in_edges(e.tail);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      if (lc.from_edges[i] == 0) continue;
      const auto& u = out.at(ins[i]);
      for (std::size_t s = 0; s < l; ++s) v[s] = f.add(v[s], f.mul(lc.from_edges[i], u[s]));
    }
    if (lc.from_source) {
      const std::size_t s = *net.source_index(e.tail);
      v[s] = f.add(v[s], *lc.from_source);
    }
    out.emplace(eid, std::move(v));
  }
  return out;
}

std::vector<TransferVector> decoded_vectors(const SumNetwork& net, const ScalarLinearCode& code) {
  const auto tv = transfer_vectors(net, code);
  const PrimeField& f = code.field;
  std::vector<TransferVector> out;
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    TransferVector acc(net.sources().size(), 0);
    const auto ins = net.in_edges(net.terminals()[j]);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      const auto& u = tv.at(ins[i]);
      for (std::size_t s = 0; s < acc.size(); ++s) acc[s] = f.add(acc[s], f.mul(code.decoders[j][i], u[s]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::optional<std::vector<Elem>> find_counterexample(const SumNetwork& net,
                                                     const ScalarLinearCode& code) {
  check_shape(net, code);
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  std::vector<Elem> x(l, 0);
  while (true) {
    Elem sum = 0;
    for (Elem v : x) sum = f.add(sum, v);
    const Evaluation ev = run(net, code, x);
    for (Elem out : ev.terminal_outputs) {
      if (out != sum) return x;
    }
    // Odometer, last source fastest.
    std::size_t pos = l;
    while (pos > 0) {
      --pos;
      if (++x[pos] < f.p()) break;
      x[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (l == 0) return std::nullopt;
  }
}

bool verify_exhaustive(const SumNetwork& net, const ScalarLinearCode& code) {
  return !find_counterexample(net, code).has_value();
}

bool verify_transfer(const SumNetwork& net, const ScalarLinearCode& code) {
  for (const auto& v : decoded_vectors(net, code)) {
    if (!std::all_of(v.begin(), v.end(), [](Elem c) { return c == 1; })) return false;
  }
  return true;
}

bool is_xor_code(const ScalarLinearCode& code) {
  const PrimeField& f = code.field;
  auto ok = [&](Elem v) { return v == 0 || v == 1 || v == f.minus_one(); };
  for (const auto& [id, lc] : code.edges) {
    if (!std::all_of(lc.from_edges.begin(), lc.from_edges.end(), ok)) return false;
    if (lc.from_source && !ok(*lc.from_source)) return false;
  }
  for (const auto& d : code.decoders) {
    if (!std::all_of(d.begin(), d.end(), ok)) return false;
  }
  return true;
}

ScalarLinearCode reverse_code(const SumNetwork& net, const ScalarLinearCode& code) {
  if (!verify_transfer(net, code)) {
    throw Error(ErrorCode::InputCodeInvalid, "reverse_code needs a code that solves the network");
  }
  const SumNetwork rev = reverse(net);
  ScalarLinearCode out = ScalarLinearCode::zero(rev, code.field);
  for (const Edge& re : rev.edges()) {
    // re runs head(e) -> tail(e); its inputs in rev are the forward out-edges
    // of v = head(e).
    const NodeId v = re.tail;
    LocalCoding& lc = out.edges.at(re.id);
    const auto rev_inputs = rev.in_edges(v);
    for (std::size_t i = 0; i < rev_inputs.size(); ++i) {
      const EdgeId f_id = rev_inputs[i];
      const auto fwd_inputs_of_f = net.in_edges(net.edge(f_id).tail);
      lc.from_edges[i] = code.edges.at(f_id).from_edges[position_of(fwd_inputs_of_f, re.id)];
    }
    if (auto j = net.terminal_index(v)) {
      lc.from_source = code.decoders[*j][position_of(net.in_edges(v), re.id)];
    }
  }
  for (std::size_t i = 0; i < rev.terminals().size(); ++i) {
    const NodeId s = rev.terminals()[i];
    const auto ins = rev.in_edges(s);
    for (std::size_t k = 0; k < ins.size(); ++k) out.decoders[i][k] = *code.edges.at(ins[k]).from_source;
  }
  return out;
}

// --- fractional ----------------------------------------------------------

void check_shape(const SumNetwork& net, const FractionalLinearCode& code) {
  const std::size_t k = code.k;
  const std::size_t n = code.n;
  if (k == 0 || n == 0) shape_error("block lengths must be positive");
  auto check = [&](const Matrix& m, std::size_t r, std::size_t c, const std::string& what) {
    if (m.rows != r || m.cols != c || m.data.size() != r * c) shape_error(what + " has the wrong dimensions");
    if (!std::all_of(m.data.begin(), m.data.end(), [&](Elem v) { return v < code.field.p(); })) {
      shape_error(what + " has an entry outside the field");
    }
  };
  if (code.edges.size() != net.edge_count()) shape_error("code covers a different edge set");
  for (const Edge& e : net.edges()) {
    auto it = code.edges.find(e.id);
    if (it == code.edges.end()) shape_error("no local coding for edge '" + e.name + "'");
    const auto& lc = it->second;
    if (lc.from_edges.size() != net.in_edges(e.tail).size()) shape_error("edge '" + e.name + "' input count");
    for (const auto& m : lc.from_edges) check(m, n, n, "edge '" + e.name + "' input map");
    if (lc.from_source.has_value() != net.source_index(e.tail).has_value()) {
      shape_error("edge '" + e.name + "' source-symbol input does not match its tail");
    }
    if (lc.from_source) check(*lc.from_source, n, k, "edge '" + e.name + "' source map");
  }
  if (code.decoders.size() != net.terminals().size()) shape_error("wrong number of terminal decoders");
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    check(code.decoders[j], k, n * net.in_edges(net.terminals()[j]).size(), "terminal decoder");
  }
}

FractionalLinearCode wrap_scalar(const SumNetwork& net, const ScalarLinearCode& code) {
  check_shape(net, code);
  FractionalLinearCode out;
  out.field = code.field;
  for (const auto& [id, lc] : code.edges) {
    FractionalLocalCoding flc;
    for (Elem v : lc.from_edges) {
      Matrix m(1, 1);
      m.at(0, 0) = v;
      flc.from_edges.push_back(m);
    }
    if (lc.from_source) {
      Matrix m(1, 1);
      m.at(0, 0) = *lc.from_source;
      flc.from_source = m;
    }
    out.edges.emplace(id, std::move(flc));
  }
  for (const auto& d : code.decoders) {
    Matrix m(1, d.size());
    m.data = d;
    out.decoders.push_back(m);
  }
  return out;
}

std::map<EdgeId, Matrix> transfer_matrices(const SumNetwork& net, const FractionalLinearCode& code) {
  check_shape(net, code);
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  const std::size_t k = code.k;
  std::map<EdgeId, Matrix> out;
  for (EdgeId eid : edge_order(net)) {
    const Edge& e = net.edge(eid);
    const auto& lc = code.edges.at(eid);
    Matrix t(code.n, l * k);
    const auto ins = net.in_edges(e.tail);
    for (std::size_t i = 0; i < ins.size(); ++i) accumulate(f, t, multiply(f, lc.from_edges[i], out.at(ins[i])));
    if (lc.from_source) {
      const std::size_t s = *net.source_index(e.tail);
      for (std::size_t r = 0; r < code.n; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          t.at(r, s * k + c) = f.add(t.at(r, s * k + c), lc.from_source->at(r, c));
        }
      }
    }
    out.emplace(eid, std::move(t));
  }
  return out;
}

bool verify_fractional(const SumNetwork& net, const FractionalLinearCode& code) {
  const auto tm = transfer_matrices(net, code);
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  const std::size_t k = code.k;
  for (std::size_t j = 0; j < net.terminals().size(); ++j) {
    Matrix stacked;
    for (EdgeId e : net.in_edges(net.terminals()[j])) stacked = stack_rows(stacked, tm.at(e));
    if (stacked.rows == 0) return false;
    const Matrix composite = multiply(f, code.decoders[j], stacked);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < l * k; ++c) {
        if (composite.at(r, c) != (c % k == r ? 1U : 0U)) return false;
      }
    }
  }
  return true;
}

bool verify_fractional_exhaustive(const SumNetwork& net, const FractionalLinearCode& code) {
  check_shape(net, code);
  const PrimeField& f = code.field;
  const std::size_t l = net.sources().size();
  const std::size_t k = code.k;
  const std::size_t n = code.n;
  const std::size_t width = l * k;
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < width; ++i) {
    states *= f.p();
    if (states > 729) throw Error(ErrorCode::SearchSpaceTooLarge, "more than 729 source tuples");
  }
  const auto order = edge_order(net);
  std::vector<Elem> x(width, 0);
  for (std::uint64_t s = 0; s < states; ++s) {
    std::uint64_t rem = s;
    for (std::size_t i = 0; i < width; ++i) {
      x[i] = static_cast<Elem>(rem % f.p());
      rem /= f.p();
    }
    std::map<EdgeId, std::vector<Elem>> packet;
    for (EdgeId eid : order) {
      const Edge& e = net.edge(eid);
      const auto& lc = code.edges.at(eid);
      std::vector<Elem> y(n, 0);
      const auto ins = net.in_edges(e.tail);
      for (std::size_t i = 0; i < ins.size(); ++i) {
        const auto& u = packet.at(ins[i]);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) y[r] = f.add(y[r], f.mul(lc.from_edges[i].at(r, c), u[c]));
        }
      }
      if (lc.from_source) {
        const std::size_t src = *net.source_index(e.tail);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < k; ++c) y[r] = f.add(y[r], f.mul(lc.from_source->at(r, c), x[src * k + c]));
        }
      }
      packet.emplace(eid, std::move(y));
    }
    for (std::size_t j = 0; j < net.terminals().size(); ++j) {
      std::vector<Elem> incoming;
      for (EdgeId e : net.in_edges(net.terminals()[j])) {
        const auto& u = packet.at(e);
        incoming.insert(incoming.end(), u.begin(), u.end());
      }
      for (std::size_t r = 0; r < k; ++r) {
        Elem got = 0;
        for (std::size_t c = 0; c < incoming.size(); ++c) got = f.add(got, f.mul(code.decoders[j].at(r, c), incoming[c]));
        Elem want = 0;
        for (std::size_t src = 0; src < l; ++src) want = f.add(want, x[src * k + r]);
        if (got != want) return false;
      }
    }
  }
  return true;
}

}  // namespace sumnet
