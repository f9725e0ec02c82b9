#include "sumnet/constructor.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <random>
#include <set>

namespace sumnet {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}
  bool passed() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

std::vector<EdgeId> edge_order(const SumNetwork& net) {
  std::vector<EdgeId> out;
  for (NodeId v : net.topological_order()) {
    for (EdgeId e : net.out_edges(v)) out.push_back(e);
  }
  return out;
}

std::vector<Elem> canonical_set(const PrimeField& f, std::vector<Elem> values) {
  for (Elem& v : values) v %= f.p();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Elem> xor_set(const PrimeField& f) { return canonical_set(f, {0, 1, f.minus_one()}); }

// --- scalar search -------------------------------------------------------

struct ScalarEdgeModel {
  EdgeId id;
  std::vector<std::size_t> inputs;  // positions into the per-edge vector table
  std::optional<std::size_t> source;
  std::size_t first_slot = 0;
  bool fixed = false;  // zero or one input: nothing to choose
};

class ScalarSearch {
 public:
  ScalarSearch(const SumNetwork& net, const PrimeField& field) : net_(net), f_(field) {
    for (EdgeId e : edge_order(net)) {
      ScalarEdgeModel m{e, {}, net.source_index(net.edge(e).tail), 0, false};
      for (EdgeId in : net.in_edges(net.edge(e).tail)) m.inputs.push_back(net.edge_index(in));
      const std::size_t arity = m.inputs.size() + (m.source ? 1 : 0);
      m.fixed = arity <= 1;
      m.first_slot = slots_;
      if (!m.fixed) slots_ += arity;
      model_.push_back(std::move(m));
    }
  }

  std::size_t slots() const { return slots_; }

  // Enumerates candidates in lexicographic slot order. Returns the first
  // code whose decoders can be completed.
  SearchOutcome<ScalarLinearCode> run(const std::vector<Elem>& coeffs, bool xor_decoders,
                                      std::uint64_t max_codes, const Deadline& deadline) {
    SearchOutcome<ScalarLinearCode> out;
    std::vector<std::size_t> digit(slots_, 0);
    std::vector<Elem> slot(slots_, coeffs.empty() ? 0 : coeffs[0]);
    const std::size_t l = net_.sources().size();
    std::vector<TransferVector> vec(net_.edge_count(), TransferVector(l, 0));
    if (coeffs.empty() && slots_ > 0) {
      out.complete = true;
      return out;
    }
    while (true) {
      if (out.examined >= max_codes || (out.examined % 256 == 0 && deadline.passed())) return out;
      ++out.examined;
      compute(slot, vec);
      if (auto dec = decoders(vec, xor_decoders)) {
        out.code = build(slot, *dec);
        out.complete = true;
        return out;
      }
      std::size_t pos = slots_;
      bool wrapped = true;
      while (pos > 0) {
        --pos;
        if (++digit[pos] < coeffs.size()) {
          slot[pos] = coeffs[digit[pos]];
          wrapped = false;
          break;
        }
        digit[pos] = 0;
        slot[pos] = coeffs[0];
      }
      if (wrapped) {
        out.complete = true;
        return out;
      }
    }
  }

 private:
  void compute(const std::vector<Elem>& slot, std::vector<TransferVector>& vec) const {
    const std::size_t l = net_.sources().size();
    for (const auto& m : model_) {
      auto& v = vec[net_.edge_index(m.id)];
      std::fill(v.begin(), v.end(), 0);
      if (m.fixed) {
        if (!m.inputs.empty()) v = vec[m.inputs[0]];
        else if (m.source) v[*m.source] = 1;
        continue;
      }
      std::size_t s = m.first_slot;
      for (std::size_t in : m.inputs) {
        const Elem c = slot[s++];
        if (c == 0) continue;
        for (std::size_t i = 0; i < l; ++i) v[i] = f_.add(v[i], f_.mul(c, vec[in][i]));
      }
      if (m.source) v[*m.source] = f_.add(v[*m.source], slot[s]);
    }
  }

  std::optional<std::vector<std::vector<Elem>>> decoders(const std::vector<TransferVector>& vec,
                                                         bool xor_only) const {
    const std::size_t l = net_.sources().size();
    std::vector<std::vector<Elem>> out;
    for (NodeId t : net_.terminals()) {
      const auto ins = net_.in_edges(t);
      if (ins.empty()) return std::nullopt;
      if (xor_only) {
        auto d = xor_decoder(ins, vec);
        if (!d) return std::nullopt;
        out.push_back(std::move(*d));
        continue;
      }
      Matrix a(ins.size(), l);
      for (std::size_t r = 0; r < ins.size(); ++r) {
        const auto& v = vec[net_.edge_index(ins[r])];
        for (std::size_t c = 0; c < l; ++c) a.at(r, c) = v[c];
      }
      Matrix target(1, l);
      std::fill(target.data.begin(), target.data.end(), 1);
      auto x = solve_left(f_, a, target);
      if (!x) return std::nullopt;
      out.push_back(x->data);
    }
    return out;
  }

  std::optional<std::vector<Elem>> xor_decoder(std::span<const EdgeId> ins,
                                               const std::vector<TransferVector>& vec) const {
    const auto choices = xor_set(f_);
    const std::size_t l = net_.sources().size();
    std::vector<std::size_t> digit(ins.size(), 0);
    while (true) {
      TransferVector acc(l, 0);
      for (std::size_t r = 0; r < ins.size(); ++r) {
        const Elem c = choices[digit[r]];
        if (c == 0) continue;
        const auto& v = vec[net_.edge_index(ins[r])];
        for (std::size_t i = 0; i < l; ++i) acc[i] = f_.add(acc[i], f_.mul(c, v[i]));
      }
      if (std::all_of(acc.begin(), acc.end(), [](Elem x) { return x == 1; })) {
        std::vector<Elem> d;
        for (std::size_t r = 0; r < ins.size(); ++r) d.push_back(choices[digit[r]]);
        return d;
      }
      std::size_t pos = ins.size();
      bool wrapped = true;
      while (pos > 0) {
        --pos;
        if (++digit[pos] < choices.size()) {
          wrapped = false;
          break;
        }
        digit[pos] = 0;
      }
      if (wrapped) return std::nullopt;
    }
  }

  ScalarLinearCode build(const std::vector<Elem>& slot, const std::vector<std::vector<Elem>>& dec) const {
    ScalarLinearCode code = ScalarLinearCode::zero(net_, f_);
    for (const auto& m : model_) {
      LocalCoding& lc = code.edges.at(m.id);
      if (m.fixed) {
        if (!m.inputs.empty()) lc.from_edges[0] = 1;
        else if (m.source) lc.from_source = 1;
        continue;
      }
      std::size_t s = m.first_slot;
      for (std::size_t i = 0; i < m.inputs.size(); ++i) lc.from_edges[i] = slot[s++];
      if (m.source) lc.from_source = slot[s];
    }
    code.decoders = dec;
    return code;
  }

  const SumNetwork& net_;
  PrimeField f_;
  std::vector<ScalarEdgeModel> model_;
  std::size_t slots_ = 0;
};

void require_verified(const SumNetwork& net, const ScalarLinearCode& code) {
  if (!verify_transfer(net, code) || !verify_exhaustive(net, code)) {
    throw std::logic_error("constructed code failed verification");
  }
}

}  // namespace

SearchOutcome<ScalarLinearCode> search_scalar(const SumNetwork& net, const PrimeField& field,
                                              const SearchBudget& budget, bool xor_only) {
  ScalarSearch search(net, field);
  const Deadline deadline(budget.time_limit_seconds);
  SearchOutcome<ScalarLinearCode> result;

  auto finish = [&](SearchOutcome<ScalarLinearCode> r, bool over_field) {
    r.examined += result.examined;
    r.exhaustive_over_field = over_field && r.complete;
    if (r.code) require_verified(net, *r.code);
    return r;
  };

  if (!budget.coefficient_set.empty()) {
    auto coeffs = canonical_set(field, budget.coefficient_set);
    const bool full = coeffs.size() == field.p();
    return finish(search.run(coeffs, xor_only, budget.max_codes, deadline), full && !xor_only);
  }
  const auto xors = xor_set(field);
  if (xor_only) return finish(search.run(xors, true, budget.max_codes, deadline), false);

  result = search.run(xors, false, budget.max_codes, deadline);
  if (result.code || xors.size() == field.p()) {
    const bool full = xors.size() == field.p();
    SearchOutcome<ScalarLinearCode> r = result;
    result.examined = 0;
    return finish(r, full);
  }
  const std::uint64_t left = budget.max_codes - std::min(budget.max_codes, result.examined);
  return finish(search.run(field.elements(), false, left, deadline), true);
}

// --- fractional search -----------------------------------------------------

namespace {

struct FracInput {
  bool from_source = false;
  std::size_t index = 0;  // edge position or source index
  Matrix map;
  bool fixed = false;
  std::size_t first_entry = 0;
};

struct FracEdgeModel {
  EdgeId id;
  std::vector<FracInput> inputs;
};

class FractionalSearch {
 public:
  FractionalSearch(const SumNetwork& net, const PrimeField& field, std::size_t k, std::size_t n,
                   const FractionalSearchOptions& options)
      : net_(net), f_(field), k_(k), n_(n), options_(options) {
    const std::size_t l = net.sources().size();
    for (EdgeId e : edge_order(net)) {
      FracEdgeModel m{e, {}};
      const Edge& edge = net.edge(e);
      for (EdgeId in : net.in_edges(edge.tail)) m.inputs.push_back({false, net.edge_index(in), Matrix(n, n)});
      if (auto s = net.source_index(edge.tail)) m.inputs.push_back({true, *s, Matrix(n, k)});
      const bool single = m.inputs.size() == 1;
      for (auto& in : m.inputs) {
        const std::size_t width = in.map.cols;
        if (single && options.normalize_single_inputs && width <= n) {
          in.fixed = true;
          in.map = Matrix::embedding(n, width);
        } else {
          in.first_entry = entries_;
          entries_ += in.map.data.size();
        }
      }
      model_.push_back(std::move(m));
    }
    target_ = Matrix(k, l * k);
    for (std::size_t s = 0; s < l; ++s) {
      for (std::size_t i = 0; i < k; ++i) target_.at(i, s * k + i) = 1;
    }
  }

  std::size_t entries() const { return entries_; }

  SearchOutcome<FractionalLinearCode> run(const SearchBudget& budget) {
    SearchOutcome<FractionalLinearCode> out;
    const Deadline deadline(budget.time_limit_seconds);
    std::uint64_t space = 1;
    bool enumerable = true;
    for (std::size_t i = 0; i < entries_; ++i) {
      if (space > budget.max_codes / f_.p()) {
        enumerable = false;
        break;
      }
      space *= f_.p();
    }
    std::vector<Elem> entry(entries_, 0);
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<Elem> pick(0, f_.p() - 1);
    while (out.examined < budget.max_codes) {
      if (out.examined % 256 == 0 && deadline.passed()) return out;
      if (!enumerable) {
        for (Elem& v : entry) v = pick(rng);
      }
      ++out.examined;
      if (auto code = attempt(entry)) {
        out.code = std::move(code);
        out.complete = true;
        return out;
      }
      if (enumerable) {
        std::size_t pos = entries_;
        bool wrapped = true;
        while (pos > 0) {
          --pos;
          if (++entry[pos] < f_.p()) {
            wrapped = false;
            break;
          }
          entry[pos] = 0;
        }
        if (wrapped) {
          out.complete = true;
          out.exhaustive_over_field = true;
          return out;
        }
      }
    }
    return out;
  }

 private:
  Matrix map_of(const FracInput& in, const std::vector<Elem>& entry) const {
    if (in.fixed) return in.map;
    Matrix m(in.map.rows, in.map.cols);
    std::copy(entry.begin() + static_cast<std::ptrdiff_t>(in.first_entry),
              entry.begin() + static_cast<std::ptrdiff_t>(in.first_entry + m.data.size()), m.data.begin());
    return m;
  }

  std::optional<FractionalLinearCode> attempt(const std::vector<Elem>& entry) const {
    const std::size_t l = net_.sources().size();
    std::vector<Matrix> transfer(net_.edge_count());
    for (const auto& m : model_) {
      Matrix t(n_, l * k_);
      for (const auto& in : m.inputs) {
        const Matrix map = map_of(in, entry);
        if (in.from_source) {
          for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < k_; ++c) {
              t.at(r, in.index * k_ + c) = f_.add(t.at(r, in.index * k_ + c), map.at(r, c));
            }
          }
        } else {
          accumulate(f_, t, multiply(f_, map, transfer[in.index]));
        }
      }
      transfer[net_.edge_index(m.id)] = std::move(t);
    }
    std::vector<Matrix> decoders;
    for (NodeId term : net_.terminals()) {
      Matrix stacked;
      for (EdgeId e : net_.in_edges(term)) stacked = stack_rows(stacked, transfer[net_.edge_index(e)]);
      if (stacked.rows == 0) return std::nullopt;
      if (options_.prune_by_rank && rank(f_, stacked) < k_) return std::nullopt;
      auto d = solve_left(f_, stacked, target_);
      if (!d) return std::nullopt;
      decoders.push_back(std::move(*d));
    }
    FractionalLinearCode code;
    code.field = f_;
    code.k = k_;
    code.n = n_;
    for (const auto& m : model_) {
      FractionalLocalCoding lc;
      for (const auto& in : m.inputs) {
        if (in.from_source) lc.from_source = map_of(in, entry);
        else lc.from_edges.push_back(map_of(in, entry));
      }
      code.edges.emplace(m.id, std::move(lc));
    }
    code.decoders = std::move(decoders);
    return code;
  }

  const SumNetwork& net_;
  PrimeField f_;
  std::size_t k_;
  std::size_t n_;
  FractionalSearchOptions options_;
  std::vector<FracEdgeModel> model_;
  std::size_t entries_ = 0;
  Matrix target_;
};

}  // namespace

SearchOutcome<FractionalLinearCode> search_fractional(const SumNetwork& net, const PrimeField& field,
                                                      std::size_t k, std::size_t n,
                                                      const SearchBudget& budget,
                                                      const FractionalSearchOptions& options) {
  if (k == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "block lengths must be positive");
  FractionalSearch search(net, field, k, n, options);
  auto out = search.run(budget);
  if (out.code) {
    bool ok = verify_fractional(net, *out.code);
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < net.sources().size() * k && states <= 729; ++i) states *= field.p();
    if (ok && states <= 729) ok = verify_fractional_exhaustive(net, *out.code);
    if (!ok) throw std::logic_error("fractional search produced an unverified code");
  }
  return out;
}

// --- paths -----------------------------------------------------------------

std::optional<Path> shortest_path(const SumNetwork& net, NodeId from, NodeId to,
                                  std::span<const EdgeId> avoid) {
  if (!net.has_node(from) || !net.has_node(to)) throw Error(ErrorCode::UnknownNode, "unknown path endpoint");
  if (from == to) return Path{};
  std::vector<char> skip(net.edge_id_bound(), 0);
  for (EdgeId e : avoid) {
    if (net.has_edge(e)) skip[e.value] = 1;
  }
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(net.node_count(), kFar);
  std::deque<NodeId> queue{to};
  dist[to.value] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (EdgeId e : net.in_edges(v)) {
      if (skip[e.value]) continue;
      NodeId u = net.edge(e).tail;
      if (dist[u.value] == kFar) {
        dist[u.value] = dist[v.value] + 1;
        queue.push_back(u);
      }
    }
  }
  if (dist[from.value] == kFar) return std::nullopt;
  Path path;
  for (NodeId v = from; v != to;) {
    for (EdgeId e : net.out_edges(v)) {
      NodeId h = net.edge(e).head;
      if (!skip[e.value] && dist[h.value] + 1 == dist[v.value]) {
        path.push_back(e);
        v = h;
        break;
      }
    }
  }
  return path;
}

namespace {

std::vector<NodeId> path_nodes(const SumNetwork& net, NodeId start, const Path& p) {
  std::vector<NodeId> nodes{start};
  for (EdgeId e : p) nodes.push_back(net.edge(e).head);
  return nodes;
}

// Follows `branch` until it first touches a node of `trunk`, then follows the
// trunk to its end. Both paths must end at the same node.
Path merge_into(const SumNetwork& net, NodeId branch_start, const Path& branch, NodeId trunk_start,
                const Path& trunk) {
  const auto trunk_nodes = path_nodes(net, trunk_start, trunk);
  const auto branch_nodes = path_nodes(net, branch_start, branch);
  for (std::size_t i = 0; i < branch_nodes.size(); ++i) {
    auto it = std::find(trunk_nodes.begin(), trunk_nodes.end(), branch_nodes[i]);
    if (it == trunk_nodes.end()) continue;
    Path merged(branch.begin(), branch.begin() + static_cast<std::ptrdiff_t>(i));
    merged.insert(merged.end(), trunk.begin() + (it - trunk_nodes.begin()), trunk.end());
    return merged;
  }
  return branch;
}

Path require_path(const SumNetwork& net, NodeId from, NodeId to, std::span<const EdgeId> avoid,
                  const char* what) {
  auto p = shortest_path(net, from, to, avoid);
  if (!p) throw Error(ErrorCode::NoValidPaths, std::string("no ") + what + " path");
  return *p;
}

struct LabeledNodes {
  NodeId s[3];
  NodeId t[3];
};

LabeledNodes labeled(const SumNetwork& net, const Labeling& lab) {
  LabeledNodes out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out.s[i] = net.sources()[lab.source_perm[i]];
    out.t[i] = net.terminals()[lab.terminal_perm[i]];
  }
  return out;
}

}  // namespace

PathSet find_theorem2_paths(const SumNetwork& net, const WitnessPair& w) {
  const LabeledNodes ln = labeled(net, w.labeling);
  const Edge& e1 = net.edge(w.e1);
  const Edge& e2 = net.edge(w.e2);
  const EdgeId only_e1[] = {w.e1};
  const EdgeId only_e2[] = {w.e2};
  PathSet ps;
  ps.q1 = require_path(net, ln.s[0], ln.t[0], only_e1, "(s1,t1) avoiding e1");
  ps.q2 = require_path(net, ln.s[1], ln.t[1], only_e2, "(s2,t2) avoiding e2");
  ps.r1 = require_path(net, ln.s[0], ln.t[1], {}, "(s1,t2)");
  ps.r2 = require_path(net, ln.s[1], ln.t[0], {}, "(s2,t1)");
  ps.s1_to_e1 = require_path(net, ln.s[0], e1.tail, {}, "(s1,tail(e1))");
  ps.s2_to_e2 = require_path(net, ln.s[1], e2.tail, {}, "(s2,tail(e2))");
  ps.s3_to_e1 = merge_into(net, ln.s[2], require_path(net, ln.s[2], e1.tail, {}, "(s3,tail(e1))"), ln.s[0],
                           ps.s1_to_e1);
  ps.s3_to_e2 = merge_into(net, ln.s[2], require_path(net, ln.s[2], e2.tail, {}, "(s3,tail(e2))"), ln.s[1],
                           ps.s2_to_e2);
  ps.e1_to_t1 = require_path(net, e1.head, ln.t[0], {}, "(head(e1),t1)");
  ps.e1_to_t3 = require_path(net, e1.head, ln.t[2], {}, "(head(e1),t3)");
  ps.e2_to_t2 = require_path(net, e2.head, ln.t[1], {}, "(head(e2),t2)");
  ps.e2_to_t3 = merge_into(net, e2.head, require_path(net, e2.head, ln.t[2], {}, "(head(e2),t3)"), e1.head,
                           ps.e1_to_t3);
  return ps;
}

ScalarLinearCode construct_theorem2(const SumNetwork& net, const WitnessPair& witness,
                                    const PrimeField& field, const FieldElement& alpha) {
  if (!net.is_three_by_three()) throw Error(ErrorCode::NotThreeByThree, "network must be 3s/3t");
  if (!check_theorem2(net, witness.e1, witness.e2, witness.labeling)) {
    throw Error(ErrorCode::InvalidWitness, "edge pair does not satisfy the except-F2 pair conditions");
  }
  const auto [beta, gamma] = theorem2_constants(field, alpha);
  const PrimeField& f = field;
  const LabeledNodes ln = labeled(net, witness.labeling);
  const PathSet ps = find_theorem2_paths(net, witness);

  // Labeled coordinates (x1, x2, x3) -> original source order.
  auto vec = [&](Elem a, Elem b, Elem c) {
    TransferVector v(3, 0);
    v[witness.labeling.source_perm[0]] = a;
    v[witness.labeling.source_perm[1]] = b;
    v[witness.labeling.source_perm[2]] = c;
    return v;
  };

  // Subnetwork carrying x2 + gamma*x1 to t1 and t2.
  std::set<EdgeId> star;
  for (const Path* p : {&ps.q1, &ps.q2, &ps.r1, &ps.r2}) star.insert(p->begin(), p->end());
  std::vector<Edge> star_edges;
  for (EdgeId e : star) star_edges.push_back(net.edge(e));
  const SumNetwork sub =
      SumNetwork::create(net.node_names(), star_edges, {ln.s[0], ln.s[1]}, {ln.t[0], ln.t[1]});
  SearchBudget sub_budget;
  sub_budget.coefficient_set = xor_set(f);
  auto sub_search = search_scalar(sub, f, sub_budget, false);
  if (!sub_search.code) {
    throw Error(ErrorCode::NoValidPaths, "no {0,+1,-1} sum code on the s1/s2 -> t1/t2 subnetwork");
  }
  const ScalarLinearCode& sub_code = *sub_search.code;

  // Target symbol per trunk edge.
  const TransferVector on_e1 = vec(1, 0, alpha.value());
  const TransferVector on_e2 = vec(0, beta.value(), 1);
  const TransferVector at_t3 = vec(1, 1, 1);
  std::map<EdgeId, TransferVector> target;
  auto assign = [&](const Path& p, const TransferVector& v) {
    for (EdgeId e : p) {
      auto [it, fresh] = target.emplace(e, v);
      if (!fresh && it->second != v) {
        throw Error(ErrorCode::NoValidPaths, "path segments overlap on edge '" + net.edge(e).name + "'");
      }
    }
  };
  const std::set<EdgeId> s1_path(ps.s1_to_e1.begin(), ps.s1_to_e1.end());
  const std::set<EdgeId> s2_path(ps.s2_to_e2.begin(), ps.s2_to_e2.end());
  const std::set<EdgeId> t3_trunk(ps.e1_to_t3.begin(), ps.e1_to_t3.end());
  Path s3_only_1, s3_only_2, merged_1, merged_2, e2_only_t3, t3_shared;
  for (EdgeId e : ps.s3_to_e1) (s1_path.count(e) ? merged_1 : s3_only_1).push_back(e);
  for (EdgeId e : ps.s3_to_e2) (s2_path.count(e) ? merged_2 : s3_only_2).push_back(e);
  for (EdgeId e : ps.e2_to_t3) (t3_trunk.count(e) ? t3_shared : e2_only_t3).push_back(e);
  const std::set<EdgeId> merged_1_set(merged_1.begin(), merged_1.end());
  const std::set<EdgeId> merged_2_set(merged_2.begin(), merged_2.end());
  const std::set<EdgeId> t3_shared_set(t3_shared.begin(), t3_shared.end());
  Path s1_only, s2_only, e1_only_t3;
  for (EdgeId e : ps.s1_to_e1) {
    if (!merged_1_set.count(e)) s1_only.push_back(e);
  }
  for (EdgeId e : ps.s2_to_e2) {
    if (!merged_2_set.count(e)) s2_only.push_back(e);
  }
  for (EdgeId e : ps.e1_to_t3) {
    if (!t3_shared_set.count(e)) e1_only_t3.push_back(e);
  }

  assign(merged_1, on_e1);
  assign(merged_2, on_e2);
  assign(t3_shared, at_t3);
  assign(s1_only, vec(1, 0, 0));
  assign(s2_only, vec(0, 1, 0));
  assign(s3_only_1, vec(0, 0, 1));
  assign(s3_only_2, vec(0, 0, 1));
  assign({witness.e1}, on_e1);
  assign({witness.e2}, on_e2);
  assign(ps.e1_to_t1, on_e1);
  assign(e1_only_t3, on_e1);
  assign(ps.e2_to_t2, on_e2);
  assign(e2_only_t3, on_e2);
  for (EdgeId e : star) {
    if (target.count(e)) {
      throw Error(ErrorCode::NoValidPaths, "subnetwork path shares edge '" + net.edge(e).name + "' with a trunk");
    }
  }

  ScalarLinearCode code = ScalarLinearCode::zero(net, f);
  std::map<EdgeId, TransferVector> carried;
  auto carried_or_zero = [&](EdgeId e) { return carried.count(e) ? carried.at(e) : TransferVector(3, 0); };
  for (EdgeId eid : edge_order(net)) {
    const Edge& e = net.edge(eid);
    LocalCoding& lc = code.edges.at(eid);
    const auto ins = net.in_edges(e.tail);
    const auto src = net.source_index(e.tail);
    if (star.count(eid)) {
      const LocalCoding& sub_lc = sub_code.edges.at(eid);
      const auto sub_ins = sub.in_edges(e.tail);
      for (std::size_t i = 0; i < sub_ins.size(); ++i) {
        const auto pos = static_cast<std::size_t>(std::find(ins.begin(), ins.end(), sub_ins[i]) - ins.begin());
        lc.from_edges[pos] = sub_lc.from_edges[i];
      }
      if (sub_lc.from_source) {
        // x1 enters the subnetwork pre-multiplied by gamma.
        const Elem scale = e.tail == ln.s[0] ? gamma.value() : 1;
        lc.from_source = f.mul(*sub_lc.from_source, scale);
      }
    } else if (auto it = target.find(eid); it != target.end()) {
      // Solve for local coefficients reproducing the target from what the
      // tail receives.
      std::vector<TransferVector> rows;
      for (EdgeId in : ins) rows.push_back(carried_or_zero(in));
      if (src) {
        TransferVector unit(3, 0);
        unit[*src] = 1;
        rows.push_back(unit);
      }
      Matrix a(rows.size(), 3);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < 3; ++c) a.at(r, c) = rows[r][c];
      }
      Matrix b(1, 3);
      b.data = it->second;
      auto x = rows.empty() ? std::nullopt : solve_left(f, a, b);
      if (!x) throw Error(ErrorCode::NoValidPaths, "edge '" + e.name + "' cannot form its target symbol");
      for (std::size_t i = 0; i < ins.size(); ++i) lc.from_edges[i] = x->at(0, i);
      if (src) lc.from_source = x->at(0, ins.size());
    }
    TransferVector v(3, 0);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      const auto u = carried_or_zero(ins[i]);
      for (std::size_t c = 0; c < 3; ++c) v[c] = f.add(v[c], f.mul(lc.from_edges[i], u[c]));
    }
    if (src && lc.from_source) v[*src] = f.add(v[*src], *lc.from_source);
    carried[eid] = v;
  }

  for (std::size_t j = 0; j < 3; ++j) {
    const auto ins = net.in_edges(net.terminals()[j]);
    Matrix a(ins.size(), 3);
    for (std::size_t r = 0; r < ins.size(); ++r) {
      const auto u = carried_or_zero(ins[r]);
      for (std::size_t c = 0; c < 3; ++c) a.at(r, c) = u[c];
    }
    Matrix b(1, 3);
    b.data = {1, 1, 1};
    auto x = ins.empty() ? std::nullopt : solve_left(f, a, b);
    if (!x) {
      throw Error(ErrorCode::NoValidPaths,
                  "terminal '" + net.node_name(net.terminals()[j]) + "' cannot decode the sum");
    }
    code.decoders[j] = x->data;
  }
  require_verified(net, code);
  return code;
}

CutBound cut_bound_check(const SumNetwork& net, const WitnessPair& witness, std::size_t k, std::size_t n) {
  if (k == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "block lengths must be positive");
  if (!check_theorem1(net, witness.e1, witness.e2, witness.labeling)) {
    throw Error(ErrorCode::InvalidWitness, "edge pair does not satisfy the nonsolvable pair conditions");
  }
  CutBound out;
  out.cut_symbols = 2 * static_cast<std::uint64_t>(n);
  out.message_symbols = 3 * static_cast<std::uint64_t>(k);
  out.admissible = out.message_symbols <= out.cut_symbols;
  return out;
}

}  // namespace sumnet
