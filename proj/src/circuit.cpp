#include "ecsynth/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ecsynth/errors.hpp"

namespace ecsynth {

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kNot: return "not";
    case GateKind::kCnot: return "cnot";
    case GateKind::kToffoli: return "toffoli";
    case GateKind::kH: return "h";
    case GateKind::kT: return "t";
    case GateKind::kTdg: return "t_dagger";
    case GateKind::kS: return "s";
    case GateKind::kSdg: return "s_dagger";
  }
  return "?";
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kCnot: return 2;
    case GateKind::kToffoli: return 3;
    default: return 1;
  }
}

bool is_classical(GateKind kind) {
  return kind == GateKind::kNot || kind == GateKind::kCnot || kind == GateKind::kToffoli;
}

bool is_t_like(GateKind kind) { return kind == GateKind::kT || kind == GateKind::kTdg; }

GateKind dagger(GateKind kind) {
  switch (kind) {
    case GateKind::kT: return GateKind::kTdg;
    case GateKind::kTdg: return GateKind::kT;
    case GateKind::kS: return GateKind::kSdg;
    case GateKind::kSdg: return GateKind::kS;
    default: return kind;
  }
}

// ---------------------------------------------------------------- Circuit

WireId Circuit::add_wire(std::string name, bool input, bool output) {
  if (name.empty()) throw CircuitError("wire name must not be empty");
  const auto id = static_cast<WireId>(wires_.size());
  if (!by_name_.emplace(name, id).second) throw CircuitError("duplicate wire name '" + name + "'");
  wires_.push_back(Wire{std::move(name), input, output});
  out_perm_.push_back(id);
  return id;
}

RegisterRef Circuit::add_register(const std::string& name, std::size_t n, bool input, bool output) {
  RegisterRef reg{name, {}};
  reg.wires.reserve(n);
  for (std::size_t i = 0; i < n; ++i) reg.wires.push_back(add_wire(name + "_" + std::to_string(i), input, output));
  return reg;
}

std::optional<WireId> Circuit::find_wire(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void Circuit::set_io(WireId id, bool input, bool output) {
  wires_.at(id).input = input;
  wires_.at(id).output = output;
}

void Circuit::validate(const Gate& gate) const {
  const auto ops = gate.operands();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k] >= wires_.size()) throw CircuitError("gate references unknown wire " + std::to_string(ops[k]));
    for (std::size_t l = 0; l < k; ++l) {
      if (ops[l] == ops[k]) {
        throw CircuitError(std::string(gate_kind_name(gate.kind)) + " gate repeats operand '" + wires_[ops[k]].name + "'");
      }
    }
  }
  for (std::size_t k = ops.size(); k < 3; ++k) {
    if (gate.wires[k] != 0) throw CircuitError("unused operand slot must be zero");
  }
}

void Circuit::append(const Gate& gate) {
  validate(gate);
  gates_.push_back(gate);
}

void Circuit::replace_gate(std::size_t index, const Gate& gate) {
  if (index >= gates_.size()) throw CircuitError("gate index out of range");
  validate(gate);
  gates_[index] = gate;
}

void Circuit::begin_group(std::string label) {
  groups_.push_back(Group{std::move(label), gates_.size(), gates_.size(), open_groups_.size()});
  open_groups_.push_back(groups_.size() - 1);
}

void Circuit::end_group() {
  if (open_groups_.empty()) throw CircuitError("end_group without open group");
  groups_[open_groups_.back()].end = gates_.size();
  open_groups_.pop_back();
}

void Circuit::add_group(std::string label, std::size_t begin, std::size_t end) {
  if (begin > end || end > gates_.size()) throw CircuitError("group span out of range");
  if (!open_groups_.empty()) throw CircuitError("add_group while a group is open");
  // An empty span counts as inside a group only when strictly between its ends.
  auto encloses = [](std::size_t ob, std::size_t oe, std::size_t b, std::size_t e) {
    if (b == e) return ob < b && b < oe;
    return ob <= b && e <= oe;
  };
  std::size_t depth = 0;
  for (const Group& g : groups_) {
    const bool nonempty = g.begin != g.end && begin != end;
    const bool disjoint = end <= g.begin || begin >= g.end;
    if (nonempty && !disjoint && !encloses(g.begin, g.end, begin, end) && !encloses(begin, end, g.begin, g.end)) {
      throw CircuitError("group '" + label + "' crosses group '" + g.label + "'");
    }
    if (encloses(g.begin, g.end, begin, end)) ++depth;
  }
  for (Group& g : groups_) {
    const bool same_span = g.begin == begin && g.end == end;
    if (!same_span && encloses(begin, end, g.begin, g.end)) ++g.depth;
  }
  groups_.push_back(Group{std::move(label), begin, end, depth});
  std::stable_sort(groups_.begin(), groups_.end(), [](const Group& x, const Group& y) {
    if (x.begin != y.begin) return x.begin < y.begin;
    return x.depth < y.depth;
  });
}

bool Circuit::has_identity_permutation() const {
  for (std::size_t i = 0; i < out_perm_.size(); ++i) {
    if (out_perm_[i] != i) return false;
  }
  return true;
}

namespace {

void check_bijection(const std::vector<WireId>& p, std::size_t width) {
  if (p.size() != width) throw CircuitError("permutation has wrong length");
  std::vector<bool> seen(width, false);
  for (WireId w : p) {
    if (w >= width || seen[w]) throw CircuitError("output relabeling is not a bijection");
    seen[w] = true;
  }
}

}  // namespace

void Circuit::relabel(const std::vector<WireId>& p) {
  check_bijection(p, width());
  std::vector<WireId> next(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) next[i] = out_perm_[p[i]];
  out_perm_ = std::move(next);
}

void Circuit::set_out_permutation(std::vector<WireId> p) {
  check_bijection(p, width());
  out_perm_ = std::move(p);
}

Circuit compose(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  if (!out.open_groups_.empty() || !second.open_groups_.empty()) throw CircuitError("compose with open groups");
  // Logical wire of `second` -> physical wire of the result.
  std::vector<WireId> map(second.width());
  for (WireId w = 0; w < second.width(); ++w) {
    const Wire& wire = second.wire(w);
    if (auto id = first.find_wire(wire.name)) {
      map[w] = first.out_perm_[*id];
    } else {
      map[w] = out.add_wire(wire.name, wire.input, wire.output);
    }
  }
  const std::size_t offset = out.gates_.size();
  out.gates_.reserve(offset + second.gates_.size());
  for (Gate g : second.gates_) {
    for (std::size_t k = 0; k < g.arity(); ++k) g.wires[k] = map[g.wires[k]];
    out.gates_.push_back(g);
  }
  for (Group g : second.groups_) {
    g.begin += offset;
    g.end += offset;
    out.groups_.push_back(std::move(g));
  }
  // second's logical position i (a wire of second) ends up at map[second.perm[i]].
  std::vector<WireId> perm = out.out_perm_;
  std::vector<bool> covered(out.width(), false);
  for (WireId i = 0; i < second.width(); ++i) {
    const WireId logical = first.find_wire(second.wire(i).name).value_or(map[i]);
    perm[logical] = map[second.out_perm_[i]];
  }
  out.set_out_permutation(std::move(perm));
  return out;
}

namespace {

std::string inverse_label(const std::string& label) {
  if (label.size() > 1 && label[0] == 'I') return label.substr(1);
  return "I" + label;
}

}  // namespace

Circuit inverse(const Circuit& c) {
  if (!c.open_groups_.empty()) throw CircuitError("inverse with open groups");
  Circuit out;
  out.wires_ = c.wires_;
  out.by_name_ = c.by_name_;
  // Undo the relabeling first: physical wire w of c is logical position inv[w].
  std::vector<WireId> inv(c.width());
  for (std::size_t i = 0; i < c.out_perm_.size(); ++i) inv[c.out_perm_[i]] = static_cast<WireId>(i);
  out.out_perm_ = inv;
  out.gates_.reserve(c.gates_.size());
  for (auto it = c.gates_.rbegin(); it != c.gates_.rend(); ++it) {
    Gate g = *it;
    g.kind = dagger(g.kind);
    for (std::size_t k = 0; k < g.arity(); ++k) g.wires[k] = inv[g.wires[k]];
    out.gates_.push_back(g);
  }
  const std::size_t n = c.gates_.size();
  for (auto it = c.groups_.rbegin(); it != c.groups_.rend(); ++it) {
    out.groups_.push_back(Group{inverse_label(it->label), n - it->end, n - it->begin, it->depth});
  }
  std::stable_sort(out.groups_.begin(), out.groups_.end(), [](const Group& a, const Group& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    return a.depth < b.depth;
  });
  return out;
}

std::array<Gate, 15> toffoli_template(WireId a, WireId b, WireId c) {
  using K = GateKind;
  return {{
      Gate::single(K::kH, c),
      Gate::cnot(a, b),
      Gate::single(K::kTdg, b),
      Gate::cnot(c, a),
      Gate::single(K::kTdg, a),
      Gate::cnot(c, b),
      Gate::single(K::kT, b),
      Gate::cnot(c, a),
      Gate::single(K::kT, c),
      Gate::cnot(a, b),
      Gate::single(K::kT, a),
      Gate::single(K::kTdg, b),
      Gate::cnot(c, b),
      Gate::single(K::kT, b),
      Gate::single(K::kH, c),
  }};
}

Circuit decompose_toffoli(const Circuit& c) {
  Circuit out;
  out.wires_ = c.wires_;
  out.by_name_ = c.by_name_;
  out.out_perm_ = c.out_perm_;
  std::size_t toffolis = 0;
  for (const Gate& g : c.gates_) toffolis += g.kind == GateKind::kToffoli ? 1 : 0;
  out.gates_.reserve(c.gates_.size() + 14 * toffolis);
  // new_index[i] = position of old gate i in the output; new_index[size] = output size.
  std::vector<std::size_t> new_index(c.gates_.size() + 1);
  for (std::size_t i = 0; i < c.gates_.size(); ++i) {
    new_index[i] = out.gates_.size();
    const Gate& g = c.gates_[i];
    if (g.kind == GateKind::kToffoli) {
      for (const Gate& t : toffoli_template(g.wires[0], g.wires[1], g.wires[2])) out.gates_.push_back(t);
    } else {
      out.gates_.push_back(g);
    }
  }
  new_index[c.gates_.size()] = out.gates_.size();
  for (Group g : c.groups_) {
    g.begin = new_index[g.begin];
    g.end = new_index[g.end];
    out.groups_.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------- metrics

std::size_t GateCounts::total() const { return std::accumulate(by_kind.begin(), by_kind.end(), std::size_t{0}); }

namespace {

// Earliest-start scheduler over per-wire finish times; reset touches only used wires.
class Scheduler {
 public:
  explicit Scheduler(std::size_t width) : finish_(width, 0), t_level_(width, 0) {}

  void apply(const Gate& g) {
    std::size_t start = 0;
    std::size_t t = 0;
    for (WireId w : g.operands()) {
      start = std::max(start, finish_[w]);
      t = std::max(t, t_level_[w]);
      touched_.push_back(w);
    }
    ++start;
    if (is_t_like(g.kind)) ++t;
    for (WireId w : g.operands()) {
      finish_[w] = start;
      t_level_[w] = t;
    }
    depth_ = std::max(depth_, start);
    t_depth_ = std::max(t_depth_, t);
    ++counts_.by_kind[static_cast<std::size_t>(g.kind)];
  }

  template <bool kExpand>
  void feed(const Gate& g) {
    if (kExpand && g.kind == GateKind::kToffoli) {
      for (const Gate& t : toffoli_template(g.wires[0], g.wires[1], g.wires[2])) apply(t);
    } else {
      apply(g);
    }
  }

  void reset() {
    for (WireId w : touched_) {
      finish_[w] = 0;
      t_level_[w] = 0;
    }
    touched_.clear();
    depth_ = 0;
    t_depth_ = 0;
    counts_ = {};
  }

  std::size_t depth() const { return depth_; }
  std::size_t t_depth() const { return t_depth_; }
  const GateCounts& counts() const { return counts_; }

 private:
  std::vector<std::size_t> finish_;
  std::vector<std::size_t> t_level_;
  std::vector<WireId> touched_;
  std::size_t depth_ = 0;
  std::size_t t_depth_ = 0;
  GateCounts counts_;
};

template <bool kExpand>
ResourceReport compute_metrics(const Circuit& c, bool with_groups) {
  ResourceReport r;
  Scheduler sched(c.width());
  for (const Gate& g : c.gates()) sched.feed<kExpand>(g);
  r.counts = sched.counts();
  r.total_gates = r.counts.total();
  r.toffoli_count = r.counts.of(GateKind::kToffoli);
  r.cnot_count = r.counts.of(GateKind::kCnot);
  r.t_count = r.counts.t_count();
  r.depth = sched.depth();
  r.t_depth = sched.t_depth();
  r.width = c.width();
  if (with_groups) {
    Scheduler local(c.width());
    for (const Group& g : c.groups()) {
      local.reset();
      for (std::size_t i = g.begin; i < g.end; ++i) local.feed<kExpand>(c.gates()[i]);
      r.groups.push_back(GroupMetrics{g.label, g.depth, g.begin, g.end, local.counts(), local.depth(), local.t_depth()});
    }
  }
  return r;
}

}  // namespace

ResourceReport metrics(const Circuit& c, bool with_groups) { return compute_metrics<false>(c, with_groups); }

ResourceReport decomposed_metrics(const Circuit& c, bool with_groups) { return compute_metrics<true>(c, with_groups); }

}  // namespace ecsynth
