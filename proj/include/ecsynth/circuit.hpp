#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ecsynth {

enum class GateKind : std::uint8_t { kNot, kCnot, kToffoli, kH, kT, kTdg, kS, kSdg };
inline constexpr std::size_t kGateKindCount = 8;

std::string_view gate_kind_name(GateKind kind);
std::size_t arity(GateKind kind);
/// NOT, CNOT and TOFFOLI.
bool is_classical(GateKind kind);
bool is_t_like(GateKind kind);

using WireId = std::uint32_t;

/// Controls first, target last; unused operand slots are zero.
struct Gate {
  GateKind kind = GateKind::kNot;
  std::array<WireId, 3> wires{};

  static Gate not_gate(WireId t) { return {GateKind::kNot, {t, 0, 0}}; }
  static Gate cnot(WireId c, WireId t) { return {GateKind::kCnot, {c, t, 0}}; }
  static Gate toffoli(WireId c1, WireId c2, WireId t) { return {GateKind::kToffoli, {c1, c2, t}}; }
  static Gate single(GateKind kind, WireId w) { return {kind, {w, 0, 0}}; }

  std::size_t arity() const { return ecsynth::arity(kind); }
  std::span<const WireId> operands() const { return {wires.data(), arity()}; }
  WireId target() const { return wires[arity() - 1]; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Adjoint kind: T <-> T*, S <-> S*, everything else self-inverse.
GateKind dagger(GateKind kind);

struct Wire {
  std::string name;
  /// Carries caller data on entry (otherwise starts in |0>).
  bool input = true;
  /// Holds a result on exit (otherwise scratch that must end in |0>).
  bool output = true;
};

/// Labeled half-open span [begin, end) of gate indices. depth 0 = top level.
struct Group {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t depth = 0;

  friend bool operator==(const Group&, const Group&) = default;
};

/// An ordered list of wire ids standing for one field element (index i = coefficient of x^i).
struct RegisterRef {
  std::string name;
  std::vector<WireId> wires;

  std::size_t size() const noexcept { return wires.size(); }
  WireId operator[](std::size_t i) const { return wires[i]; }
};

/// Gate list over named wires with nested labeled subcircuits and an output relabeling.
class Circuit {
 public:
  WireId add_wire(std::string name, bool input = true, bool output = true);
  /// Wires "<name>_0" ... "<name>_<n-1>".
  RegisterRef add_register(const std::string& name, std::size_t n, bool input = true, bool output = true);

  std::size_t width() const noexcept { return wires_.size(); }
  const Wire& wire(WireId id) const { return wires_.at(id); }
  const std::vector<Wire>& wires() const noexcept { return wires_; }
  std::optional<WireId> find_wire(std::string_view name) const;
  void set_io(WireId id, bool input, bool output);

  /// Validates arity, operand range and distinctness; throws CircuitError.
  void append(const Gate& gate);
  void append_unchecked(const Gate& gate) { gates_.push_back(gate); }
  void reserve(std::size_t gates) { gates_.reserve(gates); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  void replace_gate(std::size_t index, const Gate& gate);

  /// Opens a group at the current end of the gate list; groups close in LIFO order.
  void begin_group(std::string label);
  void end_group();
  /// Labels an existing span; throws CircuitError if it would cross another group.
  void add_group(std::string label, std::size_t begin, std::size_t end);
  const std::vector<Group>& groups() const noexcept { return groups_; }

  /// Logical position i of the output lives on physical wire out_permutation()[i].
  const std::vector<WireId>& out_permutation() const noexcept { return out_perm_; }
  bool has_identity_permutation() const;
  /// After the call, logical position i holds what logical position p[i] held before.
  /// Throws CircuitError unless p is a bijection on [0, width).
  void relabel(const std::vector<WireId>& p);
  void set_out_permutation(std::vector<WireId> p);

 private:
  void validate(const Gate& gate) const;

  friend Circuit compose(const Circuit& first, const Circuit& second);
  friend Circuit inverse(const Circuit& c);
  friend Circuit decompose_toffoli(const Circuit& c);

  std::vector<Wire> wires_;
  std::unordered_map<std::string, WireId> by_name_;
  std::vector<Gate> gates_;
  std::vector<Group> groups_;
  std::vector<std::size_t> open_groups_;
  std::vector<WireId> out_perm_;
};

/// `first` followed by `second`. Wires of `second` are matched to `first` by name (through
/// first's output relabeling); unmatched wires are appended.
Circuit compose(const Circuit& first, const Circuit& second);

/// Reversed gate order with adjoint kinds. Group "L" becomes "IL"; "IL" becomes "L".
Circuit inverse(const Circuit& c);

/// Replaces every Toffoli with the fixed 15-gate Clifford+T template
/// (7 T/T*, 6 CNOT, 2 H; T-depth 4, depth 8, no ancilla). Group spans follow their gates.
Circuit decompose_toffoli(const Circuit& c);

/// The template applied to Toffoli(c1, c2, target), in order.
std::array<Gate, 15> toffoli_template(WireId c1, WireId c2, WireId target);

struct GateCounts {
  std::array<std::size_t, kGateKindCount> by_kind{};

  std::size_t of(GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
  std::size_t total() const;
  /// T plus T*.
  std::size_t t_count() const { return of(GateKind::kT) + of(GateKind::kTdg); }

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct GroupMetrics {
  std::string label;
  std::size_t level = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  GateCounts counts;
  /// Depth and T-depth of the span scheduled on its own.
  std::size_t depth = 0;
  std::size_t t_depth = 0;
};

/// One resource bound: `achieved` must not exceed `bound` (or equal it when `exact`).
struct BoundCheck {
  std::string name;
  std::string formula;
  std::uint64_t bound = 0;
  std::uint64_t achieved = 0;
  bool exact = false;

  bool holds() const { return exact ? achieved == bound : achieved <= bound; }
};

struct ResourceReport {
  GateCounts counts;
  std::size_t total_gates = 0;
  std::size_t toffoli_count = 0;
  std::size_t cnot_count = 0;
  std::size_t t_count = 0;
  std::size_t depth = 0;
  std::size_t t_depth = 0;
  std::size_t width = 0;
  std::vector<GroupMetrics> groups;
  std::vector<BoundCheck> bounds;
};

/// Exact counts, earliest-start depth (unit gate time) and T-depth (only T/T* advance a wire's
/// T-level). Group breakdown is included when `with_groups` is set.
ResourceReport metrics(const Circuit& c, bool with_groups = true);

/// metrics(decompose_toffoli(c)) without materializing the decomposed gate list.
ResourceReport decomposed_metrics(const Circuit& c, bool with_groups = true);

}  // namespace ecsynth
