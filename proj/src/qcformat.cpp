#include "ecsynth/qcformat.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ecsynth/errors.hpp"

namespace ecsynth {

bool is_valid_qc_name(std::string_view name) {
  auto alpha = [](char ch) { return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z'); };
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  if (name.empty() || !alpha(name[0])) return false;
  for (char ch : name) {
    if (!alpha(ch) && !digit(ch) && ch != '_') return false;
  }
  return true;
}

namespace {

std::string sanitize(const std::string& label) {
  std::string s;
  for (char ch : label) {
    const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    s += ok ? ch : '_';
  }
  if (s.empty() || !is_valid_qc_name(s)) s = "G" + s;
  return s;
}

const char* gate_token(GateKind k) {
  switch (k) {
    case GateKind::kNot:
    case GateKind::kCnot:
    case GateKind::kToffoli: return "tof";
    case GateKind::kH: return "H";
    case GateKind::kT: return "T";
    case GateKind::kTdg: return "T*";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "S*";
  }
  return "?";
}

void write_gate(std::ostream& os, const Circuit& c, const Gate& g) {
  os << gate_token(g.kind);
  for (WireId w : g.operands()) os << ' ' << c.wire(w).name;
  os << '\n';
}

void write_names(std::ostream& os, const char* tag, const Circuit& c, bool (*pick)(const Wire&)) {
  os << tag;
  for (const Wire& w : c.wires()) {
    if (pick(w)) os << ' ' << w.name;
  }
  os << '\n';
}

}  // namespace

void write_qc(std::ostream& os, const Circuit& c, bool group_as_subcircuits) {
  for (const Wire& w : c.wires()) {
    if (!is_valid_qc_name(w.name)) throw CircuitError("wire name '" + w.name + "' is not a valid .qc identifier");
  }
  if (!c.has_identity_permutation()) {
    throw CircuitError(".qc output cannot express an output relabeling; apply it before writing");
  }
  write_names(os, ".v", c, [](const Wire&) { return true; });
  write_names(os, ".i", c, [](const Wire& w) { return w.input; });
  write_names(os, ".o", c, [](const Wire& w) { return w.output; });
  os << '\n';

  const auto& gates = c.gates();
  std::vector<const Group*> top;
  if (group_as_subcircuits) {
    for (const Group& g : c.groups()) {
      if (g.depth == 0) top.push_back(&g);
    }
  }

  // Block name per top-level group; a new block is written the first time a body appears.
  struct Known {
    std::string name;
    const Group* group;
  };
  std::map<std::string, std::vector<Known>> by_label;
  std::unordered_set<std::string> used;
  std::vector<std::string> call(top.size());
  for (std::size_t k = 0; k < top.size(); ++k) {
    const Group& g = *top[k];
    const std::string base = sanitize(g.label);
    auto& known = by_label[base];
    const Known* hit = nullptr;
    for (const Known& kn : known) {
      if (std::equal(gates.begin() + kn.group->begin, gates.begin() + kn.group->end, gates.begin() + g.begin,
                     gates.begin() + g.end)) {
        hit = &kn;
        break;
      }
    }
    if (hit) {
      call[k] = hit->name;
      continue;
    }
    std::string name = base;
    for (std::size_t suffix = 2; used.count(name); ++suffix) name = base + "_" + std::to_string(suffix);
    used.insert(name);
    known.push_back({name, &g});
    call[k] = name;
    os << "BEGIN " << name << '\n';
    for (std::size_t i = g.begin; i < g.end; ++i) write_gate(os, c, gates[i]);
    os << "END " << name << '\n' << '\n';
  }

  os << "BEGIN\n";
  std::size_t next = 0;
  for (std::size_t i = 0; i < gates.size() || next < top.size();) {
    if (next < top.size() && top[next]->begin == i) {
      os << call[next] << '\n';
      i = top[next]->end;
      ++next;
      continue;
    }
    write_gate(os, c, gates[i]);
    ++i;
  }
  os << "END\n";
}

std::string write_qc(const Circuit& c, bool group_as_subcircuits) {
  std::ostringstream os;
  write_qc(os, c, group_as_subcircuits);
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool gate_from_token(std::string_view t, GateKind& kind) {
  if (t == "tof") kind = GateKind::kToffoli;
  else if (t == "H") kind = GateKind::kH;
  else if (t == "T") kind = GateKind::kT;
  else if (t == "T*") kind = GateKind::kTdg;
  else if (t == "S") kind = GateKind::kS;
  else if (t == "S*") kind = GateKind::kSdg;
  else return false;
  return true;
}

}  // namespace

QcDocument parse_qc(std::string_view text) {
  QcDocument doc;
  std::unordered_set<std::string> declared;
  std::unordered_set<std::string> defined;
  bool have_v = false;
  bool in_block = false;
  bool in_main = false;
  bool main_done = false;
  QcBlock current;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol + 1;

    const auto toks = tokenize(line);
    if (toks.empty() || toks[0].text[0] == '#') {
      if (eol == text.size()) break;
      continue;
    }
    const Token& head = toks[0];
    auto fail = [&](const std::string& what, std::size_t col) -> void { throw ParseError(what, line_no, col); };

    if (!have_v) {
      if (head.text != ".v") fail("expected '.v' header", head.column);
      have_v = true;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const std::string name(toks[k].text);
        if (!is_valid_qc_name(name)) fail("invalid wire name '" + name + "'", toks[k].column);
        if (!declared.insert(name).second) fail("duplicate wire '" + name + "'", toks[k].column);
        doc.variables.push_back(name);
      }
    } else if (head.text == ".i" || head.text == ".o") {
      if (in_block || main_done) fail("'" + std::string(head.text) + "' must precede all blocks", head.column);
      auto& list = head.text == ".i" ? doc.inputs : doc.outputs;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const std::string name(toks[k].text);
        if (!declared.count(name)) fail("undeclared wire '" + name + "'", toks[k].column);
        list.push_back(name);
      }
    } else if (head.text == ".v") {
      fail("duplicate '.v' header", head.column);
    } else if (head.text == "BEGIN") {
      if (in_block) fail("nested BEGIN", head.column);
      if (main_done) fail("content after the main block", head.column);
      if (toks.size() > 2) fail("unexpected token", toks[2].column);
      current = QcBlock{};
      in_block = true;
      in_main = toks.size() == 1;
      if (!in_main) {
        current.name = std::string(toks[1].text);
        if (!is_valid_qc_name(current.name)) fail("invalid subcircuit name '" + current.name + "'", toks[1].column);
        if (defined.count(current.name) || declared.count(current.name)) {
          fail("name '" + current.name + "' already in use", toks[1].column);
        }
      }
    } else if (head.text == "END") {
      if (!in_block) fail("END without BEGIN", head.column);
      const std::string name = toks.size() > 1 ? std::string(toks[1].text) : std::string();
      if (toks.size() > 2) fail("unexpected token", toks[2].column);
      if (name != current.name) fail("END does not match BEGIN " + (current.name.empty() ? std::string("(main)") : current.name),
                                     toks.size() > 1 ? toks[1].column : head.column);
      in_block = false;
      if (in_main) {
        doc.main = std::move(current);
        main_done = true;
      } else {
        defined.insert(current.name);
        doc.subcircuits.push_back(std::move(current));
      }
    } else {
      if (!in_block) fail("statement outside a BEGIN/END block", head.column);
      QcItem item;
      item.line = line_no;
      item.column = head.column;
      GateKind kind;
      if (toks.size() == 1) {
        // Every gate takes a wire, so a lone token is always a call (blocks may be named "S").
        const std::string name(head.text);
        if (!defined.count(name)) fail("undefined subcircuit '" + name + "'", head.column);
        item.kind = QcItem::Kind::kCall;
        item.callee = name;
      } else if (gate_from_token(head.text, kind)) {
        const std::size_t args = toks.size() - 1;
        if (kind == GateKind::kToffoli) {
          if (args > 3) fail("'tof' takes 1 to 3 wires", head.column);
          kind = args == 1 ? GateKind::kNot : args == 2 ? GateKind::kCnot : GateKind::kToffoli;
        } else if (args != 1) {
          fail("'" + std::string(head.text) + "' takes exactly one wire", head.column);
        }
        item.kind = QcItem::Kind::kGate;
        item.gate = kind;
        for (std::size_t k = 1; k < toks.size(); ++k) {
          const std::string name(toks[k].text);
          if (!declared.count(name)) fail("undeclared wire '" + name + "'", toks[k].column);
          for (const std::string& prev : item.wires) {
            if (prev == name) fail("wire '" + name + "' repeated in one gate", toks[k].column);
          }
          item.wires.push_back(name);
        }
      } else {
        fail("unknown gate '" + std::string(head.text) + "'", head.column);
      }
      current.items.push_back(std::move(item));
    }
    if (eol == text.size()) break;
  }
  if (!have_v) throw ParseError("missing '.v' header", 1, 1);
  if (in_block) throw ParseError("unterminated block", line_no, 1);
  if (!main_done) throw ParseError("missing main BEGIN/END block", line_no, 1);
  return doc;
}

Circuit to_circuit(const QcDocument& doc) {
  std::unordered_set<std::string> ins(doc.inputs.begin(), doc.inputs.end());
  std::unordered_set<std::string> outs(doc.outputs.begin(), doc.outputs.end());
  Circuit c;
  std::unordered_map<std::string, WireId> ids;
  for (const std::string& v : doc.variables) ids[v] = c.add_wire(v, ins.count(v) > 0, outs.count(v) > 0);

  std::unordered_map<std::string, const QcBlock*> blocks;
  for (const QcBlock& b : doc.subcircuits) blocks[b.name] = &b;

  auto lookup = [&](const QcItem& item, const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError("undeclared wire '" + name + "'", item.line, item.column);
    return it->second;
  };
  auto emit_gate = [&](const QcItem& item) {
    Gate g;
    g.kind = item.gate;
    for (std::size_t k = 0; k < item.wires.size(); ++k) g.wires[k] = lookup(item, item.wires[k]);
    try {
      c.append(g);
    } catch (const CircuitError& e) {
      throw ParseError(e.what(), item.line, item.column);
    }
  };
  // Blocks may call earlier blocks; expansion is depth-first with nested groups.
  auto expand = [&](auto&& self, const QcBlock& b) -> void {
    for (const QcItem& item : b.items) {
      if (item.kind == QcItem::Kind::kGate) {
        emit_gate(item);
        continue;
      }
      auto it = blocks.find(item.callee);
      if (it == blocks.end()) throw ParseError("undefined subcircuit '" + item.callee + "'", item.line, item.column);
      c.begin_group(item.callee);
      self(self, *it->second);
      c.end_group();
    }
  };
  expand(expand, doc.main);
  return c;
}

}  // namespace ecsynth
