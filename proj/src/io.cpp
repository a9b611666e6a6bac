#include "liftline/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace liftline {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    lines.push_back({number, std::move(tokens), raw});
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

// Text payload after the first n space-separated tokens.
std::string rest_after(const std::string& raw, int n) {
  size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    while (pos < raw.size() && raw[pos] == ' ') ++pos;
    while (pos < raw.size() && raw[pos] != ' ') ++pos;
  }
  while (pos < raw.size() && raw[pos] == ' ') ++pos;
  return raw.substr(pos);
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty digraph file");
  if (lines[0].tokens != std::vector<std::string>{"dgf", "1"})
    throw ParseError(lines[0].number, "expected header 'dgf 1'");

  std::string name;
  int order = -1;
  std::vector<std::string> labels;
  std::vector<bool> labelled;
  std::vector<Arc> arcs;
  enum { kHead, kVertices, kLabels, kArcs } state = kHead;

  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& directive = line.tokens[0];
    if (directive == "name") {
      if (state != kHead) throw ParseError(line.number, "'name' must precede 'vertices'");
      if (line.tokens.size() < 2) throw ParseError(line.number, "'name' needs a value");
      name = rest_after(line.text, 1);
      state = kHead;
    } else if (directive == "vertices") {
      if (order != -1) throw ParseError(line.number, "duplicate 'vertices' line");
      if (line.tokens.size() != 2) throw ParseError(line.number, "usage: vertices <n>");
      order = parse_int(line, line.tokens[1], "a vertex count");
      if (order < 0) throw ParseError(line.number, "vertex count must be non-negative");
      labels.resize(order);
      labelled.assign(order, false);
      for (int v = 0; v < order; ++v) labels[v] = std::to_string(v);
      state = kVertices;
    } else if (directive == "label") {
      if (order == -1) throw ParseError(line.number, "'label' before 'vertices'");
      if (state == kArcs) throw ParseError(line.number, "'label' lines must precede arcs");
      if (line.tokens.size() < 3) throw ParseError(line.number, "usage: label <i> <text>");
      int v = parse_int(line, line.tokens[1], "a vertex index");
      if (v < 0 || v >= order) throw ParseError(line.number, "label index out of range");
      if (labelled[v]) throw ParseError(line.number, "duplicate label for vertex " +
                                                         std::to_string(v));
      labelled[v] = true;
      labels[v] = rest_after(line.text, 2);
      state = kLabels;
    } else if (directive == "arc") {
      if (order == -1) throw ParseError(line.number, "'arc' before 'vertices'");
      if (line.tokens.size() != 3) throw ParseError(line.number, "usage: arc <tail> <head>");
      int tail = parse_int(line, line.tokens[1], "a vertex index");
      int head = parse_int(line, line.tokens[2], "a vertex index");
      if (tail < 0 || tail >= order || head < 0 || head >= order)
        throw ParseError(line.number, "arc endpoint out of range");
      arcs.push_back({tail, head});
      state = kArcs;
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  if (order == -1) throw ParseError(lines.back().number, "missing 'vertices' line");
  return Digraph(order, std::move(arcs), std::move(labels), std::move(name));
}

std::string write_digraph(const Digraph& g) {
  std::string out = "dgf 1\n";
  if (!g.name().empty()) out += "name " + g.name() + "\n";
  out += "vertices " + std::to_string(g.order()) + "\n";
  for (int v = 0; v < g.order(); ++v)
    if (g.label(v) != std::to_string(v))
      out += "label " + std::to_string(v) + " " + g.label(v) + "\n";
  for (const Arc& a : g.arcs())
    out += "arc " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

namespace {

FiniteGroup parse_group_line(const Line& line) {
  if (line.tokens.size() < 2) throw ParseError(line.number, "usage: group cyclic <n> | group product cyclic <n> ...");
  if (line.tokens[1] == "cyclic") {
    if (line.tokens.size() != 3) throw ParseError(line.number, "usage: group cyclic <n>");
    int n = parse_int(line, line.tokens[2], "a group order");
    if (n < 1) throw ParseError(line.number, "group order must be positive");
    return cyclic_group(n);
  }
  if (line.tokens[1] == "product") {
    std::vector<FiniteGroup> factors;
    size_t i = 2;
    while (i < line.tokens.size()) {
      if (line.tokens[i] != "cyclic" || i + 1 >= line.tokens.size())
        throw ParseError(line.number, "product factors must be 'cyclic <n>'");
      int n = parse_int(line, line.tokens[i + 1], "a group order");
      if (n < 1) throw ParseError(line.number, "group order must be positive");
      factors.push_back(cyclic_group(n));
      i += 2;
    }
    if (factors.empty()) throw ParseError(line.number, "product needs at least one factor");
    return product_group(factors);
  }
  throw ParseError(line.number, "unknown group kind '" + line.tokens[1] + "'");
}

int parse_element(const Line& line, const std::string& tok, const FiniteGroup& group) {
  std::vector<int> comps;
  std::string part;
  std::istringstream in(tok);
  while (std::getline(in, part, ',')) comps.push_back(parse_int(line, part, "a group element"));
  const std::vector<int>& radix = group.factor_orders();
  if (comps.size() != radix.size())
    throw ParseError(line.number, "element '" + tok + "' has " +
                                      std::to_string(comps.size()) + " components, group has " +
                                      std::to_string(radix.size()));
  int index = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] < 0 || comps[i] >= radix[i])
      throw ParseError(line.number, "element component out of range in '" + tok + "'");
    index = index * radix[i] + comps[i];
  }
  return index;
}

}  // namespace

VoltageAssignment parse_voltage(const std::string& text, const Digraph& target) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty voltage file");
  if (lines[0].tokens != std::vector<std::string>{"vgf", "1"})
    throw ParseError(lines[0].number, "expected header 'vgf 1'");
  if (lines.size() < 2 || lines[1].tokens[0] != "group")
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected a 'group' line after the header");
  FiniteGroup group = parse_group_line(lines[1]);

  std::vector<int> volts(target.size(), -1);
  for (size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "volt")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() != 3) throw ParseError(line.number, "usage: volt <arc> <element>");
    int e = parse_int(line, line.tokens[1], "an arc index");
    if (e < 0 || e >= target.size())
      throw ParseError(line.number, "arc index out of range");
    if (volts[e] != -1)
      throw ParseError(line.number, "duplicate voltage for arc " + std::to_string(e));
    volts[e] = parse_element(line, line.tokens[2], group);
  }
  for (int e = 0; e < target.size(); ++e)
    if (volts[e] == -1)
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "missing voltage for arc " + std::to_string(e));
  return VoltageAssignment{std::move(group), std::move(volts)};
}

std::string write_voltage(const VoltageAssignment& va, const Digraph& target) {
  if (static_cast<int>(va.volts.size()) != target.size())
    throw std::invalid_argument("write_voltage: assignment does not match the digraph");
  std::string out = "vgf 1\ngroup";
  const std::vector<int>& radix = va.group.factor_orders();
  if (radix.size() > 1) out += " product";
  for (int n : radix) out += " cyclic " + std::to_string(n);
  out += "\n";
  for (int e = 0; e < target.size(); ++e)
    out += "volt " + std::to_string(e) + " " + va.group.element_name(va.volts[e]) + "\n";
  return out;
}

Partition parse_partition(const std::string& text, const Digraph& target) {
  Partition p;
  for (const Line& line : significant_lines(text)) {
    if (line.tokens[0] != "block")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2) throw ParseError(line.number, "usage: block <v> <v> ...");
    std::vector<int> block;
    for (size_t i = 1; i < line.tokens.size(); ++i)
      block.push_back(parse_int(line, line.tokens[i], "a vertex index"));
    p.blocks.push_back(std::move(block));
  }
  validate_partition(p, target.order());
  return p;
}

ArcSubset parse_arc_subset(const std::string& text, const Digraph& target) {
  ArcSubset subset;
  for (const Line& line : significant_lines(text)) {
    if (line.tokens[0] != "keep")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() != 2) throw ParseError(line.number, "usage: keep <arc>");
    subset.arcs.push_back(parse_int(line, line.tokens[1], "an arc index"));
  }
  // Re-use the lineops validation for range/duplicate/coverage diagnostics.
  ChoiceFunction cf = default_choice(target, subset);
  (void)cf;
  return subset;
}

SplitSpec parse_split_spec(const std::string& text, const Digraph& target) {
  SplitSpec spec;
  spec.iota.assign(target.order(), 1);
  spec.copy_of_arc.assign(target.size(), 0);
  for (const Line& line : significant_lines(text)) {
    if (line.tokens[0] == "iota") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "usage: iota <v> <count>");
      int v = parse_int(line, line.tokens[1], "a vertex index");
      if (v < 0 || v >= target.order())
        throw ParseError(line.number, "vertex index out of range");
      spec.iota[v] = parse_int(line, line.tokens[2], "a copy count");
    } else if (line.tokens[0] == "assign") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "usage: assign <arc> <copy>");
      int e = parse_int(line, line.tokens[1], "an arc index");
      if (e < 0 || e >= target.size())
        throw ParseError(line.number, "arc index out of range");
      spec.copy_of_arc[e] = parse_int(line, line.tokens[2], "a copy index");
    } else {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }
  // Full invariant check (iota ranges, copy ranges, nonzero in-degree).
  vertex_split(target, spec);
  return spec;
}

ExpansionSpec parse_expansion_spec(const std::string& text, const Digraph& target) {
  ExpansionSpec spec;
  spec.fiber_sizes.assign(target.order(), -1);
  spec.arc_maps.assign(target.size(), {});
  std::vector<bool> mapped(target.size(), false);
  for (const Line& line : significant_lines(text)) {
    if (line.tokens[0] == "fiber") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "usage: fiber <v> <size>");
      int v = parse_int(line, line.tokens[1], "a vertex index");
      if (v < 0 || v >= target.order())
        throw ParseError(line.number, "vertex index out of range");
      if (spec.fiber_sizes[v] != -1)
        throw ParseError(line.number, "duplicate fiber size for vertex " + std::to_string(v));
      spec.fiber_sizes[v] = parse_int(line, line.tokens[2], "a fiber size");
    } else if (line.tokens[0] == "map") {
      if (line.tokens.size() < 3) throw ParseError(line.number, "usage: map <arc> <img> ...");
      int e = parse_int(line, line.tokens[1], "an arc index");
      if (e < 0 || e >= target.size())
        throw ParseError(line.number, "arc index out of range");
      if (mapped[e])
        throw ParseError(line.number, "duplicate map for arc " + std::to_string(e));
      mapped[e] = true;
      for (size_t i = 2; i < line.tokens.size(); ++i)
        spec.arc_maps[e].push_back(parse_int(line, line.tokens[i], "a fiber element"));
    } else {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }
  for (int v = 0; v < target.order(); ++v)
    if (spec.fiber_sizes[v] == -1)
      throw ParseError(1, "missing fiber size for vertex " + std::to_string(v));
  for (int e = 0; e < target.size(); ++e)
    if (!mapped[e]) throw ParseError(1, "missing map for arc " + std::to_string(e));
  expand(target, spec);  // full shape validation
  return spec;
}

std::string export_dot(const Digraph& g) {
  std::string out = "digraph " + quote_dot(g.name().empty() ? "G" : g.name()) + " {\n";
  for (int v = 0; v < g.order(); ++v)
    if (g.in_degree(v) == 0 && g.out_degree(v) == 0)
      out += "  " + quote_dot(g.label(v)) + ";\n";
  for (const Arc& a : g.arcs())
    out += "  " + quote_dot(g.label(a.tail)) + " -> " + quote_dot(g.label(a.head)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace liftline
