#pragma once

#include <stdexcept>
#include <string>

#include "liftline/digraph.hpp"
#include "liftline/expansion.hpp"
#include "liftline/lineops.hpp"
#include "liftline/partition.hpp"

namespace liftline {

/// Malformed input file; what() carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// DGF digraph files: `dgf 1`, optional `name <text>`, `vertices <n>`,
// `label <i> <text>` for non-default labels, then one `arc <tail> <head>`
// per arc in index order. write_digraph emits the canonical form;
// parse(write(g)) is the identity and write(parse(f)) == f byte-for-byte on
// canonical files.
Digraph parse_digraph(const std::string& text);
std::string write_digraph(const Digraph& g);

// VGF voltage files: `vgf 1`, one `group cyclic <n>` or
// `group product cyclic <n1> cyclic <n2> ...` line, one
// `volt <arc> <element>` line per arc of the target (tuples comma-separated).
VoltageAssignment parse_voltage(const std::string& text, const Digraph& target);
std::string write_voltage(const VoltageAssignment& va, const Digraph& target);

// Headerless spec files, validated against their target digraph at load time.
Partition parse_partition(const std::string& text, const Digraph& target);      // block lines
ArcSubset parse_arc_subset(const std::string& text, const Digraph& target);     // keep lines
SplitSpec parse_split_spec(const std::string& text, const Digraph& target);     // iota/assign
ExpansionSpec parse_expansion_spec(const std::string& text, const Digraph& target);  // fiber/map

/// Graphviz export: node statements for isolated vertices, then one edge
/// statement per arc in index order. Byte-stable for a fixed input.
std::string export_dot(const Digraph& g);

}  // namespace liftline
