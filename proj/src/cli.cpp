#include "liftline/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "liftline/families.hpp"
#include "liftline/io.hpp"
#include "liftline/iso.hpp"
#include "liftline/lineops.hpp"
#include "liftline/partition.hpp"

namespace liftline {

namespace {

const char* kUsage =
    "usage: liftline <command> [args] [-o <file>]\n"
    "\n"
    "  gen debruijn <d> <k>          De Bruijn digraph B(d,k)\n"
    "  gen kautz <d> <k>             Kautz digraph K(d,k)\n"
    "  gen altdebruijn <d> <k>       B(d,k) in difference coordinates (k >= 2)\n"
    "  gen altkautz <d> <k>          K(d,k) in difference coordinates (k >= 2)\n"
    "  gen cayley cyclic <n> <g,..>  Cayley digraph of Z_n\n"
    "  lift <base.dg> <volt.vg>      lift of a voltage digraph\n"
    "  expand <base.dg> <spec.xf>    expanded digraph\n"
    "  line [in.dg]                  line digraph\n"
    "  plift [in.dg] --keep <file>   partial line digraph on kept arcs\n"
    "  split [in.dg] --spec <file>   vertex-split digraph\n"
    "  quotient [in.dg] --partition <file>\n"
    "  check heuchenne [in.dg]       line-digraph test (exit 0 yes / 1 no)\n"
    "  check regular [in.dg] --partition <file>\n"
    "  check liftline <in.dg> <volt.vg>\n"
    "  check commute [in.dg] --partition <file>\n"
    "  iso <a.dg> <b.dg>             exact isomorphism (exit 0 yes / 1 no)\n"
    "  stats [in.dg]                 order, size, degrees, diameter, mean distance\n"
    "  dot [in.dg]                   Graphviz export\n"
    "\n"
    "Digraph inputs default to standard input; '-' also means standard input.\n";

struct CliError {
  std::string message;
};

struct Invocation {
  std::vector<std::string> positional;
  std::optional<std::string> output;
  std::optional<std::string> keep;
  std::optional<std::string> split_spec;
  std::optional<std::string> partition;
};

Invocation parse_args(const std::vector<std::string>& args, size_t start) {
  Invocation inv;
  for (size_t i = start; i < args.size(); ++i) {
    auto take_value = [&](const char* flag) {
      if (i + 1 >= args.size()) throw CliError{std::string(flag) + " needs a value"};
      return args[++i];
    };
    if (args[i] == "-o")
      inv.output = take_value("-o");
    else if (args[i] == "--keep")
      inv.keep = take_value("--keep");
    else if (args[i] == "--spec")
      inv.split_spec = take_value("--spec");
    else if (args[i] == "--partition")
      inv.partition = take_value("--partition");
    else if (!args[i].empty() && args[i][0] == '-' && args[i] != "-")
      throw CliError{"unknown option '" + args[i] + "'"};
    else
      inv.positional.push_back(args[i]);
  }
  return inv;
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Digraph load_digraph(const Invocation& inv, size_t index, std::istream& in) {
  std::string path = index < inv.positional.size() ? inv.positional[index] : "-";
  return parse_digraph(slurp(path, in));
}

void emit(const std::string& text, const Invocation& inv, std::ostream& out) {
  if (inv.output) {
    std::ofstream file(*inv.output, std::ios::binary);
    if (!file) throw CliError{"cannot write '" + *inv.output + "'"};
    file << text;
  } else {
    out << text;
  }
}

int parse_positive(const std::string& tok, const char* what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw CliError{std::string("expected ") + what + ", got '" + tok + "'"};
  }
  if (pos != tok.size() || value < 1)
    throw CliError{std::string("expected ") + what + ", got '" + tok + "'"};
  return value;
}

int cmd_gen(const Invocation& inv, std::ostream& out) {
  if (inv.positional.empty()) throw CliError{"gen: missing family"};
  const std::string& family = inv.positional[0];
  if (family == "cayley") {
    if (inv.positional.size() != 4 || inv.positional[1] != "cyclic")
      throw CliError{"usage: gen cayley cyclic <n> <g1,g2,...>"};
    FiniteGroup group = cyclic_group(parse_positive(inv.positional[2], "a group order"));
    std::vector<int> gens;
    std::istringstream gl(inv.positional[3]);
    std::string tok;
    while (std::getline(gl, tok, ',')) {
      size_t pos = 0;
      int g = std::stoi(tok, &pos);
      if (pos != tok.size() || g < 0 || g >= group.order())
        throw CliError{"generator '" + tok + "' out of range"};
      gens.push_back(g);
    }
    emit(write_digraph(cayley_digraph(group, gens)), inv, out);
    return 0;
  }
  if (inv.positional.size() != 3)
    throw CliError{"usage: gen " + family + " <d> <k>"};
  int d = parse_positive(inv.positional[1], "a degree");
  int k = parse_positive(inv.positional[2], "a word length");
  Digraph g(0, {});
  if (family == "debruijn")
    g = de_bruijn(contiguous_alphabet(d), k);
  else if (family == "kautz")
    g = kautz(d, k);
  else if (family == "altdebruijn")
    g = alt_de_bruijn(d, k);
  else if (family == "altkautz")
    g = alt_kautz(d, k);
  else
    throw CliError{"unknown family '" + family + "'"};
  emit(write_digraph(g), inv, out);
  return 0;
}

int cmd_stats(const Invocation& inv, std::istream& in, std::ostream& out) {
  Digraph g = load_digraph(inv, 0, in);
  Metrics m = metrics(g);
  std::ostringstream text;
  if (!g.name().empty()) text << "name " << g.name() << "\n";
  text << "vertices " << m.order << "\n";
  text << "arcs " << m.size << "\n";
  text << "in-degree " << m.min_in << " " << m.max_in << "\n";
  text << "out-degree " << m.min_out << " " << m.max_out << "\n";
  text << "strongly-connected " << (m.diameter ? "true" : "false") << "\n";
  if (m.diameter) {
    text << "diameter " << *m.diameter << "\n";
    text << "mean-distance " << m.mean_distance->str() << "\n";
  }
  emit(text.str(), inv, out);
  return 0;
}

int cmd_check(const Invocation& inv, std::istream& in, std::ostream& out) {
  if (inv.positional.empty()) throw CliError{"check: missing kind"};
  const std::string& kind = inv.positional[0];
  if (kind == "heuchenne") {
    Digraph g = load_digraph(inv, 1, in);
    bool verdict = heuchenne_is_line(g);
    emit(verdict ? "true\n" : "false\n", inv, out);
    return verdict ? 0 : 1;
  }
  if (kind == "regular") {
    if (!inv.partition) throw CliError{"check regular: --partition <file> required"};
    Digraph g = load_digraph(inv, 1, in);
    Partition p = parse_partition(slurp(*inv.partition, in), g);
    RegularityCheck rc = check_regular(g, p);
    if (!rc.regular()) {
      emit("not-regular " + std::to_string(rc.witness_u) + " " +
               std::to_string(rc.witness_v) + "\n",
           inv, out);
      return 1;
    }
    std::ostringstream text;
    text << "regular\n";
    for (int i = 0; i < rc.matrix->block_count(); ++i) {
      for (int j = 0; j < rc.matrix->block_count(); ++j)
        text << (j ? " " : "") << rc.matrix->at(i, j);
      text << "\n";
    }
    emit(text.str(), inv, out);
    return 0;
  }
  if (kind == "liftline") {
    if (inv.positional.size() != 3)
      throw CliError{"usage: check liftline <in.dg> <volt.vg>"};
    Digraph g = load_digraph(inv, 1, in);
    VoltageAssignment va = parse_voltage(slurp(inv.positional[2], in), g);
    LineCondReport report = lift_line_condition(g, va);
    if (report.holds) {
      emit("holds\n", inv, out);
      return 0;
    }
    emit("fails " + std::to_string(report.u) + " " + std::to_string(report.v) + " " +
             std::to_string(report.x_i) + " " + std::to_string(report.x_j) + "\n",
         inv, out);
    return 1;
  }
  if (kind == "commute") {
    if (!inv.partition) throw CliError{"check commute: --partition <file> required"};
    Digraph g = load_digraph(inv, 1, in);
    Partition p = parse_partition(slurp(*inv.partition, in), g);
    bool verdict = verify_commutation(g, p);
    emit(verdict ? "true\n" : "false\n", inv, out);
    return verdict ? 0 : 1;
  }
  throw CliError{"unknown check '" + kind + "'"};
}

int cmd_iso(const Invocation& inv, std::istream& in, std::ostream& out) {
  if (inv.positional.size() != 2) throw CliError{"usage: iso <a.dg> <b.dg>"};
  Digraph a = parse_digraph(slurp(inv.positional[0], in));
  Digraph b = parse_digraph(slurp(inv.positional[1], in));
  IsoResult result = is_isomorphic(a, b);
  if (result.status == IsoStatus::budget_exceeded) throw CliError{"search budget exceeded"};
  if (!result.ok()) {
    emit("not-isomorphic\n", inv, out);
    return 1;
  }
  std::ostringstream text;
  text << "isomorphic\n";
  for (int v = 0; v < a.order(); ++v) text << "map " << v << " " << result.witness->map[v] << "\n";
  emit(text.str(), inv, out);
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  const std::string& command = args[0];
  if (command == "gen") return cmd_gen(parse_args(args, 1), out);
  if (command == "stats") return cmd_stats(parse_args(args, 1), in, out);
  if (command == "check") return cmd_check(parse_args(args, 1), in, out);
  if (command == "iso") return cmd_iso(parse_args(args, 1), in, out);
  if (command == "lift") {
    Invocation inv = parse_args(args, 1);
    if (inv.positional.size() != 2) throw CliError{"usage: lift <base.dg> <volt.vg>"};
    Digraph base = parse_digraph(slurp(inv.positional[0], in));
    VoltageAssignment va = parse_voltage(slurp(inv.positional[1], in), base);
    emit(write_digraph(lift(base, va).graph), inv, out);
    return 0;
  }
  if (command == "expand") {
    Invocation inv = parse_args(args, 1);
    if (inv.positional.size() != 2) throw CliError{"usage: expand <base.dg> <spec.xf>"};
    Digraph base = parse_digraph(slurp(inv.positional[0], in));
    ExpansionSpec spec = parse_expansion_spec(slurp(inv.positional[1], in), base);
    emit(write_digraph(expand(base, spec).graph), inv, out);
    return 0;
  }
  if (command == "line") {
    Invocation inv = parse_args(args, 1);
    emit(write_digraph(line_digraph(load_digraph(inv, 0, in))), inv, out);
    return 0;
  }
  if (command == "plift") {
    Invocation inv = parse_args(args, 1);
    if (!inv.keep) throw CliError{"plift: --keep <file> required"};
    Digraph g = load_digraph(inv, 0, in);
    ArcSubset kept = parse_arc_subset(slurp(*inv.keep, in), g);
    emit(write_digraph(partial_line_digraph(g, kept, default_choice(g, kept))), inv, out);
    return 0;
  }
  if (command == "split") {
    Invocation inv = parse_args(args, 1);
    if (!inv.split_spec) throw CliError{"split: --spec <file> required"};
    Digraph g = load_digraph(inv, 0, in);
    SplitSpec spec = parse_split_spec(slurp(*inv.split_spec, in), g);
    emit(write_digraph(vertex_split(g, spec)), inv, out);
    return 0;
  }
  if (command == "quotient") {
    Invocation inv = parse_args(args, 1);
    if (!inv.partition) throw CliError{"quotient: --partition <file> required"};
    Digraph g = load_digraph(inv, 0, in);
    Partition p = parse_partition(slurp(*inv.partition, in), g);
    emit(write_digraph(quotient(g, p)), inv, out);
    return 0;
  }
  if (command == "dot") {
    Invocation inv = parse_args(args, 1);
    emit(export_dot(load_digraph(inv, 0, in)), inv, out);
    return 0;
  }
  throw CliError{"unknown command '" + command + "'"};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    err << kUsage;
    return args.empty() ? 2 : 0;
  }
  try {
    return dispatch(args, in, out);
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liftline
