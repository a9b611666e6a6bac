#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "liftline/cli.hpp"
#include "liftline/io.hpp"

using namespace liftline;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(LIFTLINE_FIXTURE_DIR) + "/" + name;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

}  // namespace

TEST_CASE("gen piped into stats") {
  CliRun gen = cli({"gen", "debruijn", "2", "2"});
  REQUIRE(gen.code == 0);
  CliRun stats = cli({"stats"}, gen.out);
  REQUIRE(stats.code == 0);
  CHECK(has_line(stats.out, "vertices 4"));
  CHECK(has_line(stats.out, "arcs 8"));
  CHECK(has_line(stats.out, "diameter 2"));
  CHECK(has_line(stats.out, "mean-distance 3/2"));
  CHECK(has_line(stats.out, "strongly-connected true"));
}

TEST_CASE("gen families and cayley") {
  CHECK(cli({"gen", "kautz", "2", "2"}).code == 0);
  CHECK(cli({"gen", "altdebruijn", "2", "3"}).code == 0);
  CHECK(cli({"gen", "altkautz", "2", "3"}).code == 0);
  CliRun cay = cli({"gen", "cayley", "cyclic", "4", "1,3"});
  REQUIRE(cay.code == 0);
  CHECK(has_line(cay.out, "vertices 4"));

  CHECK(cli({"gen", "frobnitz", "2", "2"}).code == 2);
  CHECK(cli({"gen", "debruijn", "2"}).code == 2);
  CHECK(cli({"gen", "cayley", "cyclic", "4", "9"}).code == 2);
}

TEST_CASE("structural subcommands") {
  CliRun lifted = cli({"lift", fixture("b22.dg"), fixture("volt_b22.vg")});
  REQUIRE(lifted.code == 0);
  CHECK(has_line(lifted.out, "vertices 8"));

  CliRun expanded = cli({"expand", fixture("loop.dg"), fixture("exp_swap.xf")});
  REQUIRE(expanded.code == 0);
  CHECK(has_line(expanded.out, "vertices 2"));

  CliRun line = cli({"line", fixture("b21.dg")});
  REQUIRE(line.code == 0);
  CHECK(has_line(line.out, "vertices 4"));

  CliRun plift = cli({"plift", fixture("b21.dg"), "--keep", fixture("keep_b21.ar")});
  REQUIRE(plift.code == 0);
  CHECK(has_line(plift.out, "vertices 3"));

  CliRun split = cli({"split", fixture("b21.dg"), "--spec", fixture("split_b21.sf")});
  REQUIRE(split.code == 0);
  CHECK(has_line(split.out, "vertices 3"));

  CliRun quot = cli({"quotient", fixture("b22.dg"), "--partition", fixture("part_b22.pf")});
  REQUIRE(quot.code == 0);
  CHECK(has_line(quot.out, "vertices 2"));

  CHECK(cli({"plift", fixture("b21.dg")}).code == 2);
  CHECK(cli({"split", fixture("b21.dg")}).code == 2);
  CHECK(cli({"quotient", fixture("b22.dg")}).code == 2);
}

TEST_CASE("split and plift agree on the worked instance") {
  CliRun plift = cli({"plift", fixture("b21.dg"), "--keep", fixture("keep_b21.ar")});
  CliRun split = cli({"split", fixture("b21.dg"), "--spec", fixture("split_b21.sf")});
  REQUIRE(plift.code == 0);
  REQUIRE(split.code == 0);
  Digraph a = parse_digraph(plift.out);
  Digraph b = parse_digraph(split.out);
  CHECK(a.order() == b.order());
  CHECK(a.size() == b.size());
}

TEST_CASE("checks use the exit code contract") {
  CHECK(cli({"check", "heuchenne", fixture("b22.dg")}).code == 0);
  // Out-sets {2,3} and {2} overlap without equality.
  CliRun bad = cli({"check", "heuchenne"},
                   "dgf 1\nvertices 4\narc 0 2\narc 1 2\narc 0 3\n");
  CHECK(bad.code == 1);
  CHECK(bad.out == "false\n");

  CliRun reg = cli({"check", "regular", fixture("b22.dg"), "--partition",
                    fixture("part_b22.pf")});
  CHECK(reg.code == 0);
  CHECK(has_line(reg.out, "regular"));
  CHECK(has_line(reg.out, "1 1"));

  CliRun liftline_ok =
      cli({"check", "liftline", fixture("b22.dg"), fixture("volt_b22.vg")});
  CHECK(liftline_ok.code == 0);
  CHECK(liftline_ok.out == "holds\n");

  CHECK(cli({"check", "commute", fixture("b22.dg"), "--partition",
             fixture("part_b22.pf")})
            .code == 0);

  CHECK(cli({"check", "nonsense", fixture("b22.dg")}).code == 2);
}

TEST_CASE("check regular reports the witness pair") {
  std::string skew = "dgf 1\nvertices 3\narc 0 1\narc 0 2\narc 1 2\n";
  const char* part = "partition.tmp";
  {
    std::ofstream f(part);
    f << "block 0 1 2\n";
  }
  CliRun run = cli({"check", "regular", "-", "--partition", part}, skew);
  CHECK(run.code == 1);
  CHECK(run.out.rfind("not-regular", 0) == 0);
  std::remove(part);
}

TEST_CASE("iso subcommand") {
  CliRun gen3 = cli({"gen", "debruijn", "2", "3"});
  const char* path = "b23.tmp.dg";
  {
    std::ofstream f(path, std::ios::binary);
    f << gen3.out;
  }
  CliRun lifted = cli({"lift", fixture("b22.dg"), fixture("volt_b22.vg")});
  const char* lift_path = "lift.tmp.dg";
  {
    std::ofstream f(lift_path, std::ios::binary);
    f << lifted.out;
  }
  CliRun same = cli({"iso", lift_path, path});
  CHECK(same.code == 0);
  CHECK(same.out.rfind("isomorphic\n", 0) == 0);

  CliRun diff = cli({"iso", fixture("b21.dg"), path});
  CHECK(diff.code == 1);
  CHECK(diff.out == "not-isomorphic\n");

  CHECK(cli({"iso", fixture("b21.dg")}).code == 2);
  std::remove(path);
  std::remove(lift_path);
}

TEST_CASE("dot subcommand and output redirection") {
  CliRun dot = cli({"dot", fixture("b21.dg")});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);

  const char* out_path = "dot.tmp.gv";
  CliRun redirected = cli({"dot", fixture("b21.dg"), "-o", out_path});
  REQUIRE(redirected.code == 0);
  CHECK(redirected.out.empty());
  std::ifstream f(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == dot.out);
  std::remove(out_path);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"stats", "no-such-file.dg"}).code == 2);
  CHECK(cli({"stats"}, "dgf 1\nvertices 2\narc 0 5\n").code == 2);
  CHECK(cli({"line", "--verbose"}).code == 2);
  CHECK(cli({"help"}).code == 0);

  // Input error beats check-false: a malformed digraph is exit 2.
  CliRun run = cli({"check", "heuchenne"}, "not a digraph\n");
  CHECK(run.code == 2);
  CHECK(run.err.rfind("error:", 0) == 0);
}
