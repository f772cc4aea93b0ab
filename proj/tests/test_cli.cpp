#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

const char* cli = ME2C_CLI_PATH;

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "me2c_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

fs::path scratch(const std::string& name) { return work_dir() / name; }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the binary, returns its exit code, captures stdout+stderr to a file.
int run(const std::string& args, const std::string& capture_name = "last_output") {
  fs::path cap = scratch(capture_name);
  std::string cmd = std::string(cli) + " " + args + " >" + cap.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string last_output() { return read_file(scratch("last_output")); }

}  // namespace

TEST_CASE("gen writes deterministic bytes") {
  fs::path out = scratch("c5.g");
  CHECK(run("gen cycle 5 --out " + out.string()) == 0);
  CHECK(read_file(out) == "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");

  fs::path a = scratch("sub_a.g");
  fs::path b = scratch("sub_b.g");
  CHECK(run("gen subcubic 12 --seed 9 --out " + a.string()) == 0);
  CHECK(run("gen subcubic 12 --seed 9 --out " + b.string()) == 0);
  CHECK(read_file(a) == read_file(b));

  CHECK(run("gen cycle 2") == 5);
  CHECK(run("gen pm 7 0.2") == 5);
  CHECK(run("gen nosuch 3") == 5);
}

TEST_CASE("solve then verify round trips") {
  fs::path g = scratch("pet.g");
  fs::path chi = scratch("pet.chi");
  fs::path report = scratch("pet.report");
  REQUIRE(run("gen petersen --out " + g.string()) == 0);
  CHECK(run("solve " + g.string() + " --strategy subcubic --out " + chi.string() +
            " --report " + report.string()) == 0);
  CHECK(run("verify " + g.string() + " " + chi.string()) == 0);
  CHECK(last_output() == "feasible 7\n");

  std::string rep = read_file(report);
  CHECK(rep.find("achieved 7\n") != std::string::npos);
  CHECK(rep.find("bound 7\n") != std::string::npos);
  CHECK(rep.find("ratio 1/1\n") != std::string::npos);
  CHECK(rep.find("status ok\n") != std::string::npos);

  // Byte-identical on repeat.
  fs::path chi2 = scratch("pet2.chi");
  CHECK(run("solve " + g.string() + " --strategy subcubic --out " + chi2.string()) == 0);
  CHECK(read_file(chi) == read_file(chi2));
}

TEST_CASE("exact solves small instances") {
  fs::path g = scratch("c5x.g");
  fs::path chi = scratch("c5x.chi");
  REQUIRE(run("gen cycle 5 --out " + g.string()) == 0);
  CHECK(run("exact " + g.string() + " --out " + chi.string()) == 0);
  std::string text = read_file(chi);
  CHECK(text.substr(0, 9) == "colors 5\n");
  CHECK(run("verify " + g.string() + " " + chi.string()) == 0);
}

TEST_CASE("exit codes") {
  SUBCASE("infeasible coloring is reported, not errored") {
    fs::path g = scratch("star.g");
    fs::path chi = scratch("star.chi");
    write_file(g, "4 3\n0 1\n0 2\n0 3\n");
    write_file(chi, "colors 3\n0 1 0\n0 2 1\n0 3 2\n");
    CHECK(run("verify " + g.string() + " " + chi.string()) == 1);
    CHECK(last_output() == "infeasible vertex=0 colors=0,1,2\n");
  }
  SUBCASE("strategy precondition") {
    fs::path g = scratch("c5p.g");
    REQUIRE(run("gen cycle 5 --out " + g.string()) == 0);
    CHECK(run("solve " + g.string() + " --strategy pm") == 2);
    CHECK(run("solve " + g.string() + " --strategy clawfree") == 0);  // C5 is claw-free
  }
  SUBCASE("parse failures") {
    fs::path g = scratch("bad.g");
    write_file(g, "2 1\n0 5\n");
    CHECK(run("solve " + g.string()) == 3);
    CHECK(run("normalize " + g.string()) == 3);
    fs::path ok = scratch("edge.g");
    write_file(ok, "2 1\n0 1\n");
    fs::path chi = scratch("bad.chi");
    write_file(chi, "colors 1\n");  // missing edge line
    CHECK(run("verify " + ok.string() + " " + chi.string()) == 3);
    write_file(chi, "colors 1\n0 1 0\n0 1 0\n");  // trailing content
    CHECK(run("verify " + ok.string() + " " + chi.string()) == 3);
    // Reversed endpoints still name the same edge.
    write_file(chi, "colors 1\n1 0 0\n");
    CHECK(run("verify " + ok.string() + " " + chi.string()) == 0);
  }
  SUBCASE("usage") {
    CHECK(run("definitely-not-a-command") == 5);
    CHECK(run("") == 5);
    CHECK(run("solve") == 5);
    fs::path g = scratch("c4u.g");
    REQUIRE(run("gen cycle 4 --out " + g.string()) == 0);
    CHECK(run("solve " + g.string() + " --strategy bogus") == 5);
  }
  SUBCASE("budget") {
    fs::path g = scratch("pet_b.g");
    REQUIRE(run("gen petersen --out " + g.string()) == 0);
    CHECK(run("exact " + g.string() + " --budget 14") == 6);
    CHECK(run("exact " + g.string() + " --budget 25") == 6);
  }
  SUBCASE("missing input file") {
    CHECK(run("solve " + scratch("nope.g").string()) == 5);
  }
}

TEST_CASE("certification failure is reported with full metrics") {
  // Pendant-pair splits plus a fresh-edge cactus replacement can push the
  // achieved count above the matching-strategy accounting bound. The run must
  // fail loudly (exit 4, no coloring emitted) yet still report every metric.
  const std::string fixture =
      "10 14\n0 1\n2 3\n4 5\n6 7\n8 9\n0 6\n1 3\n1 5\n1 9\n2 8\n3 5\n"
      "4 9\n5 7\n6 9\n";
  fs::path g = scratch("overrun.g");
  write_file(g, fixture);

  SUBCASE("solve exits 4 and writes the failure report, not a coloring") {
    fs::path chi = scratch("overrun.chi");
    fs::path report = scratch("overrun.report");
    CHECK(run("solve " + g.string() + " --strategy pm --out " + chi.string() +
              " --report " + report.string()) == 4);
    CHECK(!fs::exists(chi));
    std::string rep = read_file(report);
    CHECK(rep.find("achieved 7\n") != std::string::npos);
    CHECK(rep.find("bound 6\n") != std::string::npos);
    CHECK(rep.find("ratio 6/7\n") != std::string::npos);
    CHECK(rep.find("d2_plus 2\n") != std::string::npos);
    CHECK(rep.find("d2_minus 5\n") != std::string::npos);
    CHECK(rep.find("status certification_failure\n") != std::string::npos);
    CHECK(last_output().find("certification failure") != std::string::npos);
  }

  SUBCASE("bench emits a metrics row with empty oracle columns") {
    fs::path dir = scratch("overrun_corpus");
    fs::create_directories(dir);
    write_file(dir / "overrun.g", fixture);
    write_file(dir / "edge.g", "2 1\n0 1\n");
    fs::path csv = scratch("overrun.csv");
    CHECK(run("bench " + dir.string() + " --strategy pm --out " + csv.string()) ==
          0);
    std::istringstream in(read_file(csv));
    std::string line, header, edge_row, overrun_row;
    REQUIRE(std::getline(in, line));
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, edge_row));
    REQUIRE(std::getline(in, overrun_row));
    CHECK(!std::getline(in, line));
    CHECK(std::count(overrun_row.begin(), overrun_row.end(), ',') ==
          std::count(header.begin(), header.end(), ','));
    // Everything except the wall-clock column is deterministic.
    const std::string prefix = "overrun.g,10,14,pm,7,6,accounting,6,7,,,,"
                               "5,7,1,0,0,2,5,";
    CHECK(overrun_row.substr(0, prefix.size()) == prefix);
    const std::string suffix = ",certification_failure";
    REQUIRE(overrun_row.size() >= suffix.size());
    CHECK(overrun_row.substr(overrun_row.size() - suffix.size()) == suffix);
    CHECK(edge_row.substr(edge_row.size() - 3) == ",ok");
  }
}

TEST_CASE("normalize emits graph and trace") {
  fs::path g = scratch("k4.g");
  fs::path out = scratch("k4.norm");
  fs::path trace = scratch("k4.trace");
  REQUIRE(run("gen complete 4 --out " + g.string()) == 0);
  CHECK(run("normalize " + g.string() + " --out " + out.string() + " --trace " +
            trace.string()) == 0);
  CHECK(read_file(trace) ==
        "mod3 triangles=[0-1-2] needles=3 discarded=0\n"
        "mod1 hub=3 removed=1 retained=0\n"
        "mod2 v=2 hubs=(0,1) pendants=(4,5)\n");
  std::istringstream in(read_file(out));
  int n = 0, m = 0;
  in >> n >> m;
  CHECK(n == 6);
  CHECK(m == 3);
}

TEST_CASE("bench writes a parseable csv") {
  fs::path dir = scratch("corpus");
  fs::create_directories(dir);
  for (const char* spec : {"cycle 4", "cycle 6", "complete 4", "chain 1"}) {
    std::string name = spec;
    for (char& c : name)
      if (c == ' ') c = '_';
    REQUIRE(run(std::string("gen ") + spec + " --out " +
                (dir / (name + ".g")).string()) == 0);
  }
  write_file(dir / "broken.g", "1 2\n");
  fs::path csv = scratch("bench.csv");
  CHECK(run("bench " + dir.string() + " --oracle-budget 12 --out " + csv.string()) == 0);
  std::istringstream in(read_file(csv));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "# me2c bench csv v1");
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 21) == "instance,n,m,strategy");
  const long columns = std::count(line.begin(), line.end(), ',');
  int rows = 0, ok_rows = 0, parse_rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == columns);
    if (line.size() >= 3 && line.substr(line.size() - 3) == ",ok") ++ok_rows;
    if (line.size() >= 6 && line.substr(line.size() - 6) == ",parse") ++parse_rows;
  }
  CHECK(rows == 5);
  CHECK(ok_rows == 4);
  CHECK(parse_rows == 1);
}
