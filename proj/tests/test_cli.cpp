#include <doctest.h>

#include <sys/wait.h>

#include <filesystem>
#include <sstream>

#include "candidates.hpp"
#include "helpers.hpp"
#include "pickopt/encoding.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"
#include "pickopt/model_io.hpp"
#include "pickopt/report.hpp"

#ifndef PICKOPT_BIN
#error "PICKOPT_BIN must name the pickopt executable"
#endif

using namespace pickopt;
using testing_support::at;
using testing_support::make_instance;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

class Workdir {
 public:
  Workdir() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() / ("pickopt_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Run run(const std::string& args) const {
    const std::string cmd = std::string(PICKOPT_BIN) + " " + args + " > " + path("stdout") + " 2> " + path("stderr");
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(path("stdout"));
    r.err = read_file(path("stderr"));
    return r;
  }

 private:
  fs::path dir_;
};

int count_lines(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++n;
  }
  return n;
}

std::string csv_field(const std::string& csv, int line, int column) {
  std::istringstream in(csv);
  std::string row;
  for (int k = 0; k <= line; ++k) std::getline(in, row);
  std::istringstream cells(row);
  std::string cell;
  for (int k = 0; k <= column; ++k) std::getline(cells, cell, ',');
  return cell;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report rows") {
  std::vector<ReportRow> rows{{"a", "exact", 40, std::nullopt, std::nullopt, false},
                              {"a", "seed", 50, std::nullopt, std::nullopt, false},
                              {"b", "cwii", 30, std::nullopt, std::nullopt, true}};
  fill_lower_bounds(rows);
  CHECK(rows[0].gap() == doctest::Approx(0.0));
  CHECK(rows[1].lb == 40);
  CHECK(rows[1].gap() == doctest::Approx(20.0));
  CHECK_FALSE(rows[2].lb.has_value());
  CHECK_FALSE(rows[2].gap().has_value());
  const std::string csv = report_csv(rows, false);
  CHECK(csv.rfind("instance,method,ub,lb,gap\n", 0) == 0);
  CHECK(count_lines(csv) == 4);
  CHECK(report_table(rows, false).find('*') != std::string::npos);
  CHECK(parse_solve_mode("no-reversal-exact") == SolveMode::no_reversal_exact);
  CHECK_THROWS_AS(parse_solve_mode("fast"), ValidationError);
}

TEST_CASE("assignment files") {
  VariableAssignment a;
  a.set("x_1_0_1", Rational(1));
  a.set("y_1_4", Rational(1, 2));
  const VariableAssignment back = parse_assignment(dump_assignment(a));
  CHECK(back.get("x_1_0_1") == Rational(1));
  CHECK(back.get("y_1_4") == Rational(1, 2));
  CHECK(back.get("z_1_1") == Rational(0));
  CHECK_THROWS_AS(parse_assignment("{\"values\": {}}"), ValidationError);
  CHECK_THROWS_AS(parse_assignment("{\"format\": \"pickopt-assignment-v1\", \"values\": {\"x\": \"a/b\"}}"),
                  ValidationError);
  CHECK_THROWS_AS(parse_assignment("not json"), ValidationError);
}

TEST_CASE("generate") {
  Workdir w;
  const std::string flags = "generate --aisles 2 --blocks 1 --orders 3 --delta 5 --seed 1 -o ";
  REQUIRE(w.run(flags + w.path("a.json")).code == 0);
  REQUIRE(w.run(flags + w.path("b.json")).code == 0);
  const std::string a = read_file(w.path("a.json"));
  CHECK(a == read_file(w.path("b.json")));
  CHECK(parse_instance(a).order_count() == 3);

  const Run zero = w.run("generate --aisles 2 --blocks 1 --orders 0 --delta 5 --seed 1");
  CHECK(zero.code == 2);
  CHECK_FALSE(zero.err.empty());
  CHECK(w.run("generate --bogus").code == 2);
}

TEST_CASE("build") {
  Workdir w;
  REQUIRE(w.run("generate --aisles 2 --blocks 1 --orders 2 --delta 4 --seed 3 -o " + w.path("i.json")).code == 0);
  const Run pf = w.run("build -i " + w.path("i.json") + " -f PF -o " + w.path("pf.lp"));
  CHECK(pf.code == 0);
  CHECK(pf.out.find("lazy groups 0") != std::string::npos);

  const Run pg = w.run("build -i " + w.path("i.json") + " -f PG --basic-cuts --single-traversing -o " +
                       w.path("pg.lp"));
  CHECK(pg.code == 0);
  CHECK(pg.out.find(groups::basic_cut) != std::string::npos);
  CHECK(pg.out.find(groups::single_traversing) != std::string::npos);
  CHECK(parse_lp(read_file(w.path("pg.lp"))).variable_count() > 0);

  CHECK(w.run("build -i " + w.path("i.json") + " -f PU2 --cross-aisle-bound").code == 2);
  CHECK(w.run("build -i " + w.path("i.json") + " -f PG --format mps -o " + w.path("pg.mps")).code == 0);
  CHECK(read_file(w.path("pg.mps")).find("ENDATA") != std::string::npos);
}

TEST_CASE("solve") {
  Workdir w;
  const Instance one = make_instance({2, 1, 2, 1, 2}, {{2, {at(1, 0, 1), at(0, 0, 0)}}});
  save_instance(one, w.path("one.json"));
  const Run exact = w.run("solve -i " + w.path("one.json") + " -m exact --report - -o " + w.path("s.json"));
  REQUIRE(exact.code == 0);
  CHECK(std::stod(csv_field(exact.out, 1, 4)) == doctest::Approx(0.0));
  PickingGraph g(one.layout);
  const Solution s = parse_solution(one, g, read_file(w.path("s.json")));
  validate_solution(one, g, s);

  REQUIRE(w.run("generate --aisles 3 --blocks 2 --locs 1 --orders 4 --delta 5 --seed 8 -o " + w.path("t.json")).code ==
          0);
  const Run ex = w.run("solve -i " + w.path("t.json") + " -m exact --report -");
  const Run seed = w.run("solve -i " + w.path("t.json") + " -m seed --routing exact --report -");
  REQUIRE(ex.code == 0);
  REQUIRE(seed.code == 0);
  CHECK(std::stoll(csv_field(seed.out, 1, 2)) >= std::stoll(csv_field(ex.out, 1, 2)));

  const Run again = w.run("solve -i " + w.path("t.json") + " -m exact --report -");
  CHECK(again.out == ex.out);

  REQUIRE(w.run("generate --aisles 4 --blocks 2 --locs 2 --orders 3 --delta 5 --seed 2 -o " + w.path("big.json"))
              .code == 0);
  const Run big = w.run("solve -i " + w.path("big.json") + " -m exact");
  CHECK(big.code == 3);
  CHECK(big.err.find(std::to_string(kOracleMaxEdges)) != std::string::npos);
}

TEST_CASE("separate") {
  Workdir w;
  const Instance inst = make_instance({3, 2, 1, 1, 2}, {{1, {at(2, 1, 0)}}});
  save_instance(inst, w.path("i.json"));
  PickingGraph g(inst.layout);
  const Solution opt = solve_exact(inst, g);
  const Solution loose = testing_support::relaxed(inst, g, opt);
  write_file(w.path("tight.json"), dump_assignment(encode_walk_basic(inst, g, opt, false)));
  write_file(w.path("loose.json"), dump_assignment(encode_walk_basic(inst, g, loose, false)));
  write_file(w.path("bad.json"), "{\"format\": \"pickopt-assignment-v1\", \"values\": [1, 2]}");
  REQUIRE(w.run("build -i " + w.path("i.json") + " -f basic -o " + w.path("m.lp")).code == 0);

  const Run tight = w.run("separate --model " + w.path("m.lp") + " --assignment " + w.path("tight.json"));
  CHECK(tight.code == 0);
  CHECK(tight.out.empty());

  const Run cut = w.run("separate --model " + w.path("m.lp") + " --assignment " + w.path("loose.json"));
  CHECK(cut.code == 0);
  CHECK(count_lines(cut.out) == 1);
  CHECK(cut.out.find(">=") != std::string::npos);

  CHECK(w.run("separate --model " + w.path("m.lp") + " --assignment " + w.path("bad.json")).code == 2);

  VariableAssignment frac = encode_walk_basic(inst, g, opt, false);
  frac.set(names::x(1, 0, 1), Rational(1, 2));
  write_file(w.path("frac.json"), dump_assignment(frac));
  CHECK(w.run("separate --model " + w.path("m.lp") + " --assignment " + w.path("frac.json")).code == 2);
}

TEST_CASE("report") {
  Workdir w;
  REQUIRE(w.run("generate --aisles 2 --blocks 2 --locs 1 --orders 3 --delta 5 --seed 4 -o " + w.path("a.json")).code ==
          0);
  const std::string args = "report -i " + w.path("a.json") + " --methods exact,seed,cwii --csv " + w.path("r.csv");
  const Run first = w.run(args);
  REQUIRE(first.code == 0);
  const std::string csv = read_file(w.path("r.csv"));
  CHECK(count_lines(csv) == 4);
  CHECK(csv_field(csv, 1, 1) == "exact");
  CHECK(std::stod(csv_field(csv, 1, 4)) == doctest::Approx(0.0));
  REQUIRE(w.run(args).code == 0);
  CHECK(read_file(w.path("r.csv")) == csv);
}

}  // TEST_SUITE
