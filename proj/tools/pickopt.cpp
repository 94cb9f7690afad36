#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pickopt/encoding.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"
#include "pickopt/formulations.hpp"
#include "pickopt/instance.hpp"
#include "pickopt/model_io.hpp"
#include "pickopt/picking_graph.hpp"
#include "pickopt/report.hpp"
#include "pickopt/separation.hpp"
#include "pickopt/walk.hpp"

using namespace pickopt;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string instance_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

WarehouseLayout layout_from_tag(const std::string& tag) {
  WarehouseLayout l;
  long long ls = 0, as = 0;
  char tail = 0;
  if (std::sscanf(tag.c_str(), "%dx%dx%d:%lld:%lld%c", &l.n_aisles, &l.n_blocks, &l.locs_per_subaisle, &ls,
                  &as, &tail) != 5) {
    throw ValidationError("model: bad layout attribute '" + tag + "'");
  }
  l.loc_spacing = ls;
  l.aisle_spacing = as;
  l.validate();
  return l;
}

const std::string& attribute(const LinearModel& m, const std::string& key) {
  auto it = m.attributes.find(key);
  if (it == m.attributes.end()) throw ValidationError("model: missing attribute '" + key + "'");
  return it->second;
}

struct GenerateArgs {
  int aisles = 2, blocks = 1, locs = 2;
  Length loc_spacing = 1, aisle_spacing = 2;
  int orders = 5, delta = 5, capacity = 8, pickers = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  WarehouseLayout l{a.aisles, a.blocks, a.locs, a.loc_spacing, a.aisle_spacing};
  GenerateOptions opt;
  opt.capacity = a.capacity;
  opt.pickers = a.pickers;
  const Instance inst = generate_instance(l, a.orders, a.delta, a.seed, opt);
  emit(a.out, dump_instance(inst));
  if (!a.out.empty() && a.out != "-") {
    std::cerr << "wrote " << a.out << ": " << inst.order_count() << " orders, T = " << inst.pickers << "\n";
  }
  return 0;
}

struct BuildArgs {
  std::string instance, kind = "PG", format = "lp", out, solution, assignment;
  FormulationOptions options;
};

int cmd_build(const BuildArgs& a) {
  const Instance inst = load_instance(a.instance);
  const ModelFormat format = parse_model_format(a.format);
  const PickingGraph g(inst.layout);
  const LinearModel m = build_model(inst, g, parse_formulation_kind(a.kind), a.options);
  if (!a.out.empty()) export_model(m, format, a.out);
  std::ostream& log = a.out.empty() ? std::cerr : std::cout;
  if (a.out.empty()) std::cout << (format == ModelFormat::lp ? write_lp(m) : write_mps(m));
  log << "formulation " << attribute(m, "kind") << " options " << attribute(m, "options") << "\n";
  log << "variables " << m.variable_count() << "\n";
  log << "rows " << m.row_count() << "\n";
  for (const ConstraintGroup& grp : m.groups()) {
    log << "  " << grp.name << (grp.lazy ? " (lazy)" : "") << " " << grp.rows << "\n";
  }
  log << "lazy groups " << m.lazy_group_count() << "\n";
  if (!a.solution.empty()) {
    if (a.assignment.empty()) throw ValidationError("--solution needs --assignment");
    const Solution sol = parse_solution(inst, g, read_file(a.solution));
    validate_solution(inst, g, sol);
    const VariableAssignment values =
        encode_solution(inst, g, parse_formulation_kind(a.kind), a.options, sol);
    const FeasibilityReport rep = check_feasible(m, values);
    emit(a.assignment, dump_assignment(values));
    log << "assignment objective " << to_string(objective_value(m, values)) << ", "
        << (rep.satisfied ? "feasible" : std::to_string(rep.violated_rows) + " violated rows") << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string instance, mode = "exact", out, report, routing = "sshape", estimator = "sshape";
  int threads = 0;
  bool timing = false;
};

SolveSettings settings_of(int threads, const std::string& routing, const std::string& estimator) {
  SolveSettings s;
  s.threads = resolve_threads(threads);
  if (routing == "exact") {
    s.routing = HeuristicRouting::exact;
  } else if (routing != "sshape") {
    throw ValidationError("routing: expected sshape or exact");
  }
  if (estimator == "exact") {
    s.oracle_estimates = true;
  } else if (estimator != "sshape") {
    throw ValidationError("estimator: expected sshape or exact");
  }
  return s;
}

ReportRow timed_row(const std::string& name, const Instance& inst, const PickingGraph& g, SolveMode mode,
                    const SolveSettings& settings, Solution* keep) {
  const auto start = std::chrono::steady_clock::now();
  Solution sol = run_method(inst, g, mode, settings);
  ReportRow row;
  row.instance = name;
  row.method = to_string(mode);
  row.ub = sol.total;
  if (mode == SolveMode::exact) row.lb = sol.total;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int busy = 0;
  for (const Batch& b : sol.batches) busy += b.orders.empty() ? 0 : 1;
  row.extra_pickers = busy > inst.pickers;
  if (keep) *keep = std::move(sol);
  return row;
}

int cmd_solve(const SolveArgs& a) {
  const Instance inst = load_instance(a.instance);
  const PickingGraph g(inst.layout);
  const SolveMode mode = parse_solve_mode(a.mode);
  Solution sol;
  std::vector<ReportRow> rows{timed_row(instance_name(a.instance), inst, g, mode,
                                        settings_of(a.threads, a.routing, a.estimator), &sol)};
  if (!a.out.empty()) write_file(a.out, dump_solution(inst, g, sol));
  if (!a.report.empty()) emit(a.report, report_csv(rows, a.timing));
  std::cout << report_table(rows, a.timing);
  return 0;
}

struct SeparateArgs {
  std::string model, assignment;
};

int cmd_separate(const SeparateArgs& a) {
  LinearModel m = load_lp(a.model);
  const VariableAssignment values = load_assignment(a.assignment);
  const PickingGraph g(layout_from_tag(attribute(m, "layout")));
  const FormulationKind kind = parse_formulation_kind(attribute(m, "kind"));
  int pickers = 0;
  try {
    pickers = std::stoi(attribute(m, "pickers"));
  } catch (const std::logic_error&) {
    throw ValidationError("model: bad pickers attribute");
  }
  for (const std::string& name : check_feasible(m, values).unknown_variables) {
    throw ValidationError("assignment: unknown variable '" + name + "'");
  }
  const auto cuts = separate_connectivity(g, kind, values, pickers);
  for (const CutRequest& cut : cuts) {
    const int r = add_cut(m, cut, g);
    std::cout << format_row(m, m.rows()[static_cast<std::size_t>(r)]) << "\n";
  }
  std::cerr << cuts.size() << " violated " << (cuts.size() == 1 ? "cut" : "cuts") << "\n";
  return 0;
}

struct ReportArgs {
  std::vector<std::string> instances;
  std::string methods = "exact,seed,cwii", csv, routing = "sshape", estimator = "sshape";
  int threads = 0;
  bool timing = false;
};

int cmd_report(const ReportArgs& a) {
  std::vector<SolveMode> modes;
  std::string rest = a.methods;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    modes.push_back(parse_solve_mode(rest.substr(0, comma)));
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
  }
  const SolveSettings settings = settings_of(a.threads, a.routing, a.estimator);
  std::vector<ReportRow> rows;
  for (const std::string& path : a.instances) {
    const Instance inst = load_instance(path);
    const PickingGraph g(inst.layout);
    for (SolveMode mode : modes) {
      try {
        rows.push_back(timed_row(instance_name(path), inst, g, mode, settings, nullptr));
      } catch (const ResourceLimitError& e) {
        std::cerr << instance_name(path) << " " << to_string(mode) << ": skipped: " << e.what() << "\n";
      }
    }
  }
  fill_lower_bounds(rows);
  if (!a.csv.empty()) emit(a.csv, report_csv(rows, a.timing));
  std::cout << report_table(rows, a.timing);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint order batching and picker routing: models, exact oracles and heuristics"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a seeded random instance");
  g->add_option("--aisles", gen.aisles, "Number of aisles")->capture_default_str();
  g->add_option("--blocks", gen.blocks, "Number of blocks")->capture_default_str();
  g->add_option("--locs", gen.locs, "Picking locations per subaisle")->capture_default_str();
  g->add_option("--loc-spacing", gen.loc_spacing, "Distance between adjacent locations")->capture_default_str();
  g->add_option("--aisle-spacing", gen.aisle_spacing, "Distance between adjacent aisles")->capture_default_str();
  g->add_option("--orders", gen.orders, "Number of orders")->capture_default_str();
  g->add_option("--delta", gen.delta, "Order profile parameter")->capture_default_str();
  g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  g->add_option("--capacity", gen.capacity, "Trolley capacity B")->capture_default_str();
  g->add_option("--pickers", gen.pickers, "Pickers T (0: bin-packing optimum)")->capture_default_str();
  g->add_option("-o,--out", gen.out, "Output file (stdout if omitted)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a formulation and export it");
  b->add_option("-i,--instance", build.instance, "Instance file")->required();
  b->add_option("-f,--formulation", build.kind, "basic, PA, PG, PF, PU, PU1 or PU2")->capture_default_str();
  b->add_option("--format", build.format, "lp or mps")->capture_default_str();
  b->add_option("-o,--out", build.out, "Model file (stdout if omitted)");
  b->add_option("--solution", build.solution, "Solution file to encode into the model's variables");
  b->add_option("--assignment", build.assignment, "Where to write the encoded assignment");
  b->add_flag("--subaisle-cuts", build.options.subaisle_cuts, "Add the subaisle cut family");
  b->add_flag("--aisle-cuts", build.options.aisle_cuts, "Add aisle cuts");
  b->add_flag("--basic-cuts", build.options.basic_cuts, "Add basic cuts");
  b->add_flag("--single-traversing", build.options.single_traversing, "Add single-traversing rows");
  b->add_flag("--artificial-vertex-reversal", build.options.artificial_vertex_reversal,
              "Add artificial vertex reversal rows");
  b->add_flag("--column-inequalities", build.options.column_inequalities, "Add column inequalities");
  b->add_flag("--cross-aisle-bound", build.options.cross_aisle_bound, "Bound middle cross-aisle crossings");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("-i,--instance", solve.instance, "Instance file")->required();
  s->add_option("-m,--mode", solve.mode, "exact, no-reversal-exact, seed or cwii")->capture_default_str();
  s->add_option("-o,--out", solve.out, "Solution file");
  s->add_option("--report", solve.report, "Write the report row as CSV ('-' for stdout)");
  s->add_option("--routing", solve.routing, "Heuristic batch routing: sshape or exact")->capture_default_str();
  s->add_option("--estimator", solve.estimator, "Batching estimate: sshape or exact")->capture_default_str();
  s->add_option("--threads", solve.threads, "Worker threads (0: all cores; PICKOPT_THREADS overrides)");
  s->add_flag("--timing", solve.timing, "Include wall time in reports");

  SeparateArgs sep;
  auto* p = app.add_subcommand("separate", "Print connectivity cuts violated by an assignment");
  p->add_option("--model", sep.model, "LP model written by build")->required();
  p->add_option("--assignment", sep.assignment, "Assignment file")->required();

  ReportArgs rep;
  auto* r = app.add_subcommand("report", "Compare methods over instances");
  r->add_option("-i,--instance", rep.instances, "Instance files")->required();
  r->add_option("--methods", rep.methods, "Comma-separated methods")->capture_default_str();
  r->add_option("--csv", rep.csv, "CSV output ('-' for stdout)");
  r->add_option("--routing", rep.routing, "Heuristic batch routing: sshape or exact")->capture_default_str();
  r->add_option("--estimator", rep.estimator, "Batching estimate: sshape or exact")->capture_default_str();
  r->add_option("--threads", rep.threads, "Worker threads (0: all cores; PICKOPT_THREADS overrides)");
  r->add_flag("--timing", rep.timing, "Include wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*b) return cmd_build(build);
    if (*s) return cmd_solve(solve);
    if (*p) return cmd_separate(sep);
    if (*r) return cmd_report(rep);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const EncodingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
