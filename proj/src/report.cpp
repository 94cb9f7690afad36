#include "pickopt/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"

namespace pickopt {

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "exact") return SolveMode::exact;
  if (text == "no-reversal-exact") return SolveMode::no_reversal_exact;
  if (text == "seed") return SolveMode::seed;
  if (text == "cwii") return SolveMode::cwii;
  throw ValidationError("mode: expected exact, no-reversal-exact, seed or cwii, got '" + text + "'");
}

std::string to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::exact: return "exact";
    case SolveMode::no_reversal_exact: return "no-reversal-exact";
    case SolveMode::seed: return "seed";
    case SolveMode::cwii: return "cwii";
  }
  return "exact";
}

bool is_exact(SolveMode mode) { return mode == SolveMode::exact || mode == SolveMode::no_reversal_exact; }

Solution run_method(const Instance& inst, const PickingGraph& graph, SolveMode mode,
                    const SolveSettings& settings) {
  Solution sol;
  if (mode == SolveMode::exact) {
    ExactOptions opt;
    opt.threads = settings.threads;
    sol = solve_exact(inst, graph, opt);
  } else if (mode == SolveMode::no_reversal_exact) {
    sol = solve_no_reversal_exact(inst, graph, settings.threads);
  } else {
    const DistanceEstimator est =
        settings.oracle_estimates ? oracle_estimator(graph) : s_shape_estimator(graph);
    const Batching b = mode == SolveMode::seed ? seed_batching(inst, graph, est) : cw2_batching(inst, est);
    sol = route_batching(inst, graph, b, settings.routing);
  }
  validate_solution(inst, graph, sol);
  return sol;
}

std::optional<double> ReportRow::gap() const {
  if (!lb) return std::nullopt;
  if (ub == 0) return 0.0;
  return 100.0 * static_cast<double>(ub - *lb) / static_cast<double>(ub);
}

void fill_lower_bounds(std::vector<ReportRow>& rows) {
  std::map<std::string, Length> exact;
  for (const ReportRow& r : rows) {
    if (r.method == "exact") exact[r.instance] = r.ub;
  }
  for (ReportRow& r : rows) {
    auto it = exact.find(r.instance);
    if (it != exact.end()) r.lb = it->second;
  }
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<std::vector<std::string>> cells(const std::vector<ReportRow>& rows, bool timing) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> head{"instance", "method", "ub", "lb", "gap"};
  if (timing) head.push_back("seconds");
  out.push_back(head);
  for (const ReportRow& r : rows) {
    std::vector<std::string> c{r.instance, r.method + (r.extra_pickers ? "*" : ""), std::to_string(r.ub),
                               r.lb ? std::to_string(*r.lb) : "", r.gap() ? fixed(*r.gap(), 2) : ""};
    if (timing) c.push_back(r.seconds ? fixed(*r.seconds, 3) : "");
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string report_csv(const std::vector<ReportRow>& rows, bool timing) {
  std::ostringstream out;
  for (const auto& line : cells(rows, timing)) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::string v = line[i];
      if (v.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        v = q + "\"";
      }
      out << (i ? "," : "") << v;
    }
    out << "\n";
  }
  return out.str();
}

std::string report_table(const std::vector<ReportRow>& rows, bool timing) {
  const auto c = cells(rows, timing);
  std::vector<std::size_t> width(c.front().size(), 0);
  for (const auto& line : c) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < c[k].size(); ++i) {
      const std::string& v = c[k][i];
      const std::string pad(width[i] - v.size(), ' ');
      // text columns left, numbers right
      out << (i ? "  " : "") << (i < 2 ? v + pad : pad + v);
    }
    std::string line = out.str();
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out.str(line);
    out.seekp(0, std::ios::end);
    out << "\n";
    if (k == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total - 2, '-') << "\n";
    }
  }
  if (std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.extra_pickers; })) {
    out << "* more batches than pickers\n";
  }
  return out.str();
}

}  // namespace pickopt
