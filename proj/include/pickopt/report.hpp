#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pickopt/heuristics.hpp"
#include "pickopt/instance.hpp"
#include "pickopt/picking_graph.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

enum class SolveMode { exact, no_reversal_exact, seed, cwii };

SolveMode parse_solve_mode(const std::string& text);
std::string to_string(SolveMode mode);
bool is_exact(SolveMode mode);

struct SolveSettings {
  int threads = 0;
  HeuristicRouting routing = HeuristicRouting::s_shape;
  bool oracle_estimates = false;  // batching heuristics estimate with route_oracle
};

// Runs one method and validates the result.
Solution run_method(const Instance& instance, const PickingGraph& graph, SolveMode mode,
                    const SolveSettings& settings);

struct ReportRow {
  std::string instance;
  std::string method;
  Length ub = 0;
  std::optional<Length> lb;
  std::optional<double> seconds;
  bool extra_pickers = false;  // heuristic needed more batches than T

  // 100 (UB - LB) / UB; 0 when UB is 0.
  std::optional<double> gap() const;
};

// Sets LB of every row of an instance to the exact total when an exact
// (non-restricted) row of that instance exists.
void fill_lower_bounds(std::vector<ReportRow>& rows);

std::string report_csv(const std::vector<ReportRow>& rows, bool timing);
std::string report_table(const std::vector<ReportRow>& rows, bool timing);

}  // namespace pickopt
