#pragma once

#include <string>

#include "pickopt/auxiliary_graph.hpp"
#include "pickopt/instance.hpp"
#include "pickopt/linear_model.hpp"
#include "pickopt/picking_graph.hpp"

namespace pickopt {

enum class FormulationKind { P_basic, P_A, P_G, P_F, P_U, P_U1, P_U2 };

struct FormulationOptions {
  bool subaisle_cuts = false;
  bool aisle_cuts = false;
  bool basic_cuts = false;
  bool single_traversing = false;
  bool artificial_vertex_reversal = false;
  bool column_inequalities = false;
  bool cross_aisle_bound = false;

  bool operator==(const FormulationOptions&) const = default;
};

std::string to_string(FormulationKind kind);
// Accepts "basic", "A", "G", "F", "U", "U1", "U2" with or without a "P" / "P_" prefix.
FormulationKind parse_formulation_kind(const std::string& text);
std::string options_string(const FormulationOptions& options);

// True when the kind's x variables live on the directed picking graph.
bool uses_directed_x(FormulationKind kind);
// True when the model carries alpha/beta subaisle-cut variables.
bool has_subaisle_variables(FormulationKind kind, const FormulationOptions& options);

// Throws ValidationError for option combinations the kind does not support.
void check_compatibility(FormulationKind kind, const FormulationOptions& options,
                         const WarehouseLayout& layout);

// Variable names. Pickers t and orders o are 1-based; vertices are graph ids
// (auxiliary ids for the no-reversal TSP models).
namespace names {
std::string x(int t, int u, int v);
std::string y(int t, int v);
std::string z(int o, int t);
std::string alpha(int t, int v);
std::string beta(int t, int v);
std::string gamma(int t, int u, int v);
std::string sigma(int t, int v0, int u, int v);
std::string down(int t, int subaisle);  // no-reversal traversal variable, north to south
std::string up(int t, int subaisle);
std::string parallel(int t);            // x~ of the single-block TSP model
std::string star(int t, int u, int v);  // x~ over E3+ of the two-block TSP model
}  // namespace names

// Group names.
namespace groups {
inline constexpr const char* bs1 = "bs1-depart";
inline constexpr const char* bs2 = "bs2-visit";
inline constexpr const char* bs3 = "bs3-link-y";
inline constexpr const char* bs4 = "bs4-connectivity";
inline constexpr const char* bs5 = "bs5-flow";
inline constexpr const char* bs6 = "bs6-assign";
inline constexpr const char* bs7 = "bs7-capacity";
inline constexpr const char* sub1 = "sub1-alpha-chain";
inline constexpr const char* sub2 = "sub2-alpha-link";
inline constexpr const char* sub3 = "sub3-beta-chain";
inline constexpr const char* sub4 = "sub4-beta-link";
inline constexpr const char* sub5 = "sub5-cover";
inline constexpr const char* impf1 = "impf1-depart";
inline constexpr const char* impf2 = "impf2-visit";
inline constexpr const char* impf3 = "impf3-link-y";
inline constexpr const char* impf4 = "impf4-west";
inline constexpr const char* impf5 = "impf5-east";
inline constexpr const char* impf6_5 = "impf6.5-alpha-down";
inline constexpr const char* impf6 = "impf6-down";
inline constexpr const char* impf7_5 = "impf7.5-beta-up";
inline constexpr const char* impf7 = "impf7-up";
inline constexpr const char* impf8 = "impf8-connectivity";
inline constexpr const char* impf9 = "impf9-flow";
inline constexpr const char* impf10 = "impf10-assign";
inline constexpr const char* impf11 = "impf11-capacity";
inline constexpr const char* impcf1 = "impcf1-source";
inline constexpr const char* impcf2 = "impcf2-conserve";
inline constexpr const char* impcf3 = "impcf3-sink";
inline constexpr const char* impcf4 = "impcf4-capacity";
inline constexpr const char* norev1 = "norev1-down";
inline constexpr const char* norev2 = "norev2-up";
inline constexpr const char* tspo0 = "tspo0-depart";
inline constexpr const char* tspo1 = "tspo1-origin-degree";
inline constexpr const char* tspo2 = "tspo2-cover";
inline constexpr const char* tspo3 = "tspo3-parallel-degree";
inline constexpr const char* tspo4 = "tspo4-degree";
inline constexpr const char* tspo5 = "tspo5-connectivity";
inline constexpr const char* tspo6 = "tspo6-assign";
inline constexpr const char* tspo7 = "tspo7-capacity";
inline constexpr const char* tspt0 = "tspt0-depart";
inline constexpr const char* tspt1 = "tspt1-origin-degree";
inline constexpr const char* tspt2 = "tspt2-cover";
inline constexpr const char* tspt3 = "tspt3-degree";
inline constexpr const char* tspt4 = "tspt4-connectivity";
inline constexpr const char* tspt5 = "tspt5-assign";
inline constexpr const char* tspt6 = "tspt6-capacity";
inline constexpr const char* cross_aisle = "less2con-cross-aisle";
inline constexpr const char* aisle_cut = "stenc-aisle";
inline constexpr const char* basic_cut = "stenc-basic";
inline constexpr const char* single_traversing = "sitr-single-traversing";
inline constexpr const char* avr = "avr-artificial-vertex-reversal";
inline constexpr const char* col_fix = "col-fix";
inline constexpr const char* col_order = "col-order";
}  // namespace groups

LinearModel build_basic(const Instance& instance, const PickingGraph& graph);
LinearModel build_PG(const Instance& instance, const PickingGraph& graph);
LinearModel build_PF(const Instance& instance, const PickingGraph& graph);
LinearModel build_PU1(const Instance& instance, const AuxiliaryGraph& aux);
LinearModel build_PU2(const Instance& instance, const AuxiliaryGraph& aux,
                      bool with_cross_aisle_bound);

// Row families appended to an existing model over the directed picking graph.
void build_subaisle_cuts(LinearModel& model, const Instance& instance, const PickingGraph& graph);
enum class StrengthenedFamily { aisle, basic };
void build_strengthened_cuts(LinearModel& model, const Instance& instance,
                             const PickingGraph& graph, StrengthenedFamily family);
void build_single_traversing(LinearModel& model, const Instance& instance,
                             const PickingGraph& graph);
void build_no_reversal(LinearModel& model, const Instance& instance, const PickingGraph& graph);
void build_artificial_vertex_reversal(LinearModel& model, const Instance& instance,
                                      const PickingGraph& graph);
// Column inequalities over z; valid for every kind.
void build_symmetry_breaking(LinearModel& model, const Instance& instance);

// Kind + options dispatcher used by the CLI.
LinearModel build_model(const Instance& instance, const PickingGraph& graph, FormulationKind kind,
                        const FormulationOptions& options);

}  // namespace pickopt
