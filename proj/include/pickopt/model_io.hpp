#pragma once

#include <string>

#include "pickopt/linear_model.hpp"

namespace pickopt {

enum class ModelFormat { lp, mps };

ModelFormat parse_model_format(const std::string& text);

// CPLEX-LP text. Attributes and constraint groups (lazy ones included, even
// when empty) are carried in leading comment lines so parse_lp can rebuild them.
std::string write_lp(const LinearModel& model);
// Reads LP text in the dialect written by write_lp; other comment lines are
// ignored. Throws ValidationError on syntax errors.
LinearModel parse_lp(const std::string& text);

// One constraint in LP syntax, " name: terms sense rhs", without a newline.
std::string format_row(const LinearModel& model, const Row& row);

// Fixed-field MPS. Names are aliased to R0000001 / C0000001 with a comment map.
std::string write_mps(const LinearModel& model);

void export_model(const LinearModel& model, ModelFormat format, const std::string& path);
LinearModel load_lp(const std::string& path);

inline constexpr const char* kAssignmentFormat = "pickopt-assignment-v1";

// {"format": ..., "values": {"name": value}} with integer values written as
// numbers and fractions as "p/q" strings. Zero values are omitted.
std::string dump_assignment(const VariableAssignment& assignment);
VariableAssignment parse_assignment(const std::string& text);
VariableAssignment load_assignment(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pickopt
