#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

// boost::rational's mixed-type operator== recurses under C++20 rewritten
// comparisons; these exact overloads win overload resolution. They live in
// namespace boost so argument-dependent lookup finds them from any namespace.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) == b; }
inline bool operator==(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) == b; }
}  // namespace boost

namespace pickopt {

using Rational = boost::rational<std::int64_t>;

enum class VarType { binary, integer, continuous };
enum class Sense { le, eq, ge };

struct Variable {
  std::string name;
  VarType type = VarType::binary;
};

struct Term {
  int var = -1;
  std::int64_t coef = 0;
};

struct Row {
  std::string name;
  int group = -1;
  std::vector<Term> terms;
  Sense sense = Sense::ge;
  std::int64_t rhs = 0;
};

struct ConstraintGroup {
  std::string name;
  bool lazy = false;
  int rows = 0;
};

// Solver-agnostic integer model: minimize objective subject to rows. Binary
// variables live in [0,1], integer and continuous ones in [0, +inf).
class LinearModel {
 public:
  int add_variable(const std::string& name, VarType type);
  // Variable id by name; throws std::out_of_range when absent.
  int var(const std::string& name) const;
  bool has_var(const std::string& name) const { return index_.count(name) != 0; }
  const Variable& variable(int id) const { return variables_[static_cast<std::size_t>(id)]; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }

  // Declares (or returns) a group. Lazy groups start with zero rows.
  int group(const std::string& name, bool lazy = false);
  int find_group(const std::string& name) const;
  const std::vector<ConstraintGroup>& groups() const { return groups_; }
  int lazy_group_count() const;

  // Appends a row to a group; terms on the same variable are merged and
  // zero coefficients dropped. The row name is derived from the group.
  int add_row(const std::string& group_name, std::vector<Term> terms, Sense sense,
              std::int64_t rhs);
  const std::vector<Row>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int rows_in_group(const std::string& name) const;
  const std::string& group_of(const Row& row) const {
    return groups_[static_cast<std::size_t>(row.group)].name;
  }

  void add_objective(int var, std::int64_t coef);
  const std::vector<Term>& objective() const { return objective_; }

  // Free-form descriptors written into exported files.
  std::map<std::string, std::string> attributes;

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, int> index_;
  std::vector<ConstraintGroup> groups_;
  std::vector<Row> rows_;
  std::vector<Term> objective_;
  std::vector<int> objective_pos_;
};

// Values keyed by variable name; names absent from the map are zero.
struct VariableAssignment {
  std::map<std::string, Rational> values;

  void set(const std::string& name, Rational v);
  Rational get(const std::string& name) const;
};

struct Violation {
  std::string row;
  std::string group;
  Rational lhs;
  Sense sense;
  Rational rhs;
};

struct FeasibilityReport {
  bool satisfied = true;
  int violated_rows = 0;
  std::vector<Violation> violations;  // first max_reported
  std::vector<std::string> bound_violations;
  std::vector<std::string> unknown_variables;
};

Rational row_activity(const Row& row, const std::vector<Rational>& values);
bool row_satisfied(const Row& row, const std::vector<Rational>& values);
// Dense value vector indexed by model variable id.
std::vector<Rational> dense_values(const LinearModel& model, const VariableAssignment& a);
Rational objective_value(const LinearModel& model, const VariableAssignment& a);

// Exact check of every row and variable domain. Names in the assignment that
// the model does not declare are listed, not treated as violations.
FeasibilityReport check_feasible(const LinearModel& model, const VariableAssignment& assignment,
                                 int max_reported = 10);

std::string to_string(Sense sense);
std::string to_string(const Rational& r);
// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace pickopt
