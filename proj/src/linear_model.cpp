#include "pickopt/linear_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "pickopt/errors.hpp"

namespace pickopt {

int LinearModel::add_variable(const std::string& name, VarType type) {
  auto [it, inserted] = index_.emplace(name, static_cast<int>(variables_.size()));
  if (!inserted) throw std::logic_error("duplicate variable " + name);
  variables_.push_back({name, type});
  objective_pos_.push_back(-1);
  return it->second;
}

int LinearModel::var(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown variable " + name);
  return it->second;
}

int LinearModel::group(const std::string& name, bool lazy) {
  const int existing = find_group(name);
  if (existing >= 0) return existing;
  groups_.push_back({name, lazy, 0});
  return static_cast<int>(groups_.size() - 1);
}

int LinearModel::find_group(const std::string& name) const {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].name == name) return static_cast<int>(g);
  }
  return -1;
}

int LinearModel::lazy_group_count() const {
  return static_cast<int>(
      std::count_if(groups_.begin(), groups_.end(), [](const auto& g) { return g.lazy; }));
}

int LinearModel::add_row(const std::string& group_name, std::vector<Term> terms, Sense sense,
                         std::int64_t rhs) {
  const int g = group(group_name);
  ConstraintGroup& grp = groups_[static_cast<std::size_t>(g)];
  Row row;
  row.group = g;
  std::string prefix = grp.name;
  std::replace(prefix.begin(), prefix.end(), '-', '_');
  row.name = prefix + "_" + std::to_string(++grp.rows);
  // merge duplicates, keep first-occurrence order
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) throw std::logic_error("row references bad var");
    auto it = std::find_if(row.terms.begin(), row.terms.end(),
                           [&](const Term& x) { return x.var == t.var; });
    if (it == row.terms.end()) {
      row.terms.push_back(t);
    } else {
      it->coef += t.coef;
    }
  }
  std::erase_if(row.terms, [](const Term& t) { return t.coef == 0; });
  row.sense = sense;
  row.rhs = rhs;
  rows_.push_back(std::move(row));
  return static_cast<int>(rows_.size() - 1);
}

int LinearModel::rows_in_group(const std::string& name) const {
  const int g = find_group(name);
  return g < 0 ? 0 : groups_[static_cast<std::size_t>(g)].rows;
}

void LinearModel::add_objective(int var, std::int64_t coef) {
  int& pos = objective_pos_[static_cast<std::size_t>(var)];
  if (pos < 0) {
    pos = static_cast<int>(objective_.size());
    objective_.push_back({var, coef});
  } else {
    objective_[static_cast<std::size_t>(pos)].coef += coef;
  }
}

void VariableAssignment::set(const std::string& name, Rational v) {
  if (v == Rational(0)) {
    values.erase(name);
  } else {
    values[name] = v;
  }
}

Rational VariableAssignment::get(const std::string& name) const {
  auto it = values.find(name);
  return it == values.end() ? Rational(0) : it->second;
}

Rational row_activity(const Row& row, const std::vector<Rational>& values) {
  Rational sum = 0;
  for (const Term& t : row.terms) {
    const Rational& v = values[static_cast<std::size_t>(t.var)];
    if (v != Rational(0)) sum += v * t.coef;
  }
  return sum;
}

bool row_satisfied(const Row& row, const std::vector<Rational>& values) {
  const Rational lhs = row_activity(row, values);
  switch (row.sense) {
    case Sense::le:
      return lhs <= row.rhs;
    case Sense::eq:
      return lhs == row.rhs;
    case Sense::ge:
      return lhs >= row.rhs;
  }
  return false;
}

std::vector<Rational> dense_values(const LinearModel& model, const VariableAssignment& a) {
  std::vector<Rational> out(static_cast<std::size_t>(model.variable_count()), Rational(0));
  for (const auto& [name, value] : a.values) {
    if (model.has_var(name)) out[static_cast<std::size_t>(model.var(name))] = value;
  }
  return out;
}

Rational objective_value(const LinearModel& model, const VariableAssignment& a) {
  const auto values = dense_values(model, a);
  Rational sum = 0;
  for (const Term& t : model.objective()) sum += values[static_cast<std::size_t>(t.var)] * t.coef;
  return sum;
}

FeasibilityReport check_feasible(const LinearModel& model, const VariableAssignment& assignment,
                                 int max_reported) {
  FeasibilityReport report;
  for (const auto& [name, value] : assignment.values) {
    if (!model.has_var(name)) report.unknown_variables.push_back(name);
  }
  const auto values = dense_values(model, assignment);
  for (int v = 0; v < model.variable_count(); ++v) {
    const Rational& x = values[static_cast<std::size_t>(v)];
    const Variable& var = model.variable(v);
    bool ok = x >= Rational(0);
    if (var.type != VarType::continuous && x.denominator() != 1) ok = false;
    if (var.type == VarType::binary && x > Rational(1)) ok = false;
    if (!ok) {
      report.satisfied = false;
      if (static_cast<int>(report.bound_violations.size()) < max_reported) {
        report.bound_violations.push_back(var.name + " = " + to_string(x));
      }
    }
  }
  for (const Row& row : model.rows()) {
    if (row_satisfied(row, values)) continue;
    report.satisfied = false;
    ++report.violated_rows;
    if (static_cast<int>(report.violations.size()) < max_reported) {
      report.violations.push_back(
          {row.name, model.group_of(row), row_activity(row, values), row.sense, Rational(row.rhs)});
    }
  }
  return report;
}

std::string to_string(Sense sense) {
  switch (sense) {
    case Sense::le:
      return "<=";
    case Sense::eq:
      return "=";
    case Sense::ge:
      return ">=";
  }
  return "?";
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ValidationError("not a rational number: \"" + text + "\"");
    }
    if (used != s.size()) throw ValidationError("not a rational number: \"" + text + "\"");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in \"" + text + "\"");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace pickopt
