#include "pickopt/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

constexpr std::size_t kLineWidth = 78;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string sanitized(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

// Appends " + 3 x" style terms, wrapping long lines.
void write_terms(std::ostringstream& out, std::string line, const std::vector<Term>& terms,
                 const LinearModel& m) {
  bool first = true;
  for (const Term& t : terms) {
    std::string piece;
    if (t.coef < 0) {
      piece = "- ";
    } else if (!first) {
      piece = "+ ";
    }
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) piece += std::to_string(mag) + " ";
    piece += m.variable(t.var).name;
    if (line.size() + piece.size() + 1 > kLineWidth) {
      out << line << "\n";
      line = "   ";
    }
    line += " " + piece;
    first = false;
  }
  if (terms.empty()) line += " 0";
  out << line;
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::le: return "<=";
    case Sense::ge: return ">=";
    case Sense::eq: return "=";
  }
  return "=";
}

bool is_number(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

std::int64_t to_int(const std::string& tok) {
  try {
    return std::stoll(tok);
  } catch (const std::exception&) {
    throw ValidationError("LP: bad integer '" + tok + "'");
  }
}

struct ParsedRow {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> terms;
  Sense sense = Sense::ge;
  std::int64_t rhs = 0;
};

// Parses "[name:] terms [sense rhs]" from a token stream.
std::vector<std::pair<std::string, std::int64_t>> parse_terms(const std::vector<std::string>& toks,
                                                             std::size_t& i, bool stop_at_sense) {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  std::int64_t sign = 1;
  std::int64_t coef = 1;
  bool have_coef = false;
  for (; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (stop_at_sense && (t == "<=" || t == ">=" || t == "=" || t == "=<" || t == "=>" || t == "<" || t == ">")) break;
    if (t == "+") continue;
    if (t == "-") {
      sign = -sign;
      continue;
    }
    if (is_number(t)) {
      coef = to_int(t);
      have_coef = true;
      continue;
    }
    std::string name = t;
    if (name[0] == '-' || name[0] == '+') {
      if (name[0] == '-') sign = -sign;
      name = name.substr(1);
    }
    if (name == "0" && !have_coef) continue;
    terms.emplace_back(name, sign * coef);
    sign = 1;
    coef = 1;
    have_coef = false;
  }
  if (have_coef && coef != 0) throw ValidationError("LP: constant terms are not supported");
  return terms;
}

Sense parse_sense(const std::string& t) {
  if (t == "<=" || t == "=<" || t == "<") return Sense::le;
  if (t == ">=" || t == "=>" || t == ">") return Sense::ge;
  return Sense::eq;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ModelFormat parse_model_format(const std::string& text) {
  const std::string t = lower(text);
  if (t == "lp") return ModelFormat::lp;
  if (t == "mps") return ModelFormat::mps;
  throw ValidationError("format: expected lp or mps, got '" + text + "'");
}

std::string format_row(const LinearModel& m, const Row& r) {
  std::ostringstream line;
  write_terms(line, " " + r.name + ":", r.terms, m);
  std::string text = line.str();
  const std::string tail = std::string(" ") + sense_text(r.sense) + " " + std::to_string(r.rhs);
  const auto last_nl = text.rfind('\n');
  const std::size_t last_len = last_nl == std::string::npos ? text.size() : text.size() - last_nl - 1;
  if (last_len + tail.size() > kLineWidth) text += "\n   ";
  return text + tail;
}

std::string write_lp(const LinearModel& m) {
  std::ostringstream out;
  out << "\\ pickopt model\n";
  for (const auto& [k, v] : m.attributes) out << "\\ attribute " << k << " " << v << "\n";
  for (const ConstraintGroup& g : m.groups()) {
    out << "\\ group " << g.name << " " << (g.lazy ? "lazy" : "static") << " " << g.rows << "\n";
  }
  out << "Minimize\n";
  write_terms(out, " obj:", m.objective(), m);
  out << "\nSubject To\n";
  for (const Row& r : m.rows()) out << format_row(m, r) << "\n";
  std::vector<std::string> binaries, generals;
  for (const Variable& v : m.variables()) {
    if (v.type == VarType::binary) binaries.push_back(v.name);
    if (v.type == VarType::integer) generals.push_back(v.name);
  }
  out << "Bounds\n";
  for (const Variable& v : m.variables()) {
    if (v.type == VarType::binary) {
      out << " 0 <= " << v.name << " <= 1\n";
    } else {
      out << " " << v.name << " >= 0\n";
    }
  }
  auto list = [&](const char* head, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out << head << "\n";
    std::string line;
    for (const auto& n : names) {
      if (line.size() + n.size() + 1 > kLineWidth) {
        out << line << "\n";
        line.clear();
      }
      line += " " + n;
    }
    out << line << "\n";
  };
  list("Binaries", binaries);
  list("Generals", generals);
  out << "End\n";
  return out.str();
}

LinearModel parse_lp(const std::string& text) {
  LinearModel m;
  std::istringstream in(text);
  std::string line;
  enum class Section { none, objective, constraints, bounds, binaries, generals, end };
  Section section = Section::none;
  bool seen_objective = false;
  std::map<Section, std::string> body;
  std::vector<std::pair<std::string, bool>> groups;
  std::map<std::string, std::string> group_by_prefix;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '\\') {
      std::istringstream c(line.substr(1));
      std::string word;
      c >> word;
      if (word == "attribute") {
        std::string key, value;
        c >> key;
        std::getline(c, value);
        if (!value.empty() && value[0] == ' ') value.erase(0, 1);
        m.attributes[key] = value;
      } else if (word == "group") {
        std::string name, kind;
        c >> name >> kind;
        if (name.empty() || (kind != "lazy" && kind != "static")) throw ValidationError("LP: bad group comment");
        groups.emplace_back(name, kind == "lazy");
        group_by_prefix[sanitized(name)] = name;
      }
      continue;
    }
    const std::string key = lower(line);
    std::string trimmed = key;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    if (trimmed == "minimize" || trimmed == "minimum" || trimmed == "min") {
      section = Section::objective;
      seen_objective = true;
    } else if (trimmed == "maximize" || trimmed == "max") {
      throw ValidationError("LP: only minimization models are supported");
    } else if (trimmed == "subject to" || trimmed == "such that" || trimmed == "st" || trimmed == "s.t.") {
      section = Section::constraints;
    } else if (trimmed == "bounds") {
      section = Section::bounds;
    } else if (trimmed == "binaries" || trimmed == "binary" || trimmed == "bin") {
      section = Section::binaries;
    } else if (trimmed == "generals" || trimmed == "general" || trimmed == "gen") {
      section = Section::generals;
    } else if (trimmed == "end") {
      section = Section::end;
    } else if (!trimmed.empty()) {
      if (section == Section::none || section == Section::end) {
        throw ValidationError("LP: text outside any section: '" + line + "'");
      }
      body[section] += line + "\n";
    }
  }
  if (!seen_objective) throw ValidationError("LP: missing Minimize section");

  // Objective.
  auto obj_toks = tokenize(body[Section::objective]);
  std::size_t i = 0;
  if (i < obj_toks.size() && obj_toks[i].back() == ':') ++i;
  auto objective = parse_terms(obj_toks, i, false);

  // Constraints.
  std::vector<ParsedRow> rows;
  auto toks = tokenize(body[Section::constraints]);
  for (i = 0; i < toks.size();) {
    ParsedRow r;
    if (toks[i].back() == ':') {
      r.name = toks[i].substr(0, toks[i].size() - 1);
      ++i;
    } else if (auto pos = toks[i].find(':'); pos != std::string::npos) {
      r.name = toks[i].substr(0, pos);
      toks[i] = toks[i].substr(pos + 1);
    }
    r.terms = parse_terms(toks, i, true);
    if (i + 1 >= toks.size()) throw ValidationError("LP: row '" + r.name + "' lacks a sense and right-hand side");
    r.sense = parse_sense(toks[i]);
    if (!is_number(toks[i + 1])) throw ValidationError("LP: row '" + r.name + "' has a non-integer right-hand side");
    r.rhs = to_int(toks[i + 1]);
    i += 2;
    rows.push_back(std::move(r));
  }

  // Variables in Bounds order first, then any others by first use.
  std::map<std::string, VarType> types;
  std::vector<std::string> order;
  auto note = [&](const std::string& name) {
    if (types.emplace(name, VarType::continuous).second) order.push_back(name);
  };
  for (const auto& t : tokenize(body[Section::bounds])) {
    const std::string lt = lower(t);
    if (!is_number(t) && t != "<=" && t != ">=" && t != "=" && lt != "free" && lt != "-inf" &&
        lt != "+inf" && lt != "inf") {
      note(t);
    }
  }
  for (const auto& n : tokenize(body[Section::binaries])) {
    note(n);
    types[n] = VarType::binary;
  }
  for (const auto& n : tokenize(body[Section::generals])) {
    note(n);
    types[n] = VarType::integer;
  }
  for (const auto& [n, c] : objective) note(n);
  for (const auto& r : rows) {
    for (const auto& [n, c] : r.terms) note(n);
  }
  for (const auto& n : order) m.add_variable(n, types[n]);
  for (const auto& [name, lazy] : groups) m.group(name, lazy);

  for (const auto& [n, c] : objective) m.add_objective(m.var(n), c);
  for (const auto& r : rows) {
    std::string group = "rows";
    const auto us = r.name.rfind('_');
    if (us != std::string::npos) {
      auto it = group_by_prefix.find(r.name.substr(0, us));
      group = it != group_by_prefix.end() ? it->second : r.name.substr(0, us);
    }
    std::vector<Term> terms;
    for (const auto& [n, c] : r.terms) terms.push_back({m.var(n), c});
    m.add_row(group, terms, r.sense, r.rhs);
  }
  return m;
}

std::string write_mps(const LinearModel& m) {
  auto row_alias = [](int r) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "R%07d", r + 1);
    return std::string(buf);
  };
  auto col_alias = [](int c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "C%07d", c + 1);
    return std::string(buf);
  };
  auto field = [](const std::string& s, std::size_t width) {
    std::string out = s;
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
  };
  std::ostringstream out;
  out << "* pickopt model\n";
  for (const auto& [k, v] : m.attributes) out << "* attribute " << k << " " << v << "\n";
  for (int c = 0; c < m.variable_count(); ++c) out << "* column " << col_alias(c) << " " << m.variable(c).name << "\n";
  for (int r = 0; r < m.row_count(); ++r) out << "* row " << row_alias(r) << " " << m.rows()[static_cast<std::size_t>(r)].name << "\n";
  out << "NAME          PICKOPT\n";
  out << "ROWS\n";
  out << " N  OBJ\n";
  for (int r = 0; r < m.row_count(); ++r) {
    const Sense s = m.rows()[static_cast<std::size_t>(r)].sense;
    out << " " << (s == Sense::le ? 'L' : s == Sense::ge ? 'G' : 'E') << "  " << row_alias(r) << "\n";
  }
  std::vector<std::vector<std::pair<std::string, std::int64_t>>> cols(static_cast<std::size_t>(m.variable_count()));
  for (const Term& t : m.objective()) cols[static_cast<std::size_t>(t.var)].emplace_back("OBJ", t.coef);
  for (int r = 0; r < m.row_count(); ++r) {
    for (const Term& t : m.rows()[static_cast<std::size_t>(r)].terms) {
      cols[static_cast<std::size_t>(t.var)].emplace_back(row_alias(r), t.coef);
    }
  }
  auto entry = [&](const std::string& name, const std::string& row, std::int64_t value) {
    out << "    " << field(name, 8) << "  " << field(row, 8) << "  " << std::to_string(value) << "\n";
  };
  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (int c = 0; c < m.variable_count(); ++c) {
    const bool integral = m.variable(c).type != VarType::continuous;
    if (integral != in_int) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "M%07d", ++marker);
      out << "    " << field(buf, 8) << "  'MARKER'                 " << (integral ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = integral;
    }
    const auto& entries = cols[static_cast<std::size_t>(c)];
    if (entries.empty()) entry(col_alias(c), "OBJ", 0);
    for (const auto& [row, value] : entries) entry(col_alias(c), row, value);
  }
  if (in_int) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "M%07d", ++marker);
    out << "    " << field(buf, 8) << "  'MARKER'                 'INTEND'\n";
  }
  out << "RHS\n";
  for (int r = 0; r < m.row_count(); ++r) {
    const std::int64_t rhs = m.rows()[static_cast<std::size_t>(r)].rhs;
    if (rhs != 0) entry("RHS", row_alias(r), rhs);
  }
  out << "BOUNDS\n";
  for (int c = 0; c < m.variable_count(); ++c) {
    const VarType t = m.variable(c).type;
    if (t == VarType::binary) {
      out << " UP BND       " << col_alias(c) << "  1\n";
    } else if (t == VarType::integer) {
      out << " PL BND       " << col_alias(c) << "\n";
    }
  }
  out << "ENDATA\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void export_model(const LinearModel& model, ModelFormat format, const std::string& path) {
  write_file(path, format == ModelFormat::lp ? write_lp(model) : write_mps(model));
}

LinearModel load_lp(const std::string& path) { return parse_lp(read_file(path)); }

std::string dump_assignment(const VariableAssignment& a) {
  nlohmann::ordered_json j;
  j["format"] = kAssignmentFormat;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [name, v] : a.values) {
    if (v == 0) continue;
    if (v.denominator() == 1) {
      values[name] = v.numerator();
    } else {
      values[name] = to_string(v);
    }
  }
  j["values"] = values;
  return j.dump(2) + "\n";
}

VariableAssignment parse_assignment(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("assignment: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || j["format"] != kAssignmentFormat) {
    throw ValidationError(std::string("format: expected \"") + kAssignmentFormat + "\"");
  }
  if (!j.contains("values") || !j["values"].is_object()) throw ValidationError("values: expected an object");
  VariableAssignment a;
  for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
    const auto& v = it.value();
    Rational r;
    if (v.is_number_integer()) {
      r = Rational(v.get<std::int64_t>());
    } else if (v.is_string()) {
      try {
        r = parse_rational(v.get<std::string>());
      } catch (const std::exception&) {
        throw ValidationError("values." + it.key() + ": not a rational");
      }
    } else {
      throw ValidationError("values." + it.key() + ": expected an integer or a \"p/q\" string");
    }
    a.set(it.key(), r);
  }
  return a;
}

VariableAssignment load_assignment(const std::string& path) { return parse_assignment(read_file(path)); }

}  // namespace pickopt
