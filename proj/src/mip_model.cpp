#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cvc/errors.hpp"
#include "cvc/mip.hpp"

namespace cvc::mip {

int MipModel::add_variable(std::string name, VarKind kind, double lower, double upper) {
  if (lower > upper) throw InputError("variable '" + name + "' has empty bounds");
  auto [it, fresh] = var_index_.emplace(name, static_cast<int>(vars_.size()));
  if (!fresh) throw InputError("duplicate variable '" + name + "'");
  vars_.push_back({std::move(name), kind, lower, upper});
  return it->second;
}

void MipModel::check_terms(const std::vector<Term>& terms) const {
  for (const auto& t : terms)
    if (t.var < 0 || t.var >= static_cast<int>(vars_.size()))
      throw InputError("term references an undeclared variable");
}

void MipModel::add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
  check_terms(terms);
  auto [it, fresh] = row_index_.emplace(name, static_cast<int>(rows_.size()));
  if (!fresh) throw InputError("duplicate constraint '" + name + "'");
  rows_.push_back({std::move(name), std::move(terms), sense, rhs});
}

void MipModel::set_objective(std::vector<Term> terms) {
  check_terms(terms);
  objective_ = std::move(terms);
}

std::optional<int> MipModel::find_variable(std::string_view name) const {
  auto it = var_index_.find(std::string(name));
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

const Constraint* MipModel::find_constraint(std::string_view name) const {
  auto it = row_index_.find(std::string(name));
  return it == row_index_.end() ? nullptr : &rows_[it->second];
}

int MipModel::variable(std::string_view name) const {
  auto idx = find_variable(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

void MipModel::remove_constraints(const std::function<bool(const Constraint&)>& pred) {
  std::erase_if(rows_, pred);
  row_index_.clear();
  for (std::size_t i = 0; i < rows_.size(); ++i) row_index_.emplace(rows_[i].name, static_cast<int>(i));
}

bool check_point(const MipModel& model, std::span<const double> values) {
  const auto& vars = model.variables();
  if (values.size() != vars.size()) throw InputError("assignment size does not match the model");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) return false;
    if (v < vars[i].lower - kTolerance || v > vars[i].upper + kTolerance) return false;
    if (vars[i].kind == VarKind::binary && std::abs(v - std::round(v)) > kTolerance) return false;
  }
  for (const auto& row : model.constraints()) {
    double activity = 0;
    for (const auto& t : row.terms) activity += t.coef * values[t.var];
    switch (row.sense) {
      case Sense::le:
        if (activity > row.rhs + kTolerance) return false;
        break;
      case Sense::ge:
        if (activity < row.rhs - kTolerance) return false;
        break;
      case Sense::eq:
        if (std::abs(activity - row.rhs) > kTolerance) return false;
        break;
    }
  }
  return true;
}

bool check_integer_point(const MipModel& model, const Assignment& values) {
  std::vector<double> dense(model.variables().size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    auto it = values.find(model.variables()[i].name);
    if (it == values.end())
      throw InputError("no value for variable '" + model.variables()[i].name + "'");
    dense[i] = it->second;
  }
  return check_point(model, dense);
}

namespace {

std::string number(double v) {
  char buf[64];
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (v == std::floor(v) && std::abs(v) < 1e15)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  else
    std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

constexpr std::size_t kMaxLine = 255;

// Appends a linear expression, wrapping long rows onto continuation lines.
void append_expression(std::string& out, std::size_t line_start, const MipModel& model,
                       const std::vector<Term>& terms) {
  if (terms.empty()) {
    out += model.variables().empty() ? "0" : "0 " + model.variables().front().name;
    return;
  }
  bool first = true;
  for (const auto& t : terms) {
    std::string piece;
    const double mag = std::abs(t.coef);
    if (first) {
      if (t.coef < 0) piece += "- ";
    } else {
      piece += t.coef < 0 ? " - " : " + ";
    }
    if (mag != 1.0) piece += number(mag) + " ";
    piece += model.variables()[t.var].name;
    if (!first && out.size() - line_start + piece.size() > kMaxLine) {
      out += "\n  ";
      line_start = out.size() - 2;
      piece.erase(0, 1);
    }
    out += piece;
    first = false;
  }
}

}  // namespace

std::string write_lp(const MipModel& model) {
  std::string out;
  for (const auto& c : model.comments()) out += "\\ " + c + "\n";
  out += "Minimize\n";
  std::size_t start = out.size();
  out += " obj: ";
  append_expression(out, start, model, model.objective());
  out += "\nSubject To\n";
  for (const auto& row : model.constraints()) {
    start = out.size();
    out += " " + row.name + ": ";
    append_expression(out, start, model, row.terms);
    out += row.sense == Sense::le ? " <= " : row.sense == Sense::ge ? " >= " : " = ";
    out += number(row.rhs) + "\n";
  }

  std::string bounds;
  for (const auto& v : model.variables()) {
    if (v.kind == VarKind::binary) continue;
    const bool free_low = std::isinf(v.lower) && v.lower < 0;
    const bool free_up = std::isinf(v.upper) && v.upper > 0;
    if (free_low && free_up)
      bounds += " " + v.name + " free\n";
    else if (!(v.lower == 0 && free_up))
      bounds += " " + number(v.lower) + " <= " + v.name + " <= " + number(v.upper) + "\n";
  }
  if (!bounds.empty()) out += "Bounds\n" + bounds;

  std::string line;
  std::string binaries;
  for (const auto& v : model.variables()) {
    if (v.kind != VarKind::binary) continue;
    if (line.size() + v.name.size() + 1 > kMaxLine) {
      binaries += line + "\n";
      line.clear();
    }
    line += " " + v.name;
  }
  if (!line.empty()) binaries += line + "\n";
  if (!binaries.empty()) out += "Binaries\n" + binaries;
  out += "End\n";
  return out;
}

}  // namespace cvc::mip
