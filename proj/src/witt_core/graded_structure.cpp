#include "gal/graded_structure.hpp"

#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"

namespace gal {

Window::Window(int r) : radius(r) {
  if (r < 1) throw InvalidArgument("window radius must be positive, got " + std::to_string(r));
}

std::vector<int> outward_order(const Window& w) {
  std::vector<int> out{0};
  for (int k = 1; k <= w.radius; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

bool in_table_domain(const Window& w, long a, long b) {
  return w.contains(a) && w.contains(b) && w.contains(a + b);
}

StructureTable::StructureTable(Window w)
    : window_(w), cells_(static_cast<std::size_t>(w.size()) * static_cast<std::size_t>(w.size())) {}

std::size_t StructureTable::slot(long a, long b) const {
  return static_cast<std::size_t>(a + window_.radius) * static_cast<std::size_t>(window_.size()) +
         static_cast<std::size_t>(b + window_.radius);
}

bool StructureTable::has(long a, long b) const { return contains(a, b) && cells_[slot(a, b)].has_value(); }

const Rational* StructureTable::find(long a, long b) const {
  if (!contains(a, b)) return nullptr;
  const auto& cell = cells_[slot(a, b)];
  return cell ? &*cell : nullptr;
}

const Rational& StructureTable::at(long a, long b) const {
  if (!contains(a, b)) {
    throw OutOfWindow("phi(" + std::to_string(a) + "," + std::to_string(b) + ") is outside the table on window " +
                      std::to_string(window_.radius));
  }
  const auto& cell = cells_[slot(a, b)];
  if (!cell) throw InvalidArgument("phi(" + std::to_string(a) + "," + std::to_string(b) + ") is unset");
  return *cell;
}

void StructureTable::set(long a, long b, Rational value) {
  if (!contains(a, b)) {
    throw OutOfWindow("entry (" + std::to_string(a) + "," + std::to_string(b) + ") is outside the domain of window " +
                      std::to_string(window_.radius) + " (left, right and their sum must lie in the window)");
  }
  cells_[slot(a, b)] = std::move(value);
}

bool StructureTable::complete() const {
  for (auto [a, b] : domain()) {
    if (!has(a, b)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> StructureTable::domain() const {
  std::vector<std::pair<int, int>> out;
  for (int a = -window_.radius; a <= window_.radius; ++a) {
    for (int b = -window_.radius; b <= window_.radius; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

GradedStructure GradedStructure::symbolic(MultiPoly expr, Bindings bindings) {
  for (const auto& v : expr.variables()) {
    if (v == "l" || v == "i") {
      throw InvalidArgument("structure expressions may use only n (left index), m (right index) and parameters; found '" +
                            v + "'");
    }
  }
  for (const auto& [name, _] : bindings) {
    if (kGradingVariables.count(name)) throw InvalidArgument("cannot bind grading variable '" + name + "'");
  }
  GradedStructure s;
  s.kind_ = Kind::Symbolic;
  s.bound_ = expr.bind(bindings);
  s.expr_ = std::move(expr);
  s.bindings_ = std::move(bindings);
  return s;
}

GradedStructure GradedStructure::table(StructureTable table) {
  for (auto [a, b] : table.domain()) {
    if (!table.has(a, b)) {
      throw InvalidArgument("table on window " + std::to_string(table.window().radius) + " is missing entry (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  GradedStructure s;
  s.kind_ = Kind::Table;
  s.table_ = std::move(table);
  return s;
}

std::set<std::string> GradedStructure::formal_parameters() const {
  std::set<std::string> out;
  if (!is_symbolic()) return out;
  for (const auto& v : bound_.variables()) {
    if (v != kLeftVar && v != kRightVar) out.insert(v);
  }
  return out;
}

bool GradedStructure::evaluable() const { return formal_parameters().empty(); }

Rational GradedStructure::phi(long left, long right) const {
  if (is_table()) return table_->at(left, right);
  return bound_.eval({{kLeftVar, Rational(left)}, {kRightVar, Rational(right)}});
}

MultiPoly GradedStructure::phi_symbolic(const MultiPoly& left, const MultiPoly& right) const {
  if (!is_symbolic()) throw InvalidArgument("table structures cannot be checked symbolically");
  return bound_.substitute({{kLeftVar, left}, {kRightVar, right}});
}

const MultiPoly& GradedStructure::expression() const {
  if (!is_symbolic()) throw InvalidArgument("table structure has no expression");
  return expr_;
}

const MultiPoly& GradedStructure::bound_expression() const {
  if (!is_symbolic()) throw InvalidArgument("table structure has no expression");
  return bound_;
}

const StructureTable& GradedStructure::table_data() const {
  if (!is_table()) throw InvalidArgument("symbolic structure has no table");
  return *table_;
}

StructureTable GradedStructure::materialize(const Window& w) const {
  if (is_table() && w.radius > table_->window().radius) {
    throw OutOfWindow("requested window " + std::to_string(w.radius) + " exceeds the table window " +
                      std::to_string(table_->window().radius));
  }
  if (is_symbolic() && !evaluable()) {
    throw UnboundVariable(*formal_parameters().begin());
  }
  StructureTable out(w);
  for (auto [a, b] : out.domain()) out.set(a, b, phi(a, b));
  return out;
}

}  // namespace gal
