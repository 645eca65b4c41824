#pragma once

// Protected area / surplus decomposition of a standard Young tableau.
//
// The protected area is what remains after removing as many cells as possible
// from the end of the first row and the bottom of the first column while
// keeping a Ferrers shape. A first-row cell is removable exactly when no cell
// lies below it, and a first-column cell exactly when no cell lies to its
// right, so the residual first row has length max(rows[1], 1) and the residual
// first column has length max(#rows of length >= 2, 1).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ulam/tableau.hpp"

namespace ulam {

struct ProtectedDecomposition {
  // Protected cells, row by row. Entries are those of the original tableau.
  Tableau::Rows area;
  Shape protected_shape;
  int l = 0;  // cells of the protected area in the first row
  int m = 0;  // cells of the protected area
  std::vector<int> eastern_surplus;   // increasing
  std::vector<int> southern_surplus;  // increasing
  std::optional<int> a;  // smallest eastern surplus entry
  std::optional<int> b;  // smallest southern surplus entry
  int c = 0;             // last first-row entry of the protected area
  int d = 0;             // last first-column entry of the protected area

  // min(a, b) > max(c, d), vacuous when both surpluses are empty.
  bool surplus_dominates() const {
    if (!a && !b) return true;
    int lo = a && b ? std::min(*a, *b) : (a ? *a : *b);
    return lo > std::max(c, d);
  }
};

inline ProtectedDecomposition protected_decompose(const Tableau& t) {
  if (t.empty()) throw std::domain_error("protected_decompose of empty tableau");
  const Shape shape = t.shape();
  const int row_keep = std::max(shape.row(1), 1);
  const int col_keep = std::max(shape.column(1), 1);

  ProtectedDecomposition d;
  for (int r = 0; r < col_keep; ++r) {
    const auto& row = t.row(r);
    if (r == 0) {
      d.area.emplace_back(row.begin(), row.begin() + row_keep);
      d.eastern_surplus.assign(row.begin() + row_keep, row.end());
    } else {
      d.area.push_back(row);
    }
  }
  for (int r = col_keep; r < t.row_count(); ++r) d.southern_surplus.push_back(t.row(r).front());

  std::vector<int> lens;
  for (const auto& r : d.area) lens.push_back(static_cast<int>(r.size()));
  d.protected_shape = Shape(std::move(lens));
  d.l = row_keep;
  d.m = d.protected_shape.size();
  if (!d.eastern_surplus.empty()) d.a = d.eastern_surplus.front();
  if (!d.southern_surplus.empty()) d.b = d.southern_surplus.front();
  d.c = d.area.front().back();
  d.d = d.area.back().front();
  return d;
}

// Attaches the eastern surplus to the first row and the southern surplus
// under the first column of the protected area.
inline Tableau reattach(const Tableau::Rows& area, const std::vector<int>& eastern,
                        const std::vector<int>& southern) {
  Tableau::Rows rows = area;
  rows.front().insert(rows.front().end(), eastern.begin(), eastern.end());
  for (int v : southern) rows.push_back({v});
  return Tableau(std::move(rows));
}

inline Tableau reattach(const ProtectedDecomposition& d) {
  return reattach(d.area, d.eastern_surplus, d.southern_surplus);
}

inline bool is_lm_protected(const Tableau& t, int l, int m) {
  if (t.empty()) return false;
  const auto d = protected_decompose(t);
  return d.l == l && d.m == m && d.surplus_dominates();
}

// (l, m) of any tableau of this shape; the decomposition depends only on the
// shape.
inline std::pair<int, int> protected_parameters(const Shape& shape) {
  const int row_keep = std::max(shape.row(1), 1);
  const int col_keep = std::max(shape.column(1), 1);
  int m = row_keep;
  for (int r = 1; r < col_keep; ++r) m += shape.row(r);
  return {row_keep, m};
}

// Shapes of the protected area that occur at all: the single box, or a shape
// whose first two rows are equal and whose last row has length >= 2.
inline bool is_protected_area_shape(const Shape& s) {
  if (s.size() == 1) return true;
  return s.row_count() >= 2 && s.row(0) == s.row(1) && s.rows().back() >= 2;
}

}  // namespace ulam
