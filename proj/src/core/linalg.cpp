#include "repdescent/linalg.hpp"

#include "repdescent/error.hpp"

namespace repdescent {

Echelon row_reduce(std::vector<Vector> rows, std::size_t ncols, unsigned order) {
  Echelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    Vector& p = rows[next];
    if (!p[col].is_one()) {
      const Cyclotomic inv = p[col].inverse();
      for (std::size_t k = col; k < ncols; ++k) {
        if (!p[k].is_zero()) p[k] *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Cyclotomic f = rows[r][col];
      for (std::size_t k = col; k < ncols; ++k) {
        if (!p[k].is_zero()) rows[r][k] -= f * p[k];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  (void)order;
  return out;
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols, unsigned order) {
  const Echelon ech = row_reduce(rows, ncols, order);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, Cyclotomic(order));
    v[free] = Cyclotomic::one(order);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis), ncols, order).rows;
}

std::optional<Vector> echelon_coordinates(const Echelon& basis, const Vector& v) {
  if (basis.rows.empty()) {
    for (const auto& x : v) {
      if (!x.is_zero()) return std::nullopt;
    }
    return Vector{};
  }
  const unsigned order = basis.rows.front().front().order();
  Vector coords;
  coords.reserve(basis.rows.size());
  Vector rest = v;
  for (std::size_t r = 0; r < basis.rows.size(); ++r) {
    const Cyclotomic c = rest[basis.pivots[r]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (!basis.rows[r][k].is_zero()) rest[k] -= c * basis.rows[r][k];
    }
  }
  for (const auto& x : rest) {
    if (!x.is_zero()) return std::nullopt;
  }
  (void)order;
  return coords;
}

std::vector<Matrix> solve_sylvester(std::span<const std::pair<Matrix, Matrix>> constraints) {
  if (constraints.empty()) throw Error(ErrorCode::invalid_argument, "solve_sylvester needs a constraint");
  const std::size_t m = constraints.front().first.rows();
  const std::size_t n = constraints.front().second.rows();
  const unsigned order = constraints.front().first.order();
  for (const auto& [a, b] : constraints) {
    if (!a.square() || !b.square() || a.rows() != m || b.rows() != n) {
      throw Error(ErrorCode::dimension_mismatch, "solve_sylvester: A_k must be m x m and B_k n x n");
    }
    if (a.order() != order || b.order() != order) {
      throw Error(ErrorCode::order_mismatch, "solve_sylvester: mixed cyclotomic orders");
    }
  }
  // Unknown T[r][c] sits at index r*m + c. Equation (T A - B T)[r][c] = 0.
  const std::size_t nvars = n * m;
  std::vector<Vector> rows;
  rows.reserve(constraints.size() * nvars);
  for (const auto& [a, b] : constraints) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        Vector eq(nvars, Cyclotomic(order));
        for (std::size_t l = 0; l < m; ++l) eq[r * m + l] += a(l, c);
        for (std::size_t l = 0; l < n; ++l) eq[l * m + c] -= b(r, l);
        rows.push_back(std::move(eq));
      }
    }
  }
  std::vector<Matrix> out;
  for (auto& v : nullspace(rows, nvars, order)) out.emplace_back(n, m, std::move(v));
  return out;
}

}  // namespace repdescent
