#pragma once

#include "repdescent/matrix.hpp"

#include <span>
#include <utility>
#include <vector>

namespace repdescent {

using Vector = std::vector<Cyclotomic>;

/// Reduced row echelon form. Pivot rule: leftmost column that still has a
/// nonzero entry, first row (top to bottom) holding one. Zero rows are dropped,
/// so `rows` is a basis of the row space.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<Vector> rows, std::size_t ncols, unsigned order);

/// Basis of {x : A x = 0} for A given by its rows, returned in reduced
/// echelon form.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols, unsigned order);

/// Coordinates of v in an echelon basis, or empty when v is outside the span.
std::optional<Vector> echelon_coordinates(const Echelon& basis, const Vector& v);

/// Basis of { T (n x m) : T * A_k = B_k * T for all k }. Each solution is
/// vectorized row-major; the basis is the reduced echelon form of those
/// vectors, so the first nonzero entry of every element is 1.
std::vector<Matrix> solve_sylvester(std::span<const std::pair<Matrix, Matrix>> constraints);

}  // namespace repdescent
