#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orealg/field.hpp"

namespace orealg::linalg {

using Vector = std::vector<Element>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

/// Reduced row echelon form. Rows are normalized so each pivot is 1.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;  // pivot column of rows[i]
  std::size_t cols = 0;
};

/// Exact Gauss-Jordan elimination. Among the candidate pivots of a column
/// the entry of smallest Element::weight() is chosen, which keeps the
/// fractions from blowing up.
Echelon row_reduce(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {c : m c = 0}. One vector per free column, with a 1 in that
/// column, so the result is deterministic.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols, const Level& field);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b, const Level& field);

Matrix transpose(const Matrix& m, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n, const Level& field);

/// Linear relations over the base field (ℚ or F_p) among elements of a
/// tower: returns rows r over the base with  sum_e c_e elems[e] = 0  iff
/// r . c = 0  for c in the base field.
Matrix base_relation_rows(std::span<const Element> elems);

}  // namespace orealg::linalg
