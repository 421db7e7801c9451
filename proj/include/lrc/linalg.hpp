#pragma once

#include "lrc/field.hpp"

#include <vector>

namespace lrc {

using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

// Reduced row echelon form with zero rows dropped. `pivots`, when given,
// receives the pivot column of each returned row.
Matrix row_reduce(const FieldContext& f, Matrix m, std::vector<int>* pivots = nullptr);

int rank(const FieldContext& f, const Matrix& m);

// Basis of { x in GF(q)^ncols : m * x^T = 0 }, in RREF.
Matrix null_space(const FieldContext& f, const Matrix& m, int ncols);

// Columns as rows and vice versa.
Matrix transpose(const Matrix& m, int ncols);

}  // namespace lrc
