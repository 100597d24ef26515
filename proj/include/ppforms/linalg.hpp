#pragma once

#include <vector>

#include "ppforms/scalar.hpp"

namespace ppforms {

// Dense row-major matrix of scalars. Small sizes only (n <= ~20); plain
// Gaussian elimination over the field is exact in exact mode.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix make_matrix(std::size_t rows, std::size_t cols, Mode mode);
Matrix identity_matrix(std::size_t n, Mode mode);
Mode matrix_mode(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix conj_transpose(const Matrix& a);
bool matrix_equal(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& a);
// Max |a-b| entrywise as double; for float-mode comparisons.
double matrix_max_abs_diff(const Matrix& a, const Matrix& b);

Scalar determinant(Matrix a);            // destroys its copy
Matrix inverse(Matrix a);                // throws invalid_input when singular
// Basis of the right null space of a (rows are constraints).
std::vector<std::vector<Scalar>> kernel_basis(Matrix a);

}  // namespace ppforms
