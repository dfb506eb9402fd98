#pragma once

#include <cstddef>
#include <vector>

#include "nichols/cyclo.hpp"

namespace nichols {

using CycloMatrix = std::vector<std::vector<CycloNumber>>;

CycloMatrix identity_matrix(std::size_t n);
CycloMatrix zero_matrix(std::size_t rows, std::size_t cols);
CycloMatrix multiply(const CycloMatrix& a, const CycloMatrix& b);
std::vector<CycloNumber> multiply(const CycloMatrix& a, const std::vector<CycloNumber>& v);

/// Row echelon form in place by exact Gaussian elimination; returns the rank.
std::size_t row_reduce(CycloMatrix& m);
std::size_t matrix_rank(CycloMatrix m);
CycloNumber determinant(CycloMatrix m);
/// Throws DivisionByZero for singular input.
CycloMatrix inverse(CycloMatrix m);
/// Basis of { v : m v = 0 }.
std::vector<std::vector<CycloNumber>> kernel_basis(CycloMatrix m, std::size_t cols);

}  // namespace nichols
