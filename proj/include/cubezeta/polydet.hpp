#pragma once

#include "cubezeta/intpoly.hpp"

namespace cubezeta {

// exact determinant of an integer matrix (Bareiss fraction-free elimination)
mpz_class int_matrix_det(std::vector<std::vector<mpz_class>> m);

// exact determinant of a square matrix of integer polynomials, by evaluation
// at deg+1 integer points followed by exact interpolation
IntPoly poly_matrix_det(const std::vector<std::vector<IntPoly>>& m);

// reference oracle: cofactor expansion (small matrices only)
IntPoly poly_matrix_det_cofactor(const std::vector<std::vector<IntPoly>>& m);

}  // namespace cubezeta
