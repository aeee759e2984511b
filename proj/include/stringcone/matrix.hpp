// SPDX-License-Identifier: Apache-2.0
//
// Small exact linear algebra over arbitrary-precision integers/rationals:
// just enough for unimodularity certificates, inverse-transpose actions on
// inequality systems, and rank/adjacency computations in the
// double-description method.

#ifndef STRINGCONE_MATRIX_HPP
#define STRINGCONE_MATRIX_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stringcone/errors.hpp"

namespace stringcone {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntMat = std::vector<std::vector<BigInt>>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat int_identity(std::size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b);
std::vector<BigInt> int_apply(const IntMat& a, const std::vector<BigInt>& v);

BigInt int_det(IntMat a);       // exact determinant (fraction-free elimination)
bool is_unimodular(const IntMat& a);

// Inverse of a square integer matrix with |det| = 1; entries are integers.
// Throws DomainError if the matrix is not unimodular.
IntMat unimodular_inverse(const IntMat& a);

std::size_t int_rank(IntMat a); // rank over the rationals

} // namespace stringcone

#endif
