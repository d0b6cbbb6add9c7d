#ifndef OSCBASIS_INTLINALG_HPP
#define OSCBASIS_INTLINALG_HPP

#include <gmpxx.h>

#include <vector>

namespace osc {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>; // row major
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Lattice basis of { x : A x = 0 } over the integers, via column elimination
// with gcd pivoting. Deterministic; exact.
ZMat integerKernelBasis(const ZMat& A, int cols);

// Rank over the rationals (independent elimination route, used to cross-check
// the integer kernel).
int rationalRank(const ZMat& A, int cols);

// Solve the square system M x = b over the rationals by Gaussian elimination.
// Throws InternalError if M is singular.
QVec rationalSolve(const QMat& M, const QVec& b);

} // namespace osc

#endif
