#ifndef OSCBASIS_MATRICES_HPP
#define OSCBASIS_MATRICES_HPP

#include <string>
#include <vector>

#include "curves.hpp"

namespace osc {

// Assembled linear data of the basis: incidence and NZ matrices, the
// right-hand sides of the logarithmic gluing/cusp system, and the standard
// block form J. Row order is (m_1, l_1, ..., Gamma_1, C_1, ...).
struct SymplecticSystem {
    std::vector<std::string> rowNames;
    std::vector<int> rowKinds; // BasisRow::Kind per row
    ZMat incidence;            // #rows x 3n
    ZMat nz;                   // #rows x 2n, equals SY for the full basis
    ZMat sy;                   // 2n x 2n
    ZVec cbar;                 // 2 - c-sum for edge rows, -c-sum for cusp rows, 0 for Gamma rows
    ZMat J;                    // 2n x 2n standard blocks
    int tetCount = 0;
};

// Exact solution of SY Z = i pi Cbar; entries are rational coefficients of
// i pi (integers or half-integers).
struct ExactSolution {
    QVec z;      // 2n coefficients: Z_1, Z_1', Z_2, Z_2', ...
    QVec zfull;  // 3n coefficients with Z_j'' = 1 - Z_j - Z_j'
};

struct ResidualReport {
    struct Row {
        std::string name;
        bool inBasis = false;
        mpq_class residual; // (row . Z') - target, as a coefficient of i pi
    };
    std::vector<Row> edgeRows; // every edge class, including those in E_c
    std::vector<Row> cuspRows; // every m/l basis row
    bool allBasisRowsZero = true;
};

SymplecticSystem assemble(const TrainTrack& tt, const SymplecticBasis& basis);

// Z = 1/2 (-J SY^T J) Cbar, checked by exact back-substitution.
ExactSolution solve(const SymplecticSystem& sys);

// Re-evaluates every edge gluing row (including edges outside the basis) and
// every cusp row on the reconstructed 3n-entry solution.
ResidualReport verifySolution(const TrainTrack& tt, const SymplecticBasis& basis,
                              const SymplecticSystem& sys, const ExactSolution& sol);

// (-J SY^T J) SY, which must equal 2*Identity when Gram = 2J.
ZMat syInverseCheck(const SymplecticSystem& sys);

ZMat matMul(const ZMat& A, const ZMat& B);
ZMat matTranspose(const ZMat& A);

} // namespace osc

#endif
