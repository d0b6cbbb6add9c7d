#include "matrices.hpp"

#include <set>

namespace osc {

ZMat matMul(const ZMat& A, const ZMat& B) {
    if (A.empty() || B.empty()) return {};
    ZMat C(A.size(), ZVec(B.front().size(), 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (A[i][k] == 0) continue;
            for (std::size_t j = 0; j < B.front().size(); ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

ZMat matTranspose(const ZMat& A) {
    if (A.empty()) return {};
    ZMat T(A.front().size(), ZVec(A.size(), 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.front().size(); ++j) T[j][i] = A[i][j];
    return T;
}

SymplecticSystem assemble(const TrainTrack& tt, const SymplecticBasis& basis) {
    const int n = tt.tri().tetCount();
    SymplecticSystem sys;
    sys.tetCount = n;
    for (const BasisRow& row : basis.rows) {
        sys.rowNames.push_back(row.name());
        sys.rowKinds.push_back(row.kind);
        HolonomyVector h = holonomy(tt, row.weights);
        sys.incidence.push_back(h.inc);
        sys.nz.push_back(h.nz());
        mpz_class csum = 0;
        for (int i = 0; i < n; ++i) csum += h.inc[static_cast<std::size_t>(3 * i + 2)];
        switch (row.kind) {
        case BasisRow::C: sys.cbar.push_back(2 - csum); break;
        case BasisRow::M:
        case BasisRow::L: sys.cbar.push_back(-csum); break;
        case BasisRow::Gamma: sys.cbar.push_back(0); break;
        }
    }
    if (static_cast<int>(sys.nz.size()) != 2 * n)
        throw InternalError("basis has " + std::to_string(sys.nz.size()) + " rows, expected " + std::to_string(2 * n));
    sys.sy = sys.nz;
    sys.J = standardJ(n);
    // Gram identity: SY J SY^T == 2 J
    ZMat G = matMul(matMul(sys.sy, sys.J), matTranspose(sys.sy));
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j)
            if (G[i][j] != 2 * sys.J[i][j]) throw InternalError("assembled SY fails the Gram identity");
    return sys;
}

ZMat syInverseCheck(const SymplecticSystem& sys) {
    ZMat JT = matMul(sys.J, matTranspose(sys.sy));
    ZMat M = matMul(JT, sys.J);
    for (auto& row : M)
        for (auto& x : row) x = -x;
    return matMul(M, sys.sy);
}

ExactSolution solve(const SymplecticSystem& sys) {
    const int n2 = static_cast<int>(sys.sy.size());
    // 2Z = (-J SY^T J) Cbar
    ZMat M = matMul(matMul(sys.J, matTranspose(sys.sy)), sys.J);
    ExactSolution sol;
    sol.z.resize(static_cast<std::size_t>(n2));
    for (int i = 0; i < n2; ++i) {
        mpz_class acc = 0;
        for (int k = 0; k < n2; ++k) acc += -M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * sys.cbar[static_cast<std::size_t>(k)];
        sol.z[static_cast<std::size_t>(i)] = mpq_class(acc, 2);
        sol.z[static_cast<std::size_t>(i)].canonicalize();
    }
    // exact back-substitution
    for (int i = 0; i < n2; ++i) {
        mpq_class acc = 0;
        for (int k = 0; k < n2; ++k) acc += mpq_class(sys.sy[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * sol.z[static_cast<std::size_t>(k)];
        if (acc != mpq_class(sys.cbar[static_cast<std::size_t>(i)]))
            throw InternalError("solution fails SY Z = Cbar at row " + std::to_string(i));
    }
    sol.zfull.resize(static_cast<std::size_t>(3 * sys.tetCount));
    for (int i = 0; i < sys.tetCount; ++i) {
        const mpq_class& z1 = sol.z[static_cast<std::size_t>(2 * i)];
        const mpq_class& z2 = sol.z[static_cast<std::size_t>(2 * i + 1)];
        sol.zfull[static_cast<std::size_t>(3 * i)] = z1;
        sol.zfull[static_cast<std::size_t>(3 * i + 1)] = z2;
        sol.zfull[static_cast<std::size_t>(3 * i + 2)] = mpq_class(1) - z1 - z2;
    }
    return sol;
}

ResidualReport verifySolution(const TrainTrack& tt, const SymplecticBasis& basis,
                              const SymplecticSystem& sys, const ExactSolution& sol) {
    (void)sys;
    const Triangulation& tri = tt.tri();
    const int n = tri.tetCount();
    ResidualReport rep;
    auto evalRow = [&](const HolonomyVector& h, const mpz_class& target) {
        mpq_class acc = 0;
        for (int i = 0; i < 3 * n; ++i) acc += mpq_class(h.inc[static_cast<std::size_t>(i)]) * sol.zfull[static_cast<std::size_t>(i)];
        acc -= mpq_class(target);
        acc.canonicalize();
        return acc;
    };
    std::set<int> basisEdges(basis.ctx.basisEdges.begin(), basis.ctx.basisEdges.end());
    for (int e = 0; e < tri.edgeClassCount(); ++e) {
        WeightVector c = edgeCurve(tt, e);
        ResidualReport::Row row;
        row.name = "C_E" + std::to_string(e);
        row.inBasis = basisEdges.count(e) > 0;
        row.residual = evalRow(holonomy(tt, c), 2);
        if (row.inBasis && row.residual != 0) rep.allBasisRowsZero = false;
        rep.edgeRows.push_back(std::move(row));
    }
    for (const BasisRow& br : basis.rows) {
        if (br.kind != BasisRow::M && br.kind != BasisRow::L) continue;
        ResidualReport::Row row;
        row.name = br.name();
        row.inBasis = true;
        row.residual = evalRow(holonomy(tt, br.weights), 0);
        if (row.residual != 0) rep.allBasisRowsZero = false;
        rep.cuspRows.push_back(std::move(row));
    }
    return rep;
}

} // namespace osc
