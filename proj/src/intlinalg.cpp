#include "intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "errors.hpp"

namespace osc {

ZMat integerKernelBasis(const ZMat& A, int cols) {
    const int m = static_cast<int>(A.size());
    // Working copy of A's columns plus the transformation columns of U,
    // so that work = A * U holds throughout.
    ZMat work(A);
    for (auto& row : work) row.resize(static_cast<std::size_t>(cols), 0);
    ZMat U(static_cast<std::size_t>(cols), ZVec(static_cast<std::size_t>(cols), 0));
    for (int j = 0; j < cols; ++j) U[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;

    auto colAddMul = [&](int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < m; ++r)
            work[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] += q * work[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
        for (int r = 0; r < cols; ++r)
            U[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] += q * U[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
    };
    auto colSwap = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m; ++r)
            std::swap(work[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)], work[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
        for (int r = 0; r < cols; ++r)
            std::swap(U[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)], U[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
    };

    int firstActive = 0;
    for (int row = 0; row < m && firstActive < cols; ++row) {
        // Clear row 'row' on all active columns except one pivot, by repeated
        // reduction against the minimal-absolute-value nonzero entry.
        for (;;) {
            int piv = -1;
            for (int j = firstActive; j < cols; ++j) {
                const mpz_class& x = work[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                if (x == 0) continue;
                if (piv < 0 || mpz_cmpabs(x.get_mpz_t(), work[static_cast<std::size_t>(row)][static_cast<std::size_t>(piv)].get_mpz_t()) < 0)
                    piv = j;
            }
            if (piv < 0) break; // row already zero on active columns
            const mpz_class p = work[static_cast<std::size_t>(row)][static_cast<std::size_t>(piv)];
            bool cleared = true;
            for (int j = firstActive; j < cols; ++j) {
                if (j == piv) continue;
                const mpz_class& x = work[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                if (x == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
                colAddMul(j, piv, -q);
                if (work[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] != 0) cleared = false;
            }
            if (cleared) {
                colSwap(firstActive, piv);
                ++firstActive;
                break;
            }
        }
    }

    ZMat kernel;
    for (int j = firstActive; j < cols; ++j) {
        ZVec v(static_cast<std::size_t>(cols));
        bool nonzero = false;
        for (int r = 0; r < cols; ++r) {
            v[static_cast<std::size_t>(r)] = U[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            if (v[static_cast<std::size_t>(r)] != 0) nonzero = true;
        }
        if (!nonzero) throw InternalError("kernel transformation produced a zero column");
        // normalize: divide by content, first nonzero entry positive
        mpz_class g = 0;
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : v) x /= g;
        for (const auto& x : v) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int rationalRank(const ZMat& A, int cols) {
    QMat M(A.size(), QVec(static_cast<std::size_t>(cols)));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (int j = 0; j < cols && j < static_cast<int>(A[i].size()); ++j)
            M[i][static_cast<std::size_t>(j)] = mpq_class(A[i][static_cast<std::size_t>(j)]);
    int rank = 0;
    int rows = static_cast<int>(M.size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(rank)]);
        const mpq_class d = M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const mpq_class factor = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / d;
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= factor * M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

QVec rationalSolve(const QMat& M0, const QVec& b) {
    const int n = static_cast<int>(M0.size());
    QMat M(M0);
    QVec rhs(b);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw InternalError("singular matrix in rationalSolve");
        std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(col)]);
        std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const mpq_class factor = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= factor * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(col)];
        }
    }
    QVec x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)] / M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(i)].canonicalize();
    }
    return x;
}

} // namespace osc
