#include "checks.hpp"

#include <sstream>

namespace osc {

KernelSampler::KernelSampler(const TrainTrack& tt, unsigned long seed)
    : tt_(&tt), basis_(tt.kernelBasis()), state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

// splitmix64: small, fully specified, platform independent
unsigned long long KernelSampler::nextRaw() {
    state_ += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

WeightVector KernelSampler::next(int coeffBound) {
    WeightVector z = tt_->zero();
    const unsigned long long span = static_cast<unsigned long long>(2 * coeffBound + 1);
    for (const WeightVector& v : basis_) {
        long c = static_cast<long>(nextRaw() % span) - coeffBound;
        if (c != 0) z.addMul(v, c);
    }
    return z;
}

bool allPassed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> runChecks(const Triangulation& tri, unsigned long seed, int samples) {
    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back(CheckResult{name, pass, detail});
    };

    TrainTrack tt(tri);
    // structural counts
    {
        int n = tri.tetCount();
        bool ok = tt.branchCount() == 60 * n && tt.vertexCount() == 36 * n;
        push("branch and vertex counts (60n, 36n)", ok);
    }
    {
        int g = tri.totalGenus();
        bool ok = 2 * tri.tetCount() == 2 * tri.edgeClassCount() - 2 * tri.endCount() + 2 * g;
        std::ostringstream os;
        os << "2n=" << 2 * tri.tetCount() << " 2nE-2nc+2g=" << 2 * tri.edgeClassCount() - 2 * tri.endCount() + 2 * g;
        push("Euler identity 2n = 2nE - 2nc + 2g", ok, os.str());
    }

    // main theorem sampling
    KernelSampler sampler(tt, seed);
    {
        bool ok = true;
        std::string detail;
        for (int s = 0; s < samples && ok; ++s) {
            WeightVector z1 = sampler.next(3);
            WeightVector z2 = sampler.next(3);
            mpz_class p = pairing(tt, z1, z2);
            mpz_class fw = pairingFacewise(tt, z1, z2);
            mpz_class om = omega(holonomy(tt, z1), holonomy(tt, z2));
            if (!(p == fw && fw == om)) {
                ok = false;
                std::ostringstream os;
                os << "sample " << s << ": pairing=" << p.get_str() << " facewise=" << fw.get_str()
                   << " omega=" << om.get_str();
                detail = os.str();
            }
        }
        push("main theorem: omega(h,h) == pairing == facewise on " + std::to_string(samples) + " samples", ok, detail);
    }
    {
        bool ok = true;
        for (int s = 0; s < samples / 4 && ok; ++s) {
            WeightVector z1 = sampler.next(3);
            WeightVector z2 = sampler.next(3);
            ok = pairing(tt, z1, z2) == -pairing(tt, z2, z1);
        }
        push("pairing antisymmetry", ok);
    }

    // basis construction and matrix identities
    try {
        SymplecticBasis basis = buildBasis(tt);
        {
            bool ok = static_cast<int>(basis.rows.size()) == 2 * tri.tetCount();
            push("basis has 2n rows", ok);
        }
        {
            bool ok = true;
            for (const auto& r : basis.rows) ok = ok && tt.isOscillating(r.weights);
            push("every basis curve is oscillating", ok);
        }
        {
            ZMat G = pairingGram(tt, basis.rows);
            ZMat J2 = standardJ(static_cast<int>(basis.rows.size()) / 2);
            for (auto& row : J2)
                for (auto& x : row) x *= 2;
            push("basis Gram == 2J", G == J2);
        }
        SymplecticSystem sys = assemble(tt, basis);
        {
            ZMat I2 = syInverseCheck(sys);
            bool ok = true;
            for (std::size_t i = 0; i < I2.size(); ++i)
                for (std::size_t j = 0; j < I2.size(); ++j)
                    ok = ok && I2[i][j] == (i == j ? 2 : 0);
            push("(-J SY^T J) SY == 2 Id", ok);
        }
        ExactSolution sol = solve(sys);
        {
            bool ok = true;
            for (const auto& q : sol.z) ok = ok && mpq_class(2 * q).get_den() == 1;
            push("2Z integral", ok);
        }
        {
            ResidualReport rep = verifySolution(tt, basis, sys, sol);
            push("basis rows solve exactly", rep.allBasisRowsZero);
        }
    } catch (const std::exception& e) {
        push("basis construction", false, e.what());
    }

    // classical NZ property: edge rows pairwise omega-orthogonal
    {
        bool ok = true;
        std::vector<HolonomyVector> rows;
        for (int e = 0; e < tri.edgeClassCount(); ++e) rows.push_back(holonomy(tt, edgeCurve(tt, e)));
        for (std::size_t i = 0; i < rows.size() && ok; ++i)
            for (std::size_t j = 0; j < rows.size() && ok; ++j) ok = omega(rows[i], rows[j]) == 0;
        push("edge rows pairwise omega-orthogonal", ok);
    }

    return out;
}

} // namespace osc
