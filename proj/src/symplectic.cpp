#include "symplectic.hpp"

#include <algorithm>

namespace osc {

ZVec HolonomyVector::nz() const {
    ZVec out(static_cast<std::size_t>(2 * tetCount()));
    for (int i = 0; i < tetCount(); ++i) {
        out[static_cast<std::size_t>(2 * i)] = inc[static_cast<std::size_t>(3 * i)] - inc[static_cast<std::size_t>(3 * i + 2)];
        out[static_cast<std::size_t>(2 * i + 1)] = inc[static_cast<std::size_t>(3 * i + 1)] - inc[static_cast<std::size_t>(3 * i + 2)];
    }
    return out;
}

HolonomyVector& HolonomyVector::addMul(const HolonomyVector& o, const mpz_class& c) {
    for (std::size_t i = 0; i < inc.size(); ++i) inc[i] += c * o.inc[i];
    return *this;
}

namespace {

// The corner of triangle (t,v) carrying letter x.
int cornerWithLetter(const Triangulation& tri, int t, int v, Letter x) {
    for (int w = 0; w < 4; ++w) {
        if (w == v) continue;
        if (tri.edgeLabel(t, v, w) == x) return w;
    }
    throw InternalError("corner letter not found");
}

} // namespace

mpz_class localPairing(const TrainTrack& tt, int vertexId, int branch1, int branch2) {
    const Triangulation& tri = tt.tri();
    auto inc = tt.incidentBranches(vertexId);
    if (std::find(inc.begin(), inc.end(), branch1) == inc.end() ||
        std::find(inc.begin(), inc.end(), branch2) == inc.end())
        throw InputError("branch not incident to vertex");
    if (branch1 == branch2) return 0;
    const TrackVertexRef& r = tt.vertex(vertexId);
    const BranchRef b1 = tt.branch(branch1);
    const BranchRef b2 = tt.branch(branch2);
    switch (r.kind) {
    case TrackVertexRef::TwoSwitch: {
        if (b1.kind != BranchRef::Corner || b2.kind != BranchRef::Corner) return 0;
        Letter x = tri.cornerLabel(Corner{b1.tet, b1.a, b1.b});
        Letter y = tri.cornerLabel(Corner{b2.tet, b2.a, b2.b});
        return epsilon(x, y);
    }
    case TrackVertexRef::ThreeSwitch: {
        auto [t, f, v, _] = r.slotA;
        (void)t;
        (void)v;
        if (b1.kind == BranchRef::Exit || b2.kind == BranchRef::Exit) return 0;
        auto labelOf = [&](const BranchRef& b) {
            // central carries the short-rectangle label; a long branch
            // gamma(k,l) pairs through its destination label l
            if (b.kind == BranchRef::Central) return std::pair<bool, Side>(true, tri.sideLabel(b.tet, b.b, b.a));
            return std::pair<bool, Side>(false, tri.sideLabel(b.tet, b.c, f));
        };
        auto [c1, l1] = labelOf(b1);
        auto [c2, l2] = labelOf(b2);
        if (c1 && !c2) return epsilon(tri.sideLabel(b1.tet, b1.b, b1.a), l2);
        if (!c1 && c2) return -epsilon(tri.sideLabel(b2.tet, b2.b, b2.a), l1);
        if (!c1 && !c2) return -epsilon(l1, l2);
        return 0;
    }
    case TrackVertexRef::OneSwitch:
        return 0;
    case TrackVertexRef::Station: {
        if (b1.kind != BranchRef::Long || b2.kind != BranchRef::Long) return 0;
        // nonzero only for the two branches of one long rectangle
        if (b1.tet != b2.tet || b1.a != b2.a) return 0;
        if (!(b1.b == b2.c && b1.c == b2.b)) return 0;
        Side k = tri.sideLabel(b1.tet, b1.b, b1.a);
        Side l = tri.sideLabel(b1.tet, b1.c, b1.a);
        return epsilon(k, l);
    }
    }
    return 0;
}

mpz_class pairing(const TrainTrack& tt, const WeightVector& z1, const WeightVector& z2) {
    if (!tt.isOscillating(z1) || !tt.isOscillating(z2))
        throw InputError("pairing requires abstract oscillating curves");
    const Triangulation& tri = tt.tri();
    const int n = tri.tetCount();
    mpz_class total = 0;
    // 2-switches: corner pair (p,q) of the side label, epsilon = +1
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v)
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                Side s = tri.sideLabel(t, v, f);
                int bp = tt.cornerBranch(t, v, cornerWithLetter(tri, t, v, sideFirst(s)));
                int bq = tt.cornerBranch(t, v, cornerWithLetter(tri, t, v, sideSecond(s)));
                total += z1[bp] * z2[bq] - z1[bq] * z2[bp];
            }
    // 3-switches
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                Side k = tri.sideLabel(t, v, f);
                int bc = tt.centralBranch(t, f, v);
                int us[2];
                int c = 0;
                for (int u = 0; u < 4; ++u)
                    if (u != f && u != v) us[c++] = u;
                int bl0 = tt.longBranch(t, f, v, us[0]);
                int bl1 = tt.longBranch(t, f, v, us[1]);
                Side l0 = tri.sideLabel(t, us[0], f);
                Side l1 = tri.sideLabel(t, us[1], f);
                int e0 = epsilon(k, l0), e1 = epsilon(k, l1), e01 = -epsilon(l0, l1);
                total += e0 * (z1[bc] * z2[bl0] - z1[bl0] * z2[bc]);
                total += e1 * (z1[bc] * z2[bl1] - z1[bl1] * z2[bc]);
                total += e01 * (z1[bl0] * z2[bl1] - z1[bl1] * z2[bl0]);
            }
    // stations: each side of each station contributes its own rectangle pair
    for (int vid = 0; vid < tt.vertexCount(); ++vid) {
        const TrackVertexRef& r = tt.vertex(vid);
        if (r.kind != TrackVertexRef::Station) continue;
        for (const auto& slot : {r.slotA, r.slotB}) {
            auto [t, f, i, j] = slot;
            int bij = tt.longBranch(t, f, i, j);
            int bji = tt.longBranch(t, f, j, i);
            int e = epsilon(tri.sideLabel(t, i, f), tri.sideLabel(t, j, f));
            total += e * (z1[bij] * z2[bji] - z1[bji] * z2[bij]);
        }
    }
    return total;
}

mpz_class pairingFacewise(const TrainTrack& tt, const WeightVector& z1, const WeightVector& z2) {
    if (!tt.isOscillating(z1) || !tt.isOscillating(z2))
        throw InputError("pairing requires abstract oscillating curves");
    const Triangulation& tri = tt.tri();
    const int n = tri.tetCount();
    mpz_class total = 0;
    // triangle sum: n_ab n'_bc - n_bc n'_ab over all boundary triangles
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) {
            int fab = tri.sideFace(t, v, Side::AB);
            int fbc = tri.sideFace(t, v, Side::BC);
            int bab = tt.exitBranch(t, v, fab);
            int bbc = tt.exitBranch(t, v, fbc);
            total += z1[bab] * z2[bbc] - z1[bbc] * z2[bab];
        }
    // glued hexagon pairs, counted once each
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (std::array<int, 2>{g.tet, g.perm[f]} < std::array<int, 2>{t, f}) continue;
            // label -> vertex on the unhatted side
            int lab2v[3];
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                lab2v[static_cast<int>(tri.sideLabel(t, v, f))] = v;
            }
            for (int rot = 0; rot < 3; ++rot) {
                Side k = static_cast<Side>(rot);
                Side l = nextSide(k);
                Side m = nextSide(l);
                int vk = lab2v[static_cast<int>(k)], vl = lab2v[static_cast<int>(l)], vm = lab2v[static_cast<int>(m)];
                int hvk = g.perm[vk], hvl = g.perm[vl], hvm = g.perm[vm];
                int t2 = g.tet, f2 = g.perm[f];
                const mpz_class &nk = z1[tt.centralBranch(t, f, vk)], &nk_ = z2[tt.centralBranch(t, f, vk)];
                const mpz_class &nkl = z1[tt.longBranch(t, f, vk, vl)], &nkl_ = z2[tt.longBranch(t, f, vk, vl)];
                const mpz_class &nkm = z1[tt.longBranch(t, f, vk, vm)], &nkm_ = z2[tt.longBranch(t, f, vk, vm)];
                const mpz_class &nlk = z1[tt.longBranch(t, f, vl, vk)], &nlk_ = z2[tt.longBranch(t, f, vl, vk)];
                const mpz_class &hnkl = z1[tt.longBranch(t2, f2, hvk, hvl)], &hnkl_ = z2[tt.longBranch(t2, f2, hvk, hvl)];
                const mpz_class &hnkm = z1[tt.longBranch(t2, f2, hvk, hvm)], &hnkm_ = z2[tt.longBranch(t2, f2, hvk, hvm)];
                const mpz_class &hnlk = z1[tt.longBranch(t2, f2, hvl, hvk)], &hnlk_ = z2[tt.longBranch(t2, f2, hvl, hvk)];
                // short-rectangle terms
                total += nk * (nkl_ - nkm_ + hnkl_ - hnkm_);
                total += nk_ * (-nkl + nkm - hnkl + hnkm);
                total += -nkl * nkm_ + nkm * nkl_ - hnkm * hnkl_ + hnkl * hnkm_;
                // station terms
                total += nkl * nlk_ - nlk * nkl_ - hnkl * hnlk_ + hnlk * hnkl_;
            }
        }
    return total;
}

HolonomyVector holonomy(const TrainTrack& tt, const WeightVector& z) {
    const Triangulation& tri = tt.tri();
    HolonomyVector h(tri.tetCount());
    for (int t = 0; t < tri.tetCount(); ++t)
        for (int v = 0; v < 4; ++v)
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                const mpz_class& c = z[tt.cornerBranch(t, v, w)];
                if (c == 0) continue;
                h.inc[static_cast<std::size_t>(3 * t + static_cast<int>(tri.edgeLabel(t, v, w)))] += c;
            }
    return h;
}

mpz_class omegaNZ(const ZVec& u, const ZVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0) throw InputError("omega dimension mismatch");
    mpz_class total = 0;
    for (std::size_t i = 0; i + 1 < u.size(); i += 2) total += u[i] * v[i + 1] - u[i + 1] * v[i];
    return total;
}

mpz_class omega(const HolonomyVector& u, const HolonomyVector& v) {
    if (u.tetCount() != v.tetCount()) throw InputError("omega dimension mismatch");
    return omegaNZ(u.nz(), v.nz());
}

} // namespace osc
