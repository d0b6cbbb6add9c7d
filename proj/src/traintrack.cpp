#include "traintrack.hpp"

#include <algorithm>
#include <sstream>

namespace osc {

namespace {
int offsetIn3(int v, int skip) { return v > skip ? v - 1 : v; }
} // namespace

bool WeightVector::isZero() const {
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

WeightVector& WeightVector::addMul(const WeightVector& o, const mpz_class& c) {
    if (c == 0) return *this;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += c * o.w[i];
    return *this;
}

WeightVector WeightVector::negated() const {
    WeightVector r(size());
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = -w[i];
    return r;
}

int TrainTrack::cornerBranch(int t, int v, int w) const {
    return 60 * t + v * 3 + offsetIn3(w, v);
}
int TrainTrack::exitBranch(int t, int v, int f) const {
    return 60 * t + 12 + v * 3 + offsetIn3(f, v);
}
int TrainTrack::centralBranch(int t, int f, int v) const {
    return 60 * t + 24 + f * 3 + offsetIn3(v, f);
}
int TrainTrack::longBranch(int t, int f, int vFrom, int vTo) const {
    int a = offsetIn3(vFrom, f);
    int b = offsetIn3(vTo, f);
    return 60 * t + 36 + f * 6 + a * 2 + (b > a ? b - 1 : b);
}

BranchRef TrainTrack::branch(int id) const {
    BranchRef r;
    r.tet = id / 60;
    int k = id % 60;
    auto undo3 = [](int x, int skip) { return x >= skip ? x + 1 : x; };
    if (k < 12) {
        r.kind = BranchRef::Corner;
        r.a = k / 3;
        r.b = undo3(k % 3, r.a);
    } else if (k < 24) {
        k -= 12;
        r.kind = BranchRef::Exit;
        r.a = k / 3;
        r.b = undo3(k % 3, r.a);
    } else if (k < 36) {
        k -= 24;
        r.kind = BranchRef::Central;
        r.a = k / 3;
        r.b = undo3(k % 3, r.a);
    } else {
        k -= 36;
        r.kind = BranchRef::Long;
        r.a = k / 6;
        int rest = k % 6;
        int ai = rest / 2;
        int bi = rest % 2;
        if (bi >= ai) ++bi;
        r.b = undo3(ai, r.a);
        r.c = undo3(bi, r.a);
    }
    return r;
}

std::string TrainTrack::branchName(int id) const {
    BranchRef r = branch(id);
    std::ostringstream os;
    switch (r.kind) {
    case BranchRef::Corner:
        os << "tri(" << r.tet << "," << r.a << ").corner." << letterName(tri_->edgeLabel(r.tet, r.a, r.b));
        break;
    case BranchRef::Exit:
        os << "tri(" << r.tet << "," << r.a << ").exit." << sideName(tri_->sideLabel(r.tet, r.a, r.b));
        break;
    case BranchRef::Central:
        os << "hex(" << r.tet << "," << r.a << ").central." << sideName(tri_->sideLabel(r.tet, r.b, r.a));
        break;
    case BranchRef::Long:
        os << "hex(" << r.tet << "," << r.a << ").long." << sideName(tri_->sideLabel(r.tet, r.b, r.a)) << "->"
           << sideName(tri_->sideLabel(r.tet, r.c, r.a));
        break;
    }
    return os.str();
}

TrainTrack::TrainTrack(const Triangulation& tri) : tri_(&tri), n_(tri.tetCount()) {
    buildVertices();
    buildRows();
}

void TrainTrack::buildVertices() {
    vertices_.clear();
    // 2-switches and 3-switches, one per (triangle, side) and (hexagon, side)
    for (int t = 0; t < n_; ++t)
        for (int v = 0; v < 4; ++v)
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                TrackVertexRef r;
                r.kind = TrackVertexRef::TwoSwitch;
                r.slotA = {t, v, f, 0};
                vertices_.push_back(r);
            }
    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f)
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                TrackVertexRef r;
                r.kind = TrackVertexRef::ThreeSwitch;
                r.slotA = {t, f, v, 0};
                vertices_.push_back(r);
            }
    oneSwitchBase_ = static_cast<int>(vertices_.size());
    // 1-switches on glued short-side pairs; keep the lexicographically
    // smaller slot as slotA so each pair appears once.
    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri_->gluing(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                std::array<int, 4> a{t, f, v, 0};
                std::array<int, 4> b{g.tet, g.perm[f], g.perm[v], 0};
                if (b < a) continue;
                TrackVertexRef r;
                r.kind = TrackVertexRef::OneSwitch;
                r.slotA = a;
                r.slotB = b;
                vertices_.push_back(r);
            }
        }
    stationBase_ = static_cast<int>(vertices_.size());
    // stations on glued long-rectangle pairs
    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri_->gluing(t, f);
            for (int k = 0; k < 6; ++k) {
                auto [i, j] = edgePairVerts(k);
                if (i == f || j == f) continue;
                int i2 = g.perm[i], j2 = g.perm[j];
                std::array<int, 4> a{t, f, i, j};
                std::array<int, 4> b{g.tet, g.perm[f], std::min(i2, j2), std::max(i2, j2)};
                if (b < a) continue;
                TrackVertexRef r;
                r.kind = TrackVertexRef::Station;
                r.slotA = a;
                // keep slotB's vertex order matched to slotA: slotB[2] is
                // glued to the slotA[2] end of the station
                r.slotB = {g.tet, g.perm[f], i2, j2};
                vertices_.push_back(r);
                // Orientation-reversal invariant: the two sides carry
                // opposite cyclic orders of short-side labels.
                Side ka = tri_->sideLabel(t, i, f), la = tri_->sideLabel(t, j, f);
                Side kb = tri_->sideLabel(g.tet, i2, g.perm[f]), lb = tri_->sideLabel(g.tet, j2, g.perm[f]);
                if (epsilon(ka, la) == 0 || epsilon(ka, la) != -epsilon(kb, lb))
                    throw InternalError("station side labels do not reverse cyclic order");
            }
        }
}

int TrainTrack::twoSwitchId(int t, int v, int f) const {
    return t * 12 + v * 3 + offsetIn3(f, v);
}
int TrainTrack::threeSwitchId(int t, int f, int v) const {
    return 12 * n_ + t * 12 + f * 3 + offsetIn3(v, f);
}

std::vector<int> TrainTrack::incidentBranches(int vertexId) const {
    const TrackVertexRef& r = vertex(vertexId);
    std::vector<int> out;
    switch (r.kind) {
    case TrackVertexRef::TwoSwitch: {
        auto [t, v, f, _] = r.slotA;
        for (int w = 0; w < 4; ++w)
            if (w != v && w != f) out.push_back(cornerBranch(t, v, w));
        out.push_back(exitBranch(t, v, f));
        break;
    }
    case TrackVertexRef::ThreeSwitch: {
        auto [t, f, v, _] = r.slotA;
        out.push_back(exitBranch(t, v, f));
        out.push_back(centralBranch(t, f, v));
        for (int u = 0; u < 4; ++u)
            if (u != f && u != v) out.push_back(longBranch(t, f, v, u));
        break;
    }
    case TrackVertexRef::OneSwitch:
        out.push_back(centralBranch(r.slotA[0], r.slotA[1], r.slotA[2]));
        out.push_back(centralBranch(r.slotB[0], r.slotB[1], r.slotB[2]));
        break;
    case TrackVertexRef::Station:
        out.push_back(longBranch(r.slotA[0], r.slotA[1], r.slotA[2], r.slotA[3]));
        out.push_back(longBranch(r.slotA[0], r.slotA[1], r.slotA[3], r.slotA[2]));
        out.push_back(longBranch(r.slotB[0], r.slotB[1], r.slotB[2], r.slotB[3]));
        out.push_back(longBranch(r.slotB[0], r.slotB[1], r.slotB[3], r.slotB[2]));
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int TrainTrack::branchSign(int vertexId, int branchId) const {
    const TrackVertexRef& r = vertex(vertexId);
    const BranchRef b = branch(branchId);
    switch (r.kind) {
    case TrackVertexRef::TwoSwitch: {
        auto [t, v, f, _] = r.slotA;
        if (b.kind == BranchRef::Exit && b.tet == t && b.a == v && b.b == f) return 1;
        if (b.kind == BranchRef::Corner && b.tet == t && b.a == v && b.b != f) {
            // corner branch runs tail -> head; the head side's label starts
            // with the corner letter
            Letter x = tri_->cornerLabel(Corner{t, v, b.b});
            Side here = tri_->sideLabel(t, v, f);
            if (sideFirst(here) == x) return -1; // head: oriented towards
            if (sideSecond(here) == x) return 1; // tail: oriented away
        }
        break;
    }
    case TrackVertexRef::ThreeSwitch: {
        auto [t, f, v, _] = r.slotA;
        if (b.kind == BranchRef::Exit && b.tet == t && b.a == v && b.b == f) return -1;
        if (b.kind == BranchRef::Central && b.tet == t && b.a == f && b.b == v) return 1;
        if (b.kind == BranchRef::Long && b.tet == t && b.a == f && b.b == v) return 1;
        break;
    }
    case TrackVertexRef::OneSwitch:
        if (b.kind == BranchRef::Central &&
            ((b.tet == r.slotA[0] && b.a == r.slotA[1] && b.b == r.slotA[2]) ||
             (b.tet == r.slotB[0] && b.a == r.slotB[1] && b.b == r.slotB[2])))
            return -1;
        break;
    case TrackVertexRef::Station:
        if (b.kind == BranchRef::Long) {
            auto onRect = [&](const std::array<int, 4>& s) {
                return b.tet == s[0] && b.a == s[1] &&
                       ((b.b == s[2] && b.c == s[3]) || (b.b == s[3] && b.c == s[2]));
            };
            if (onRect(r.slotA) || onRect(r.slotB)) return -1;
        }
        break;
    }
    throw InputError("branch " + std::to_string(branchId) + " is not incident to vertex " + std::to_string(vertexId));
}

std::string TrainTrack::vertexName(int id) const {
    const TrackVertexRef& r = vertex(id);
    std::ostringstream os;
    switch (r.kind) {
    case TrackVertexRef::TwoSwitch:
        os << "2sw tri(" << r.slotA[0] << "," << r.slotA[1] << ")." << sideName(tri_->sideLabel(r.slotA[0], r.slotA[1], r.slotA[2]));
        break;
    case TrackVertexRef::ThreeSwitch:
        os << "3sw hex(" << r.slotA[0] << "," << r.slotA[1] << ")." << sideName(tri_->sideLabel(r.slotA[0], r.slotA[2], r.slotA[1]));
        break;
    case TrackVertexRef::OneSwitch:
        os << "1sw hex(" << r.slotA[0] << "," << r.slotA[1] << ")|hex(" << r.slotB[0] << "," << r.slotB[1] << ")";
        break;
    case TrackVertexRef::Station:
        os << "station hex(" << r.slotA[0] << "," << r.slotA[1] << ").edge{" << r.slotA[2] << r.slotA[3] << "}|hex("
           << r.slotB[0] << "," << r.slotB[1] << ").edge{" << r.slotB[2] << r.slotB[3] << "}";
        break;
    }
    return os.str();
}

void TrainTrack::buildRows() {
    rows_.clear();
    rows_.reserve(vertices_.size());
    for (int vid = 0; vid < vertexCount(); ++vid) {
        const TrackVertexRef& v = vertex(vid);
        CompatRow row;
        if (v.kind == TrackVertexRef::Station) {
            // station condition balances the two ends, not in/out flow:
            // weights at one end sum to the weights at the other
            auto [t, f, i, j] = v.slotA;
            auto [t2, f2, i2, j2] = v.slotB;
            row.terms.emplace_back(longBranch(t, f, i, j), 1);
            row.terms.emplace_back(longBranch(t2, f2, i2, j2), 1);
            row.terms.emplace_back(longBranch(t, f, j, i), -1);
            row.terms.emplace_back(longBranch(t2, f2, j2, i2), -1);
            std::sort(row.terms.begin(), row.terms.end());
        } else {
            for (int b : incidentBranches(vid)) row.terms.emplace_back(b, branchSign(vid, b));
        }
        // first coefficient kept positive
        if (!row.terms.empty() && row.terms.front().second < 0)
            for (auto& [b, c] : row.terms) c = -c;
        rows_.push_back(std::move(row));
    }
}

bool TrainTrack::isOscillating(const WeightVector& z) const {
    if (z.size() != branchCount()) throw InputError("weight vector size mismatch");
    for (const auto& row : rows_) {
        mpz_class s = 0;
        for (const auto& [b, c] : row.terms) s += c * z[b];
        if (s != 0) return false;
    }
    return true;
}

std::vector<WeightVector> TrainTrack::kernelBasis() const {
    ZMat A;
    A.reserve(rows_.size());
    for (const auto& row : rows_) {
        ZVec r(static_cast<std::size_t>(branchCount()), 0);
        for (const auto& [b, c] : row.terms) r[static_cast<std::size_t>(b)] = c;
        A.push_back(std::move(r));
    }
    ZMat K = integerKernelBasis(A, branchCount());
    std::vector<WeightVector> basis;
    basis.reserve(K.size());
    for (auto& col : K) {
        WeightVector w(branchCount());
        w.w = std::move(col);
        if (!isOscillating(w)) throw InternalError("kernel vector fails compatibility");
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace osc
