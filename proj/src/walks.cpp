#include "walks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace osc {

namespace {

// Tail and head faces of the corner branch at corner {v,w}: the corner
// branch runs from the side whose label ends with the corner letter to the
// side whose label starts with it.
std::pair<int, int> cornerTailHead(const Triangulation& tri, int t, int v, int w) {
    Letter x = tri.edgeLabel(t, v, w);
    int tail = -1, head = -1;
    for (int f = 0; f < 4; ++f) {
        if (f == v || f == w) continue;
        Side s = tri.sideLabel(t, v, f);
        if (sideSecond(s) == x) tail = f;
        if (sideFirst(s) == x) head = f;
    }
    if (tail < 0 || head < 0) throw InternalError("corner without tail/head side");
    return {tail, head};
}

} // namespace

WalkState stateAfter(const Triangulation& tri, const WalkStep& s) {
    if (s.kind == WalkStep::Cross) {
        auto g = tri.sideGlue(s.tet, s.enter, s.face);
        return WalkState{g[0], g[1], g[2]};
    }
    return WalkState{s.tet, s.exit, s.face};
}

WalkState stateBefore(const WalkStep& s) { return WalkState{s.tet, s.enter, s.face}; }

WeightVector realizeWalk(const TrainTrack& tt, const CurveWalk& walk) {
    const Triangulation& tri = tt.tri();
    if (walk.steps.empty()) throw InputError("empty walk");
    WeightVector z(tt.branchCount());
    int polarity = 1;
    WalkState cur = stateAfter(tri, walk.steps.back());
    for (const WalkStep& st : walk.steps) {
        WalkState need = stateBefore(st);
        if (need.tet != cur.tet || need.vertex != cur.vertex)
            throw InputError("walk steps are not adjacent");
        if (need.face == cur.face) throw InputError("walk enters and leaves a triangle through the same side");
        // corner pass between the entry side and the step's exit side
        int u = -1;
        for (int w = 0; w < 4; ++w)
            if (w != cur.vertex && w != cur.face && w != need.face) u = w;
        auto [tail, head] = cornerTailHead(tri, cur.tet, cur.vertex, u);
        if (!((tail == cur.face && head == need.face) || (head == cur.face && tail == need.face)))
            throw InternalError("corner pass does not join the two sides");
        z[tt.cornerBranch(cur.tet, cur.vertex, u)] += (cur.face == tail) ? polarity : -polarity;
        if (st.kind == WalkStep::Cross) {
            auto g = tri.sideGlue(st.tet, st.enter, st.face);
            z[tt.exitBranch(st.tet, st.enter, st.face)] += polarity;
            z[tt.centralBranch(st.tet, st.face, st.enter)] += polarity;
            z[tt.centralBranch(g[0], g[2], g[1])] += -polarity;
            z[tt.exitBranch(g[0], g[1], g[2])] += -polarity;
        } else {
            z[tt.exitBranch(st.tet, st.enter, st.face)] += polarity;
            z[tt.longBranch(st.tet, st.face, st.enter, st.exit)] += polarity;
            z[tt.longBranch(st.tet, st.face, st.exit, st.enter)] += polarity;
            z[tt.exitBranch(st.tet, st.exit, st.face)] += polarity;
            polarity = -polarity;
        }
        cur = stateAfter(tri, st);
    }
    if (polarity != 1) throw InputError("walk passes an odd number of stations");
    if (!tt.isOscillating(z)) throw InternalError("realized walk violates compatibility");
    return z;
}

std::pair<CurveWalk, int> edgeCurveWalk(const Triangulation& tri, int edgeId) {
    const EdgeClass& ec = tri.edgeClass(edgeId);
    auto minCorner = [&](int vid) {
        const auto& link = tri.vertexLink(vid);
        Corner best = link.front();
        for (const Corner& c : link)
            if (std::tuple(c.tet, c.vertex, c.other) < std::tuple(best.tet, best.vertex, best.other)) best = c;
        return best;
    };
    Corner c0 = minCorner(ec.endVertex[0]);
    Corner c1 = minCorner(ec.endVertex[1]);
    int vid = ec.endVertex[0];
    Corner start = c0;
    if (std::tuple(c1.tet, c1.vertex, c1.other) < std::tuple(c0.tet, c0.vertex, c0.other)) {
        vid = ec.endVertex[1];
        start = c1;
    }
    CurveWalk walk;
    Corner cur = start;
    do {
        auto [tail, head] = cornerTailHead(tri, cur.tet, cur.vertex, cur.other);
        (void)tail;
        walk.steps.push_back(WalkStep{WalkStep::Cross, cur.tet, head, cur.vertex, 0});
        const Gluing& g = tri.gluing(cur.tet, head);
        cur = Corner{g.tet, g.perm[cur.vertex], g.perm[cur.other]};
    } while (!(cur == start));
    return {walk, vid};
}

std::vector<CurveWalk> boundaryCycleWalks(const Triangulation& tri, int endId) {
    const End& end = tri.end(endId);
    std::vector<int> tris = end.triangles;
    std::sort(tris.begin(), tris.end());
    // breadth-first spanning tree of the dual graph; parent steps cross into
    // the child triangle
    std::map<int, WalkStep> parent;
    std::map<int, bool> seen;
    std::vector<int> order;
    seen[tris.front()] = true;
    order.push_back(tris.front());
    std::set<std::pair<WalkState, WalkState>> treeSides;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int tid = order[qi];
        int t = tid / 4, v = tid % 4;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            auto g = tri.sideGlue(t, v, f);
            int tid2 = tri.triangleId(g[0], g[1]);
            if (!seen.count(tid2)) {
                seen[tid2] = true;
                parent[tid2] = WalkStep{WalkStep::Cross, t, f, v, 0};
                treeSides.insert({WalkState{t, v, f}, WalkState{g[0], g[1], g[2]}});
                order.push_back(tid2);
            }
        }
    }
    auto pathFromRoot = [&](int tid) {
        std::vector<WalkStep> seq;
        while (parent.count(tid)) {
            WalkStep st = parent[tid];
            seq.push_back(st);
            tid = tri.triangleId(st.tet, st.enter);
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    };
    std::vector<CurveWalk> cycles;
    std::set<std::pair<WalkState, WalkState>> visited;
    for (int tid : order) {
        int t = tid / 4, v = tid % 4;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            auto g = tri.sideGlue(t, v, f);
            WalkState a{t, v, f}, b{g[0], g[1], g[2]};
            auto key = std::minmax(a, b);
            if (visited.count({key.first, key.second})) continue;
            visited.insert({key.first, key.second});
            if (treeSides.count({a, b}) || treeSides.count({b, a})) continue;
            if (a == b) throw InternalError("boundary side glued to itself");
            // fundamental cycle: root->A, cross, B->root reversed
            auto p1 = pathFromRoot(tid);
            auto p2 = pathFromRoot(tri.triangleId(g[0], g[1]));
            std::size_t common = 0;
            while (common < p1.size() && common < p2.size() &&
                   std::tie(p1[common].tet, p1[common].face, p1[common].enter) ==
                       std::tie(p2[common].tet, p2[common].face, p2[common].enter))
                ++common;
            CurveWalk w;
            for (std::size_t i = common; i < p1.size(); ++i) w.steps.push_back(p1[i]);
            w.steps.push_back(WalkStep{WalkStep::Cross, t, f, v, 0});
            for (std::size_t i = p2.size(); i > common; --i) {
                const WalkStep& st = p2[i - 1];
                auto gg = tri.sideGlue(st.tet, st.enter, st.face);
                w.steps.push_back(WalkStep{WalkStep::Cross, gg[0], gg[2], gg[1], 0});
            }
            cycles.push_back(std::move(w));
        }
    }
    return cycles;
}

} // namespace osc
