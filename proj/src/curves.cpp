#include "curves.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace osc {

DualCurveContext buildDualContext(const Triangulation& tri) {
    if (!tri.connected()) throw InputError("basis construction needs a connected triangulation");
    const int nc = tri.endCount();
    const int ne = tri.edgeClassCount();
    DualCurveContext ctx;
    ctx.endColor.assign(static_cast<std::size_t>(nc), -1);
    ctx.endParent.assign(static_cast<std::size_t>(nc), {-1, -1});
    // adjacency lists with edges in id order
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nc));
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = tri.edgeClass(e).endEnd;
        adj[static_cast<std::size_t>(a)].emplace_back(e, b);
        if (b != a) adj[static_cast<std::size_t>(b)].emplace_back(e, a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<int> order{0};
    ctx.endColor[0] = 0;
    std::set<int> treeSet;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int cur = order[qi];
        for (auto [e, other] : adj[static_cast<std::size_t>(cur)]) {
            if (ctx.endColor[static_cast<std::size_t>(other)] >= 0) continue;
            ctx.endColor[static_cast<std::size_t>(other)] = 1 - ctx.endColor[static_cast<std::size_t>(cur)];
            ctx.endParent[static_cast<std::size_t>(other)] = {e, cur};
            treeSet.insert(e);
            order.push_back(other);
        }
    }
    if (static_cast<int>(order.size()) != nc) throw InputError("end graph is disconnected");
    ctx.treeEdges.assign(treeSet.begin(), treeSet.end());
    for (int e = 0; e < ne; ++e) {
        if (treeSet.count(e)) continue;
        auto [a, b] = tri.edgeClass(e).endEnd;
        if (ctx.endColor[static_cast<std::size_t>(a)] == ctx.endColor[static_cast<std::size_t>(b)]) {
            ctx.e0 = e;
            break;
        }
    }
    if (ctx.e0 < 0) throw InternalError("no edge joins same-coloured ends");
    for (int e = 0; e < ne; ++e)
        if (!treeSet.count(e) && e != ctx.e0) ctx.basisEdges.push_back(e);
    // chosen long rectangle per edge: lowest (t,f,i,j)
    ctx.rect.assign(static_cast<std::size_t>(ne), {-1, -1, -1, -1});
    for (int e = 0; e < ne; ++e) {
        std::array<int, 4> best{-1, -1, -1, -1};
        for (auto [t, pairIdx] : tri.edgeClass(e).slots) {
            auto [i, j] = edgePairVerts(pairIdx);
            for (int f = 0; f < 4; ++f) {
                if (f == i || f == j) continue;
                std::array<int, 4> cand{t, f, i, j};
                if (best[0] < 0 || cand < best) best = cand;
            }
        }
        ctx.rect[static_cast<std::size_t>(e)] = best;
    }
    return ctx;
}

void RoutingObstacles::addWalk(const Triangulation& tri, const CurveWalk& walk) {
    WalkState cur = stateAfter(tri, walk.steps.back());
    for (const WalkStep& st : walk.steps) {
        WalkState need = stateBefore(st);
        for (int w = 0; w < 4; ++w)
            if (w != cur.vertex && w != cur.face && w != need.face)
                corner[{cur.tet, cur.vertex, w}] += 1;
        if (st.kind == WalkStep::Dive) {
            // stubs curling into the dived corner at both ends
            corner[{st.tet, st.enter, st.exit}] += 1;
            corner[{st.tet, st.exit, st.enter}] += 1;
        }
        cur = stateAfter(tri, st);
    }
}

void RoutingObstacles::addWeights(const TrainTrack& tt, const WeightVector& z) {
    for (int b = 0; b < tt.branchCount(); ++b) {
        if (z[b] == 0) continue;
        BranchRef r = tt.branch(b);
        if (r.kind != BranchRef::Corner) continue;
        mpz_class a = abs(z[b]);
        corner[{r.tet, r.a, r.b}] += a.fits_slong_p() ? a.get_si() : 1000000;
    }
}

namespace {

// Enter the tube of edge `e` from the given boundary component; for an edge
// with both ends there, the rectangle's lower slot goes first.
WalkStep diveStep(const Triangulation& tri, const DualCurveContext& ctx, int e, int fromEnd) {
    auto [t, f, i, j] = ctx.rect[static_cast<std::size_t>(e)];
    int vi = tri.cornerVertex(Corner{t, i, j});
    int vj = tri.cornerVertex(Corner{t, j, i});
    if (tri.vertexEnd(vi) == fromEnd) return WalkStep{WalkStep::Dive, t, f, i, j};
    if (tri.vertexEnd(vj) == fromEnd) return WalkStep{WalkStep::Dive, t, f, j, i};
    throw InternalError("dive does not start on the requested boundary component");
}

std::vector<WalkStep> routeArc(const Triangulation& tri, WalkState start, WalkState goalExit,
                               const RoutingObstacles& obstacles) {
    // Dijkstra over (triangle, entry side) states; cost 1 + obstacle strands
    // per corner pass; deterministic tie-breaking by state encoding.
    auto enc = [](const WalkState& s) { return (s.tet * 4 + s.vertex) * 4 + s.face; };
    auto cornerCost = [&](int t, int v, int w) {
        auto it = obstacles.corner.find({t, v, w});
        return 1 + (it == obstacles.corner.end() ? 0 : it->second);
    };
    std::map<int, long> dist;
    std::map<int, std::pair<int, WalkStep>> prev; // state -> (prev state enc, step taken)
    using QItem = std::pair<long, int>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
    dist[enc(start)] = 0;
    pq.push({0, enc(start)});
    std::set<int> done;
    int finalState = -1;
    while (!pq.empty()) {
        auto [d, se] = pq.top();
        pq.pop();
        if (done.count(se)) continue;
        done.insert(se);
        WalkState s{se / 16, (se / 4) % 4, se % 4};
        if (s.tet == goalExit.tet && s.vertex == goalExit.vertex && s.face != goalExit.face) {
            finalState = se;
            break;
        }
        for (int fout = 0; fout < 4; ++fout) {
            if (fout == s.vertex || fout == s.face) continue;
            int u = -1;
            for (int w = 0; w < 4; ++w)
                if (w != s.vertex && w != s.face && w != fout) u = w;
            long nd = d + cornerCost(s.tet, s.vertex, u);
            WalkStep step{WalkStep::Cross, s.tet, fout, s.vertex, 0};
            WalkState ns = stateAfter(tri, step);
            int ne = enc(ns);
            auto it = dist.find(ne);
            if (it == dist.end() || nd < it->second) {
                dist[ne] = nd;
                prev[ne] = {se, step};
                pq.push({nd, ne});
            }
        }
    }
    if (finalState < 0) throw InternalError("routing failed: cut surface disconnected");
    std::vector<WalkStep> steps;
    int cur = finalState;
    while (prev.count(cur)) {
        steps.push_back(prev[cur].second);
        cur = prev[cur].first;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

} // namespace

CurveWalk routeDualCurve(const Triangulation& tri, const DualCurveContext& ctx, int edgeId,
                         const RoutingObstacles& obstacles) {
    // even cycle of edges through the end graph: edgeId, tree path, possibly e0
    struct Leg {
        int edge;
        int fromEnd;
    };
    auto treePath = [&](int a, int b) {
        // path a -> b through the spanning tree as (edge, fromEnd) legs
        std::vector<int> pa{a}, pb{b};
        auto up = [&](std::vector<int>& p) {
            while (ctx.endParent[static_cast<std::size_t>(p.back())].first >= 0)
                p.push_back(ctx.endParent[static_cast<std::size_t>(p.back())].second);
        };
        up(pa);
        up(pb);
        int common = 0;
        while (common < static_cast<int>(std::min(pa.size(), pb.size())) &&
               pa[pa.size() - 1 - static_cast<std::size_t>(common)] == pb[pb.size() - 1 - static_cast<std::size_t>(common)])
            ++common;
        std::vector<Leg> legs;
        for (std::size_t i = 0; i + static_cast<std::size_t>(common) < pa.size(); ++i)
            legs.push_back(Leg{ctx.endParent[static_cast<std::size_t>(pa[i])].first, pa[i]});
        std::vector<Leg> downs;
        for (std::size_t i = 0; i + static_cast<std::size_t>(common) < pb.size(); ++i)
            downs.push_back(Leg{ctx.endParent[static_cast<std::size_t>(pb[i])].first,
                                ctx.endParent[static_cast<std::size_t>(pb[i])].second});
        std::reverse(downs.begin(), downs.end());
        legs.insert(legs.end(), downs.begin(), downs.end());
        return legs;
    };
    auto [u0, v0] = tri.edgeClass(edgeId).endEnd;
    std::vector<Leg> cycle{Leg{edgeId, u0}};
    if (ctx.endColor[static_cast<std::size_t>(u0)] != ctx.endColor[static_cast<std::size_t>(v0)]) {
        auto legs = treePath(v0, u0);
        cycle.insert(cycle.end(), legs.begin(), legs.end());
    } else {
        auto [a0, b0] = tri.edgeClass(ctx.e0).endEnd;
        auto legs1 = treePath(v0, a0);
        cycle.insert(cycle.end(), legs1.begin(), legs1.end());
        cycle.push_back(Leg{ctx.e0, a0});
        auto legs2 = treePath(b0, u0);
        cycle.insert(cycle.end(), legs2.begin(), legs2.end());
    }
    if (cycle.size() % 2 != 0) throw InternalError("dive cycle has odd length");
    // dives, then connecting arcs
    std::vector<WalkStep> dives;
    for (const Leg& leg : cycle) dives.push_back(diveStep(tri, ctx, leg.edge, leg.fromEnd));
    CurveWalk walk;
    for (std::size_t i = 0; i < dives.size(); ++i) {
        walk.steps.push_back(dives[i]);
        WalkState cur = stateAfter(tri, dives[i]);
        const WalkStep& next = dives[(i + 1) % dives.size()];
        WalkState goal = stateBefore(next);
        auto arc = routeArc(tri, cur, goal, obstacles);
        walk.steps.insert(walk.steps.end(), arc.begin(), arc.end());
    }
    return walk;
}

WeightVector edgeCurve(const TrainTrack& tt, int edgeId) {
    auto [walk, vid] = edgeCurveWalk(tt.tri(), edgeId);
    (void)vid;
    return realizeWalk(tt, walk);
}

namespace {

struct NormKey {
    mpz_class l1nz;
    mpz_class l1inc;
    ZVec inc;
    bool operator<(const NormKey& o) const {
        if (l1nz != o.l1nz) return l1nz < o.l1nz;
        if (l1inc != o.l1inc) return l1inc < o.l1inc;
        return inc < o.inc;
    }
};

NormKey normKey(const TrainTrack& tt, const WeightVector& z) {
    HolonomyVector h = holonomy(tt, z);
    NormKey k;
    for (const auto& x : h.nz()) k.l1nz += abs(x);
    for (const auto& x : h.inc) k.l1inc += abs(x);
    k.inc = h.inc;
    return k;
}

// Exact minimum of the norm key over integer radical shifts (edge curves) in
// a bounded coefficient box; deterministic tie-breaking through the key.
WeightVector minimizeInClass(const TrainTrack& tt, const WeightVector& z,
                             const std::vector<WeightVector>& radical) {
    const int g = static_cast<int>(radical.size());
    const int B = g <= 6 ? 3 : 1;
    std::vector<int> coeff(static_cast<std::size_t>(g), -B);
    WeightVector best = z;
    NormKey bestKey = normKey(tt, z);
    for (;;) {
        WeightVector cand = z;
        for (int i = 0; i < g; ++i) cand.addMul(radical[static_cast<std::size_t>(i)], coeff[static_cast<std::size_t>(i)]);
        NormKey k = normKey(tt, cand);
        if (k < bestKey) {
            bestKey = k;
            best = cand;
        }
        int i = 0;
        while (i < g && coeff[static_cast<std::size_t>(i)] == B) coeff[static_cast<std::size_t>(i++)] = -B;
        if (i == g) break;
        ++coeff[static_cast<std::size_t>(i)];
    }
    return best;
}

WeightVector signCanon(const TrainTrack& tt, const WeightVector& z) {
    HolonomyVector h = holonomy(tt, z);
    for (const auto& x : h.inc) {
        if (x != 0) return x < 0 ? z.negated() : z;
    }
    return z;
}

// Integer symplectic reduction of the pairing Gram of the given vectors.
// Returns hyperbolic pairs with pairing +2 (unimodular intersection times 2);
// the radical is discarded.
std::vector<std::pair<WeightVector, WeightVector>> symplecticReduce(const TrainTrack& tt,
                                                                    std::vector<WeightVector> vecs) {
    std::vector<int> active(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) active[i] = static_cast<int>(i);
    auto G = [&](int i, int j) { return pairing(tt, vecs[static_cast<std::size_t>(i)], vecs[static_cast<std::size_t>(j)]); };
    std::vector<std::pair<WeightVector, WeightVector>> pairs;
    for (;;) {
        int bi = -1, bj = -1;
        mpz_class bg = 0;
        for (std::size_t a = 0; a < active.size(); ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                mpz_class g = G(active[a], active[b]);
                if (g == 0) continue;
                if (bi < 0 || mpz_cmpabs(g.get_mpz_t(), bg.get_mpz_t()) < 0) {
                    bi = active[a];
                    bj = active[b];
                    bg = g;
                }
            }
        if (bi < 0) break;
        if (bg < 0) {
            std::swap(bi, bj);
            bg = -bg;
        }
        // gcd-safe clearing
        bool restart = false;
        for (int k : active) {
            if (k == bi || k == bj) continue;
            mpz_class gik = G(bi, k);
            if (gik % bg != 0) {
                mpz_class q = gik / bg;
                vecs[static_cast<std::size_t>(k)].addMul(vecs[static_cast<std::size_t>(bj)], -q);
                restart = true;
                break;
            }
            mpz_class gjk = G(bj, k);
            if (gjk % bg != 0) {
                mpz_class q = gjk / bg;
                vecs[static_cast<std::size_t>(k)].addMul(vecs[static_cast<std::size_t>(bi)], q);
                restart = true;
                break;
            }
        }
        if (restart) continue;
        for (int k : active) {
            if (k == bi || k == bj) continue;
            mpz_class r = -G(bi, k) / bg;
            mpz_class s = G(bj, k) / bg;
            if (r != 0) vecs[static_cast<std::size_t>(k)].addMul(vecs[static_cast<std::size_t>(bj)], r);
            if (s != 0) vecs[static_cast<std::size_t>(k)].addMul(vecs[static_cast<std::size_t>(bi)], s);
        }
        for (int k : active)
            if (k != bi && k != bj && (G(bi, k) != 0 || G(bj, k) != 0))
                throw InternalError("symplectic reduction failed to clear a row");
        if (bg != 2)
            throw InternalError("boundary pairing block is not unimodular (pivot " + bg.get_str() + ")");
        pairs.emplace_back(vecs[static_cast<std::size_t>(bi)], vecs[static_cast<std::size_t>(bj)]);
        std::vector<int> rest;
        for (int k : active)
            if (k != bi && k != bj) rest.push_back(k);
        active = rest;
    }
    return pairs;
}

} // namespace

std::vector<std::pair<WeightVector, WeightVector>> boundaryBasis(const TrainTrack& tt, int endId) {
    const Triangulation& tri = tt.tri();
    std::vector<CurveWalk> cycles = boundaryCycleWalks(tri, endId);
    std::vector<WeightVector> vecs;
    vecs.reserve(cycles.size());
    for (const auto& w : cycles) vecs.push_back(realizeWalk(tt, w));
    auto pairs = symplecticReduce(tt, std::move(vecs));
    if (static_cast<int>(pairs.size()) != tri.end(endId).genus)
        throw InternalError("boundary basis rank does not match genus");
    std::vector<WeightVector> radical;
    for (int e = 0; e < tri.edgeClassCount(); ++e) radical.push_back(edgeCurve(tt, e));
    for (auto& [u, v] : pairs) {
        u = signCanon(tt, minimizeInClass(tt, u, radical));
        v = signCanon(tt, minimizeInClass(tt, v, radical));
        if (pairing(tt, u, v) != 2) v = v.negated();
        if (pairing(tt, u, v) != 2) throw InternalError("pair sign normalization failed");
    }
    return pairs;
}

std::string BasisRow::name() const {
    std::ostringstream os;
    switch (kind) {
    case M: os << "m_" << index; break;
    case L: os << "l_" << index; break;
    case Gamma: os << "Gamma_E" << index; break;
    case C: os << "C_E" << index; break;
    }
    return os.str();
}

SymplecticBasis buildBasis(const TrainTrack& tt) {
    const Triangulation& tri = tt.tri();
    SymplecticBasis out;
    out.ctx = buildDualContext(tri);
    RoutingObstacles obstacles;
    int pairIndex = 0;
    for (int e = 0; e < tri.endCount(); ++e) {
        for (auto& [u, v] : boundaryBasis(tt, e)) {
            obstacles.addWeights(tt, u);
            obstacles.addWeights(tt, v);
            out.rows.push_back(BasisRow{BasisRow::M, pairIndex, u, std::nullopt});
            out.rows.push_back(BasisRow{BasisRow::L, pairIndex, v, std::nullopt});
            ++pairIndex;
        }
    }
    std::vector<BasisRow> tail;
    for (int e : out.ctx.basisEdges) {
        CurveWalk gw = routeDualCurve(tri, out.ctx, e, obstacles);
        obstacles.addWalk(tri, gw);
        WeightVector gv = realizeWalk(tt, gw);
        auto [cw, vid] = edgeCurveWalk(tri, e);
        (void)vid;
        WeightVector cv = realizeWalk(tt, cw);
        tail.push_back(BasisRow{BasisRow::Gamma, e, gv, gw});
        tail.push_back(BasisRow{BasisRow::C, e, cv, cw});
    }
    out.rows.insert(out.rows.end(), tail.begin(), tail.end());
    normalizeBasis(tt, out.rows);
    return out;
}

void normalizeBasis(const TrainTrack& tt, std::vector<BasisRow>& rows) {
    auto P = [&](const BasisRow& a, const BasisRow& b) { return pairing(tt, a.weights, b.weights); };
    std::vector<int> ms, ls, gs, cs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        switch (rows[i].kind) {
        case BasisRow::M: ms.push_back(static_cast<int>(i)); break;
        case BasisRow::L: ls.push_back(static_cast<int>(i)); break;
        case BasisRow::Gamma: gs.push_back(static_cast<int>(i)); break;
        case BasisRow::C: cs.push_back(static_cast<int>(i)); break;
        }
    }
    // boundary pairs already pair to +2; orient the (Gamma, C) pairs
    for (std::size_t k = 0; k < gs.size(); ++k) {
        mpz_class p = P(rows[static_cast<std::size_t>(gs[k])], rows[static_cast<std::size_t>(cs[k])]);
        if (p == -2) rows[static_cast<std::size_t>(gs[k])].weights = rows[static_cast<std::size_t>(gs[k])].weights.negated();
        else if (p != 2)
            throw InternalError("Gamma.C pairing has magnitude " + p.get_str() + ", expected 2");
    }
    // clear Gamma against the boundary rows using the pair partners
    for (int g : gs) {
        for (std::size_t k = 0; k < ms.size(); ++k) {
            BasisRow& G = rows[static_cast<std::size_t>(g)];
            mpz_class a = P(G, rows[static_cast<std::size_t>(ms[k])]);
            if (a % 2 != 0) throw InternalError("odd Gamma/m pairing");
            if (a != 0) G.weights.addMul(rows[static_cast<std::size_t>(ls[k])].weights, a / 2);
            mpz_class b = P(G, rows[static_cast<std::size_t>(ls[k])]);
            if (b % 2 != 0) throw InternalError("odd Gamma/l pairing");
            if (b != 0) G.weights.addMul(rows[static_cast<std::size_t>(ms[k])].weights, -b / 2);
        }
    }
    // clear Gamma against earlier Gammas using the dual C rows
    for (std::size_t a = 0; a < gs.size(); ++a) {
        for (std::size_t b = a + 1; b < gs.size(); ++b) {
            mpz_class p = P(rows[static_cast<std::size_t>(gs[a])], rows[static_cast<std::size_t>(gs[b])]);
            if (p % 2 != 0) throw InternalError("odd Gamma/Gamma pairing");
            if (p != 0)
                rows[static_cast<std::size_t>(gs[b])].weights.addMul(rows[static_cast<std::size_t>(cs[a])].weights, -p / 2);
        }
    }
    // verify the exact Gram
    ZMat G = pairingGram(tt, rows);
    ZMat J2 = standardJ(static_cast<int>(rows.size()) / 2);
    for (auto& r : J2)
        for (auto& x : r) x *= 2;
    if (G != J2) throw InternalError("normalization failed to reach Gram = 2J");
}

ZMat pairingGram(const TrainTrack& tt, const std::vector<BasisRow>& rows) {
    ZMat G(rows.size(), ZVec(rows.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            G[i][j] = pairing(tt, rows[i].weights, rows[j].weights);
    return G;
}

ZMat standardJ(int halfPairs) {
    int n2 = 2 * halfPairs;
    ZMat J(static_cast<std::size_t>(n2), ZVec(static_cast<std::size_t>(n2), 0));
    for (int i = 0; i < n2; i += 2) {
        J[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
        J[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
    return J;
}

} // namespace osc
