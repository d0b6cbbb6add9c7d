#include <doctest.h>

#include "checks.hpp"
#include "test_util.hpp"

using namespace osc;

TEST_CASE("edge curves: oscillating vertex-link loops off the tubes") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    for (int e = 0; e < tri.edgeClassCount(); ++e) {
        WeightVector c = edgeCurve(tt, e);
        CHECK(tt.isOscillating(c));
        for (int b = 0; b < tt.branchCount(); ++b)
            if (tt.branch(b).kind == BranchRef::Long) CHECK(c[b] == 0);
        // holonomy counts the corner labels around the chosen end, one per
        // corner of the link (degree many in total)
        HolonomyVector h = holonomy(tt, c);
        mpz_class total = 0;
        for (const auto& x : h.inc) {
            CHECK(x >= 0);
            total += x;
        }
        CHECK(total == tri.edgeClass(e).degree);
    }
}

TEST_CASE("realize_walk of the edge-curve loop equals edge_curve") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    auto [walk, vid] = edgeCurveWalk(tri, 1);
    (void)vid;
    WeightVector direct = realizeWalk(tt, walk);
    WeightVector viaOp = edgeCurve(tt, 1);
    CHECK(direct.w == viaOp.w);
}

TEST_CASE("reversed walks realize to negated weights") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    auto [walk, vid] = edgeCurveWalk(tri, 0);
    (void)vid;
    CurveWalk rev;
    for (auto it = walk.steps.rbegin(); it != walk.steps.rend(); ++it) {
        REQUIRE(it->kind == WalkStep::Cross);
        auto g = tri.sideGlue(it->tet, it->enter, it->face);
        rev.steps.push_back(WalkStep{WalkStep::Cross, g[0], g[2], g[1], 0});
    }
    WeightVector z = realizeWalk(tt, walk);
    WeightVector zr = realizeWalk(tt, rev);
    CHECK(zr.w == z.negated().w);
}

TEST_CASE("invalid walks are rejected") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    // a single cross cannot close up unless the side glues back to itself
    CurveWalk bad;
    bad.steps.push_back(WalkStep{WalkStep::Cross, 0, 1, 0, 0});
    CHECK_THROWS_AS(realizeWalk(tt, bad), InputError);
    // one dive leaves the orientation flag flipped
    auto ctx = buildDualContext(tri);
    auto [t, f, i, j] = ctx.rect[0];
    CurveWalk odd;
    odd.steps.push_back(WalkStep{WalkStep::Dive, t, f, i, j});
    CHECK_THROWS_AS(realizeWalk(tt, odd), InputError);
}

TEST_CASE("figure-eight dual context matches the stated choices") {
    Triangulation tri = loadTri("fig8.tri");
    auto ctx = buildDualContext(tri);
    CHECK(ctx.treeEdges.empty());
    CHECK(ctx.e0 == 0);
    CHECK(ctx.basisEdges == std::vector<int>{1});
}

TEST_CASE("boundary basis: symplectic pair on the torus, empty on spheres") {
    Triangulation fig8 = loadTri("fig8.tri");
    TrainTrack tt(fig8);
    auto pairs = boundaryBasis(tt, 0);
    REQUIRE(pairs.size() == 1);
    CHECK(pairing(tt, pairs[0].first, pairs[0].second) == 2);
    for (int e = 0; e < fig8.edgeClassCount(); ++e) {
        WeightVector c = edgeCurve(tt, e);
        CHECK(pairing(tt, pairs[0].first, c) == 0);
        CHECK(pairing(tt, pairs[0].second, c) == 0);
    }
    // no tube branches
    for (int b = 0; b < tt.branchCount(); ++b)
        if (tt.branch(b).kind == BranchRef::Long) {
            CHECK(pairs[0].first[b] == 0);
            CHECK(pairs[0].second[b] == 0);
        }

    Triangulation onetet = loadTri("onetet.tri");
    TrainTrack tt1(onetet);
    CHECK(boundaryBasis(tt1, 0).empty());
    CHECK(boundaryBasis(tt1, 1).empty());
}

TEST_CASE("dual curve: even dives through the chosen rectangles") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    auto ctx = buildDualContext(tri);
    RoutingObstacles obstacles;
    CurveWalk gw = routeDualCurve(tri, ctx, 1, obstacles);
    int dives = 0;
    for (const auto& st : gw.steps)
        if (st.kind == WalkStep::Dive) ++dives;
    CHECK(dives == 2); // through E1 and through E0
    WeightVector g = realizeWalk(tt, gw);
    CHECK(tt.isOscillating(g));
    WeightVector c1 = edgeCurve(tt, 1);
    CHECK(abs(pairing(tt, g, c1)) == 2);
}

TEST_CASE("buildBasis: normalized Gram is exactly 2J") {
    for (const char* name : {"fig8.tri", "onetet.tri"}) {
        Triangulation tri = loadTri(name);
        TrainTrack tt(tri);
        SymplecticBasis basis = buildBasis(tt);
        CHECK(static_cast<int>(basis.rows.size()) == 2 * tri.tetCount());
        ZMat G = pairingGram(tt, basis.rows);
        ZMat J2 = standardJ(static_cast<int>(basis.rows.size()) / 2);
        for (auto& r : J2)
            for (auto& x : r) x *= 2;
        CHECK(G == J2);
        for (const auto& r : basis.rows) CHECK(tt.isOscillating(r.weights));
    }
}

TEST_CASE("normalizeBasis is idempotent") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    SymplecticBasis basis = buildBasis(tt);
    std::vector<BasisRow> again = basis.rows;
    normalizeBasis(tt, again);
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].weights.w == basis.rows[i].weights.w);
}

TEST_CASE("row order and naming") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    SymplecticBasis basis = buildBasis(tt);
    REQUIRE(basis.rows.size() == 4);
    CHECK(basis.rows[0].name() == "m_0");
    CHECK(basis.rows[1].name() == "l_0");
    CHECK(basis.rows[2].name() == "Gamma_E1");
    CHECK(basis.rows[3].name() == "C_E1");
    CHECK(basis.rows[2].walk.has_value());
    CHECK(basis.rows[3].walk.has_value());
    CHECK_FALSE(basis.rows[0].walk.has_value());
}

TEST_CASE("basis works on random triangulations") {
    GluingGen gen(23);
    for (int trial = 0; trial < 3; ++trial) {
        Triangulation tri = gen.next(3);
        TrainTrack tt(tri);
        SymplecticBasis basis = buildBasis(tt);
        CHECK(static_cast<int>(basis.rows.size()) == 2 * tri.tetCount());
        ZMat G = pairingGram(tt, basis.rows);
        ZMat J2 = standardJ(static_cast<int>(basis.rows.size()) / 2);
        for (auto& r : J2)
            for (auto& x : r) x *= 2;
        CHECK(G == J2);
    }
}

TEST_CASE("omega of holonomies reproduces the pairing Gram on the basis") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    SymplecticBasis basis = buildBasis(tt);
    for (const auto& a : basis.rows)
        for (const auto& b : basis.rows)
            CHECK(omega(holonomy(tt, a.weights), holonomy(tt, b.weights)) ==
                  pairing(tt, a.weights, b.weights));
}
