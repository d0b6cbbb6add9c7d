#include <doctest.h>

#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "test_util.hpp"

using namespace osc;

TEST_CASE("epsilon table") {
    CHECK(epsilon(Letter::A, Letter::B) == 1);
    CHECK(epsilon(Letter::B, Letter::C) == 1);
    CHECK(epsilon(Letter::C, Letter::A) == 1);
    CHECK(epsilon(Side::AB, Side::BC) == 1);
    CHECK(epsilon(Side::BC, Side::CA) == 1);
    CHECK(epsilon(Side::CA, Side::AB) == 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(epsilon(static_cast<Letter>(i), static_cast<Letter>(j)) ==
                  -epsilon(static_cast<Letter>(j), static_cast<Letter>(i)));
            CHECK(epsilon(static_cast<Side>(i), static_cast<Side>(j)) ==
                  -epsilon(static_cast<Side>(j), static_cast<Side>(i)));
        }
    CHECK(epsilon(Letter::A, Letter::A) == 0);
}

TEST_CASE("local pairing in a triangle") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    // find corner branches with letters a, b inside triangle (0,0) and the
    // switch on their shared side ab
    int t = 0, v = 0;
    int wa = -1, wb = -1, wc = -1;
    for (int w = 0; w < 4; ++w) {
        if (w == v) continue;
        if (tri.edgeLabel(t, v, w) == Letter::A) wa = w;
        if (tri.edgeLabel(t, v, w) == Letter::B) wb = w;
        if (tri.edgeLabel(t, v, w) == Letter::C) wc = w;
    }
    int fab = tri.sideFace(t, v, Side::AB);
    int sw = tt.twoSwitchId(t, v, fab);
    int ba = tt.cornerBranch(t, v, wa);
    int bb = tt.cornerBranch(t, v, wb);
    CHECK(localPairing(tt, sw, ba, bb) == 1);
    CHECK(localPairing(tt, sw, bb, ba) == -1);
    CHECK(localPairing(tt, sw, ba, ba) == 0);
    // the exit branch pairs to zero with both corners
    int be = tt.exitBranch(t, v, fab);
    CHECK(localPairing(tt, sw, ba, be) == 0);
    CHECK(localPairing(tt, sw, be, bb) == 0);
    // corner c is not incident to the ab switch
    CHECK_THROWS_AS(localPairing(tt, sw, tt.cornerBranch(t, v, wc), ba), InputError);
}

TEST_CASE("local pairing at a 3-switch") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    int t = 0, f = 1;
    for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        Side k = tri.sideLabel(t, v, f);
        int sw = tt.threeSwitchId(t, f, v);
        int bc = tt.centralBranch(t, f, v);
        for (int u = 0; u < 4; ++u) {
            if (u == f || u == v) continue;
            Side l = tri.sideLabel(t, u, f);
            CHECK(localPairing(tt, sw, bc, tt.longBranch(t, f, v, u)) == epsilon(k, l));
        }
        int us[2], c = 0;
        for (int u = 0; u < 4; ++u)
            if (u != f && u != v) us[c++] = u;
        Side l0 = tri.sideLabel(t, us[0], f), l1 = tri.sideLabel(t, us[1], f);
        CHECK(localPairing(tt, sw, tt.longBranch(t, f, v, us[0]), tt.longBranch(t, f, v, us[1])) ==
              -epsilon(l0, l1));
        // the unique branch on the other side pairs to zero
        CHECK(localPairing(tt, sw, tt.exitBranch(t, v, f), bc) == 0);
    }
}

TEST_CASE("local pairing at stations: same side +-1, cross side 0") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    for (int vid = 0; vid < tt.vertexCount(); ++vid) {
        const TrackVertexRef& r = tt.vertex(vid);
        if (r.kind != TrackVertexRef::Station) continue;
        auto [t, f, i, j] = r.slotA;
        auto [t2, f2, i2, j2] = r.slotB;
        int a1 = tt.longBranch(t, f, i, j), a2 = tt.longBranch(t, f, j, i);
        int b1 = tt.longBranch(t2, f2, i2, j2), b2 = tt.longBranch(t2, f2, j2, i2);
        mpz_class pa = localPairing(tt, vid, a1, a2);
        mpz_class pb = localPairing(tt, vid, b1, b2);
        CHECK(abs(pa) == 1);
        CHECK(abs(pb) == 1);
        // the two sides are glued orientation-reversingly, so signs differ
        CHECK(pa == -pb);
        CHECK(localPairing(tt, vid, a1, b1) == 0);
        CHECK(localPairing(tt, vid, a1, b2) == 0);
        CHECK(localPairing(tt, vid, a2, b1) == 0);
        // antisymmetry
        CHECK(localPairing(tt, vid, a2, a1) == -pa);
    }
}

TEST_CASE("pairing requires oscillating arguments") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    WeightVector bad = tt.zero();
    bad[tt.cornerBranch(0, 0, 1)] = 1;
    CHECK_THROWS_AS(pairing(tt, bad, tt.zero()), InputError);
    CHECK_THROWS_AS(pairingFacewise(tt, tt.zero(), bad), InputError);
}

TEST_CASE("pairing: antisymmetry, bilinearity, oracle agreement") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    KernelSampler sampler(tt, 11);
    for (int s = 0; s < 6; ++s) {
        WeightVector x = sampler.next(3);
        WeightVector y = sampler.next(3);
        WeightVector z = sampler.next(3);
        CHECK(pairing(tt, x, x) == 0);
        CHECK(pairing(tt, x, y) == -pairing(tt, y, x));
        WeightVector yz = y;
        yz.addMul(z, 2);
        CHECK(pairing(tt, x, yz) == pairing(tt, x, y) + 2 * pairing(tt, x, z));
        CHECK(pairing(tt, x, y) == pairingFacewise(tt, x, y));
        CHECK(pairing(tt, x, y) == omega(holonomy(tt, x), holonomy(tt, y)));
    }
}

TEST_CASE("holonomy is linear and ignores rectangle branches") {
    Triangulation tri = loadTri("fig8.tri");
    TrainTrack tt(tri);
    KernelSampler sampler(tt, 3);
    WeightVector x = sampler.next(3);
    WeightVector y = sampler.next(3);
    HolonomyVector hx = holonomy(tt, x);
    WeightVector sum = x;
    sum.addMul(y, 3);
    HolonomyVector expect = hx;
    expect.addMul(holonomy(tt, y), 3);
    CHECK(holonomy(tt, sum) == expect);
    // zeroing all non-corner weights leaves the holonomy unchanged
    WeightVector cornersOnly = tt.zero();
    for (int b = 0; b < tt.branchCount(); ++b)
        if (tt.branch(b).kind == BranchRef::Corner) cornersOnly[b] = x[b];
    CHECK(holonomy(tt, cornersOnly) == hx);
}

TEST_CASE("omega basics") {
    ZVec u{1, 0, 0, -1}, v{2, 2, 0, 2};
    CHECK(omegaNZ(u, u) == 0);
    CHECK(omegaNZ(u, v) == -omegaNZ(v, u));
    CHECK_THROWS_AS(omegaNZ(ZVec{1, 2}, ZVec{1, 2, 3, 4}), InputError);
}

TEST_CASE("whitehead reference data: NZ reduction and omega values") {
    auto j = nlohmann::json::parse(slurpData("whitehead.json"));
    auto rowOrder = j.at("rowOrder").get<std::vector<std::string>>();
    auto mat = j.at("matrix").get<std::vector<std::vector<long>>>();
    std::map<std::string, ZVec> nzRows;
    for (std::size_t r = 0; r < rowOrder.size(); ++r) {
        ZVec v;
        for (long x : mat[r]) v.push_back(x);
        nzRows[rowOrder[r]] = v;
    }
    // incidence vectors reduce to the reference NZ rows
    for (auto& [name, incj] : j.at("incidence").items()) {
        auto inc = incj.get<std::vector<long>>();
        HolonomyVector h(5);
        for (std::size_t i = 0; i < inc.size(); ++i) h.inc[i] = inc[i];
        CHECK(h.nz() == nzRows.at(name));
    }
    // the symplectic pairings of the reference matrix
    CHECK(omegaNZ(nzRows["m0"], nzRows["l0"]) == 2);
    CHECK(omegaNZ(nzRows["m1"], nzRows["l1"]) == 2);
    CHECK(omegaNZ(nzRows["G_inf"], nzRows["C_inf"]) == 2);
    CHECK(omegaNZ(nzRows["G_21"], nzRows["C_21"]) == 2);
    CHECK(omegaNZ(nzRows["G_31"], nzRows["C_31"]) == 2);
    CHECK(omegaNZ(nzRows["G_inf"], nzRows["C_21"]) == 0);
    CHECK(omegaNZ(nzRows["G_inf"], nzRows["C_31"]) == 0);
    CHECK(omegaNZ(nzRows["G_inf"], nzRows["G_21"]) == 0);
}
