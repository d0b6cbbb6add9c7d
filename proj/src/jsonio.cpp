#include "jsonio.hpp"

#include <sstream>

namespace osc {

namespace {

ojson zvecJson(const ZVec& v) {
    ojson a = ojson::array();
    for (const auto& x : v) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(x.get_str());
    }
    return a;
}

ojson zmatJson(const ZMat& m) {
    ojson a = ojson::array();
    for (const auto& r : m) a.push_back(zvecJson(r));
    return a;
}

ojson walkJson(const CurveWalk& walk) {
    ojson steps = ojson::array();
    for (const WalkStep& s : walk.steps) {
        ojson o;
        if (s.kind == WalkStep::Cross) {
            o["step"] = "cross";
            o["tet"] = s.tet;
            o["triangle"] = s.enter;
            o["face"] = s.face;
        } else {
            o["step"] = "dive";
            o["tet"] = s.tet;
            o["face"] = s.face;
            o["edgeEnter"] = s.enter;
            o["edgeExit"] = s.exit;
        }
        steps.push_back(std::move(o));
    }
    return steps;
}

} // namespace

ojson rationalJson(const mpq_class& q) {
    ojson o;
    o["num"] = q.get_num().fits_slong_p() ? ojson(q.get_num().get_si()) : ojson(q.get_num().get_str());
    o["den"] = q.get_den().fits_slong_p() ? ojson(q.get_den().get_si()) : ojson(q.get_den().get_str());
    return o;
}

ojson infoJson(const Triangulation& tri) {
    ojson o;
    o["tetCount"] = tri.tetCount();
    o["edgeCount"] = tri.edgeClassCount();
    o["endCount"] = tri.endCount();
    o["connected"] = tri.connected();
    ojson edges = ojson::array();
    for (int e = 0; e < tri.edgeClassCount(); ++e) {
        const EdgeClass& ec = tri.edgeClass(e);
        ojson eo;
        eo["id"] = ec.id;
        eo["degree"] = ec.degree;
        eo["ends"] = {ec.endEnd[0], ec.endEnd[1]};
        edges.push_back(std::move(eo));
    }
    o["edges"] = std::move(edges);
    ojson ends = ojson::array();
    int g = 0;
    for (int e = 0; e < tri.endCount(); ++e) {
        const End& en = tri.end(e);
        ojson eo;
        eo["id"] = en.id;
        eo["triangles"] = static_cast<int>(en.triangles.size());
        eo["eulerChar"] = en.eulerChar;
        eo["genus"] = en.genus;
        g += en.genus;
        ends.push_back(std::move(eo));
    }
    o["ends"] = std::move(ends);
    o["totalGenus"] = g;
    o["eulerIdentityHolds"] = 2 * tri.tetCount() == 2 * tri.edgeClassCount() - 2 * tri.endCount() + 2 * g;
    return o;
}

ojson trackJson(const TrainTrack& tt) {
    ojson o;
    o["branchCount"] = tt.branchCount();
    o["vertexCount"] = tt.vertexCount();
    ojson branches = ojson::array();
    for (int b = 0; b < tt.branchCount(); ++b) {
        BranchRef r = tt.branch(b);
        ojson bo;
        bo["id"] = b;
        static const char* kinds[4] = {"corner", "exit", "central", "long"};
        bo["kind"] = kinds[static_cast<int>(r.kind)];
        bo["name"] = tt.branchName(b);
        branches.push_back(std::move(bo));
    }
    o["branches"] = std::move(branches);
    ojson vertices = ojson::array();
    for (int v = 0; v < tt.vertexCount(); ++v) {
        ojson vo;
        vo["id"] = v;
        static const char* kinds[4] = {"2-switch", "3-switch", "1-switch", "station"};
        vo["kind"] = kinds[static_cast<int>(tt.vertex(v).kind)];
        vo["name"] = tt.vertexName(v);
        ojson inc = ojson::array();
        for (int b : tt.incidentBranches(v)) {
            ojson io;
            io["branch"] = b;
            io["sign"] = tt.branchSign(v, b);
            inc.push_back(std::move(io));
        }
        vo["incident"] = std::move(inc);
        vertices.push_back(std::move(vo));
    }
    o["vertices"] = std::move(vertices);
    return o;
}

ojson basisJson(const TrainTrack& tt, const SymplecticBasis& basis) {
    ojson o;
    o["treeEdges"] = basis.ctx.treeEdges;
    o["e0"] = basis.ctx.e0;
    o["basisEdges"] = basis.ctx.basisEdges;
    ojson rows = ojson::array();
    for (const BasisRow& r : basis.rows) {
        ojson ro;
        ro["name"] = r.name();
        HolonomyVector h = holonomy(tt, r.weights);
        ro["incidence"] = zvecJson(h.inc);
        ro["nz"] = zvecJson(h.nz());
        ojson w = ojson::array();
        for (int b = 0; b < tt.branchCount(); ++b) {
            if (r.weights[b] == 0) continue;
            ojson wo;
            wo["branch"] = b;
            wo["name"] = tt.branchName(b);
            wo["weight"] = r.weights[b].fits_slong_p() ? ojson(r.weights[b].get_si()) : ojson(r.weights[b].get_str());
            w.push_back(std::move(wo));
        }
        ro["weights"] = std::move(w);
        if (r.walk) ro["walk"] = walkJson(*r.walk);
        else ro["walk"] = nullptr;
        rows.push_back(std::move(ro));
    }
    o["rows"] = std::move(rows);
    return o;
}

namespace {
ojson columnLabels(int n, bool nzView) {
    ojson cols = ojson::array();
    for (int i = 0; i < n; ++i) {
        if (nzView) {
            cols.push_back("a_" + std::to_string(i) + "-c_" + std::to_string(i));
            cols.push_back("b_" + std::to_string(i) + "-c_" + std::to_string(i));
        } else {
            cols.push_back("a_" + std::to_string(i));
            cols.push_back("b_" + std::to_string(i));
            cols.push_back("c_" + std::to_string(i));
        }
    }
    return cols;
}
} // namespace

ojson matrixJson(const SymplecticSystem& sys, bool nzOnly) {
    ojson o;
    o["rows"] = sys.rowNames;
    if (!nzOnly) {
        o["incidenceColumns"] = columnLabels(sys.tetCount, false);
        o["incidence"] = zmatJson(sys.incidence);
    }
    o["nzColumns"] = columnLabels(sys.tetCount, true);
    o["sy"] = zmatJson(sys.sy);
    o["cbar"] = zvecJson(sys.cbar);
    return o;
}

ojson nzJson(const TrainTrack& tt, const SymplecticBasis& basis) {
    ojson o;
    std::vector<std::string> names;
    ZMat inc, nz;
    ZVec cflat;
    for (int e = 0; e < tt.tri().edgeClassCount(); ++e) {
        HolonomyVector h = holonomy(tt, edgeCurve(tt, e));
        names.push_back("C_E" + std::to_string(e));
        inc.push_back(h.inc);
        nz.push_back(h.nz());
        mpz_class csum = 0;
        for (int i = 0; i < tt.tri().tetCount(); ++i) csum += h.inc[static_cast<std::size_t>(3 * i + 2)];
        cflat.push_back(2 - csum);
    }
    for (const BasisRow& r : basis.rows) {
        if (r.kind != BasisRow::M && r.kind != BasisRow::L) continue;
        HolonomyVector h = holonomy(tt, r.weights);
        names.push_back(r.name());
        inc.push_back(h.inc);
        nz.push_back(h.nz());
        mpz_class csum = 0;
        for (int i = 0; i < tt.tri().tetCount(); ++i) csum += h.inc[static_cast<std::size_t>(3 * i + 2)];
        cflat.push_back(-csum);
    }
    o["rows"] = names;
    o["incidenceColumns"] = columnLabels(tt.tri().tetCount(), false);
    o["incidence"] = zmatJson(inc);
    o["nzColumns"] = columnLabels(tt.tri().tetCount(), true);
    o["nz"] = zmatJson(nz);
    o["cflat"] = zvecJson(cflat);
    return o;
}

ojson solutionJson(const SymplecticSystem& sys, const ExactSolution& sol, const ResidualReport& rep) {
    ojson o;
    ojson z = ojson::array();
    for (std::size_t i = 0; i < sol.z.size(); ++i) z.push_back(rationalJson(sol.z[i]));
    o["z"] = std::move(z); // coefficients of i*pi, order Z_0, Z_0', Z_1, Z_1', ...
    ojson zf = ojson::array();
    for (const auto& q : sol.zfull) zf.push_back(rationalJson(q));
    o["zfull"] = std::move(zf); // Z, Z', Z'' per tetrahedron
    o["rowOrder"] = sys.rowNames;
    ojson edges = ojson::array();
    for (const auto& r : rep.edgeRows) {
        ojson eo;
        eo["row"] = r.name;
        eo["inBasis"] = r.inBasis;
        eo["residual"] = rationalJson(r.residual);
        edges.push_back(std::move(eo));
    }
    o["edgeRowResiduals"] = std::move(edges);
    ojson cusps = ojson::array();
    for (const auto& r : rep.cuspRows) {
        ojson co;
        co["row"] = r.name;
        co["residual"] = rationalJson(r.residual);
        cusps.push_back(std::move(co));
    }
    o["cuspRowResiduals"] = std::move(cusps);
    o["allBasisRowsZero"] = rep.allBasisRowsZero;
    return o;
}

ojson checksJson(const std::vector<CheckResult>& results, unsigned long seed, int samples) {
    ojson o;
    o["seed"] = seed;
    o["samples"] = samples;
    ojson items = ojson::array();
    for (const auto& r : results) {
        ojson io;
        io["name"] = r.name;
        io["pass"] = r.pass;
        if (!r.detail.empty()) io["detail"] = r.detail;
        items.push_back(std::move(io));
    }
    o["checks"] = std::move(items);
    o["allPassed"] = allPassed(results);
    return o;
}

std::string matrixCsv(const std::vector<std::string>& rowNames, const ZMat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << rowNames[i];
        for (const auto& x : m[i]) os << "," << x.get_str();
        os << "\n";
    }
    return os.str();
}

} // namespace osc
