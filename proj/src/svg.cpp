#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace osc {

namespace {

struct Pt {
    double x = 0, y = 0;
};
Pt mid(Pt a, Pt b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
Pt lerp(Pt a, Pt b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

// corners of a placed triangle, keyed by the 'other' vertex of the corner
struct PlacedTri {
    std::map<int, Pt> corner;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

const char* palette(int i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return colors[i % 8];
}

} // namespace

std::string renderEndSvg(const TrainTrack& tt, const SymplecticBasis& basis, int endId) {
    const Triangulation& tri = tt.tri();
    const End& end = tri.end(endId);
    std::vector<int> tris = end.triangles;
    std::sort(tris.begin(), tris.end());

    // unfold along a breadth-first spanning tree of the dual graph
    std::map<int, PlacedTri> placed;
    std::vector<int> order;
    {
        int root = tris.front();
        int v = root % 4;
        PlacedTri p;
        std::vector<int> ws;
        for (int w = 0; w < 4; ++w)
            if (w != v) ws.push_back(w);
        const double s = 100.0;
        p.corner[ws[0]] = {0, 0};
        p.corner[ws[1]] = {s, 0};
        p.corner[ws[2]] = {s / 2, s * 0.8660254};
        placed[root] = p;
        order.push_back(root);
    }
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int tid = order[qi];
        int t = tid / 4, v = tid % 4;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            auto g = tri.sideGlue(t, v, f);
            int tid2 = tri.triangleId(g[0], g[1]);
            if (placed.count(tid2)) continue;
            const Gluing& gl = tri.gluing(t, f);
            // shared side endpoints: corners (t,v,w) for w != v,f map to (t2, v2, perm w)
            std::vector<int> ws;
            for (int w = 0; w < 4; ++w)
                if (w != v && w != f) ws.push_back(w);
            Pt p1 = placed[tid].corner[ws[0]];
            Pt p2 = placed[tid].corner[ws[1]];
            int apexParent = -1;
            for (int w = 0; w < 4; ++w)
                if (w != v && placed[tid].corner.count(w) && w != ws[0] && w != ws[1]) apexParent = w;
            Pt pa = placed[tid].corner[apexParent];
            // reflect the parent's apex across the shared side
            double dx = p2.x - p1.x, dy = p2.y - p1.y;
            double len2 = dx * dx + dy * dy;
            double tproj = ((pa.x - p1.x) * dx + (pa.y - p1.y) * dy) / len2;
            Pt foot{p1.x + tproj * dx, p1.y + tproj * dy};
            Pt apex{2 * foot.x - pa.x, 2 * foot.y - pa.y};
            PlacedTri q;
            q.corner[gl.perm[ws[0]]] = p1;
            q.corner[gl.perm[ws[1]]] = p2;
            int wa = -1;
            for (int w = 0; w < 4; ++w)
                if (w != g[1] && w != gl.perm[ws[0]] && w != gl.perm[ws[1]]) wa = w;
            q.corner[wa] = apex;
            placed[tid2] = q;
            order.push_back(tid2);
        }
    }

    // bounding box
    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    for (auto& [tid, p] : placed)
        for (auto& [w, pt] : p.corner) {
            minx = std::min(minx, pt.x);
            maxx = std::max(maxx, pt.x);
            miny = std::min(miny, pt.y);
            maxy = std::max(maxy, pt.y);
        }
    double margin = 20;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - margin) << " " << fmt(miny - margin)
        << " " << fmt(maxx - minx + 2 * margin) << " " << fmt(maxy - miny + 2 * margin) << "\">\n";
    svg << "<g fill=\"none\" stroke=\"#444\" stroke-width=\"1\">\n";
    for (int tid : order) {
        int t = tid / 4, v = tid % 4;
        auto& p = placed[tid];
        std::vector<Pt> pts;
        for (auto& [w, pt] : p.corner) pts.push_back(pt);
        svg << "<polygon points=\"";
        for (auto& pt : pts) svg << fmt(pt.x) << "," << fmt(pt.y) << " ";
        svg << "\" fill=\"#f7f7f7\" stroke=\"#444\"/>\n";
        // corner letters
        Pt c = {(pts[0].x + pts[1].x + pts[2].x) / 3, (pts[0].y + pts[1].y + pts[2].y) / 3};
        for (auto& [w, pt] : p.corner) {
            Pt lp = lerp(pt, c, 0.18);
            svg << "<text x=\"" << fmt(lp.x) << "\" y=\"" << fmt(lp.y)
                << "\" font-size=\"9\" fill=\"#999\" stroke=\"none\">" << letterName(tri.edgeLabel(t, v, w))
                << "</text>\n";
        }
        svg << "<text x=\"" << fmt(c.x - 8) << "\" y=\"" << fmt(c.y) << "\" font-size=\"9\" fill=\"#bbb\" stroke=\"none\">"
            << t << "," << v << "</text>\n";
    }
    svg << "</g>\n";

    // curves
    int colorIdx = 0;
    for (const BasisRow& row : basis.rows) {
        const char* color = palette(colorIdx++);
        svg << "<g fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" opacity=\"0.85\">\n";
        if (row.walk) {
            const CurveWalk& walk = *row.walk;
            WalkState cur = stateAfter(tri, walk.steps.back());
            for (const WalkStep& st : walk.steps) {
                WalkState need = stateBefore(st);
                int tid = tri.triangleId(cur.tet, cur.vertex);
                if (tri.triangleEnd(cur.tet, cur.vertex) == endId && placed.count(tid)) {
                    auto& p = placed[tid];
                    int u = -1;
                    for (int w = 0; w < 4; ++w)
                        if (w != cur.vertex && w != cur.face && w != need.face) u = w;
                    // entry side midpoint -> near corner u -> exit side midpoint
                    std::vector<int> sideIn, sideOut;
                    for (int w = 0; w < 4; ++w) {
                        if (w == cur.vertex) continue;
                        if (w != cur.face) sideIn.push_back(w);
                        if (w != need.face) sideOut.push_back(w);
                    }
                    Pt pin = mid(p.corner[sideIn[0]], p.corner[sideIn[1]]);
                    Pt pout = mid(p.corner[sideOut[0]], p.corner[sideOut[1]]);
                    Pt pc = p.corner[u];
                    Pt near1 = lerp(pin, pc, 0.45);
                    Pt near2 = lerp(pout, pc, 0.45);
                    svg << "<polyline points=\"" << fmt(pin.x) << "," << fmt(pin.y) << " " << fmt(near1.x) << ","
                        << fmt(near1.y) << " " << fmt(near2.x) << "," << fmt(near2.y) << " " << fmt(pout.x) << ","
                        << fmt(pout.y) << "\"/>\n";
                }
                if (st.kind == WalkStep::Dive) {
                    // arrow stub toward the dived corner in the entry triangle
                    int tid2 = tri.triangleId(st.tet, st.enter);
                    if (tri.triangleEnd(st.tet, st.enter) == endId && placed.count(tid2)) {
                        auto& p = placed[tid2];
                        std::vector<int> side;
                        for (int w = 0; w < 4; ++w)
                            if (w != st.enter && w != st.face) side.push_back(w);
                        Pt pm = mid(p.corner[side[0]], p.corner[side[1]]);
                        Pt pc = p.corner[st.exit];
                        Pt tip = lerp(pm, pc, 0.6);
                        svg << "<line x1=\"" << fmt(pm.x) << "\" y1=\"" << fmt(pm.y) << "\" x2=\"" << fmt(tip.x)
                            << "\" y2=\"" << fmt(tip.y) << "\" stroke-dasharray=\"3,2\"/>\n";
                        svg << "<circle cx=\"" << fmt(tip.x) << "\" cy=\"" << fmt(tip.y)
                            << "\" r=\"2.2\" fill=\"" << color << "\"/>\n";
                    }
                }
                cur = stateAfter(tri, st);
            }
        } else {
            // weight-vector row: corner chords with multiplicities
            for (int tid : order) {
                int t = tid / 4, v = tid % 4;
                auto& p = placed[tid];
                for (int w = 0; w < 4; ++w) {
                    if (w == v) continue;
                    const mpz_class& c = row.weights[tt.cornerBranch(t, v, w)];
                    if (c == 0) continue;
                    long strands = std::min<long>(4, c.fits_slong_p() ? std::labs(c.get_si()) : 4);
                    // chord endpoints on the two sides adjacent to corner w
                    std::vector<int> others;
                    for (int x = 0; x < 4; ++x)
                        if (x != v && x != w) others.push_back(x);
                    Pt pc = p.corner[w];
                    for (long s = 0; s < strands; ++s) {
                        double f = 0.35 + 0.1 * static_cast<double>(s);
                        Pt a = lerp(pc, mid(pc, p.corner[others[0]]), f + 0.3);
                        Pt b = lerp(pc, mid(pc, p.corner[others[1]]), f + 0.3);
                        svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
                            << "\" y2=\"" << fmt(b.y) << "\"" << (c < 0 ? " stroke-dasharray=\"4,2\"" : "") << "/>\n";
                    }
                }
            }
        }
        svg << "</g>\n";
    }
    // legend
    svg << "<g font-size=\"10\" fill=\"#000\">\n";
    colorIdx = 0;
    double ly = miny - margin + 10;
    for (const BasisRow& row : basis.rows) {
        svg << "<text x=\"" << fmt(minx - margin + 4 + 60 * (colorIdx % 6)) << "\" y=\""
            << fmt(ly + 12 * (colorIdx / 6)) << "\" fill=\"" << palette(colorIdx) << "\">" << row.name()
            << "</text>\n";
        ++colorIdx;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace osc
