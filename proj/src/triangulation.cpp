#include "triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace osc {

namespace {

const std::array<std::pair<int, int>, 6> kEdgePairs = {
    std::pair<int, int>{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::string loc(int t, int f) {
    std::ostringstream os;
    os << "(tet " << t << ", face " << f << ")";
    return os.str();
}

} // namespace

int edgePairIndex(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int k = 0; k < 6; ++k)
        if (kEdgePairs[static_cast<std::size_t>(k)].first == i && kEdgePairs[static_cast<std::size_t>(k)].second == j) return k;
    throw InternalError("bad edge pair");
}

std::pair<int, int> edgePairVerts(int idx) { return kEdgePairs[static_cast<std::size_t>(idx)]; }

Triangulation Triangulation::parseText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) lines.push_back(line);
    }
    if (lines.empty()) throw InputError("empty triangulation file");
    int n = 0;
    {
        std::istringstream hs(lines[0]);
        if (!(hs >> n) || n <= 0) throw InputError("first line must be a positive tetrahedron count");
        std::string rest;
        if (hs >> rest) throw InputError("unexpected tokens after tetrahedron count");
    }
    if (static_cast<int>(lines.size()) != n + 1)
        throw InputError("expected " + std::to_string(n) + " gluing lines, found " + std::to_string(lines.size() - 1));
    std::vector<std::array<Gluing, 4>> glu(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        std::istringstream ls(lines[static_cast<std::size_t>(t) + 1]);
        for (int f = 0; f < 4; ++f) {
            std::string item;
            if (!(ls >> item)) throw InputError("missing gluing item at " + loc(t, f));
            if (item == "-") continue; // left unglued; caught by validation
            auto colon = item.find(':');
            if (colon == std::string::npos) throw InputError("malformed gluing item '" + item + "' at " + loc(t, f));
            int target = 0;
            try {
                std::size_t used = 0;
                target = std::stoi(item.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw InputError("malformed tetrahedron index in '" + item + "' at " + loc(t, f));
            }
            if (target < 0 || target >= n) throw InputError("tetrahedron index out of range at " + loc(t, f));
            Perm4 p;
            try {
                p = Perm4::fromDigits(item.substr(colon + 1));
            } catch (const std::exception& e) {
                throw InputError(std::string("malformed permutation at ") + loc(t, f) + ": " + e.what());
            }
            glu[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = Gluing{target, p};
        }
        std::string extra;
        if (ls >> extra) throw InputError("unexpected tokens after face gluings on tetrahedron " + std::to_string(t));
    }
    return build(n, std::move(glu));
}

Triangulation Triangulation::parseJson(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("tetCount") || !j.contains("gluings"))
        throw InputError("JSON triangulation needs 'tetCount' and 'gluings'");
    int n = 0;
    try {
        n = j.at("tetCount").get<int>();
    } catch (const std::exception&) {
        throw InputError("'tetCount' must be an integer");
    }
    if (n <= 0) throw InputError("'tetCount' must be positive");
    const auto& gl = j.at("gluings");
    if (!gl.is_array() || static_cast<int>(gl.size()) != n)
        throw InputError("'gluings' must list one entry per tetrahedron");
    std::vector<std::array<Gluing, 4>> glu(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const auto& row = gl.at(static_cast<std::size_t>(t));
        if (!row.is_array() || row.size() != 4) throw InputError("tetrahedron " + std::to_string(t) + " needs 4 face gluings");
        for (int f = 0; f < 4; ++f) {
            const auto& item = row.at(static_cast<std::size_t>(f));
            if (item.is_null()) continue;
            if (!item.is_array() || item.size() != 2) throw InputError("gluing item must be [tet, \"perm\"] at " + loc(t, f));
            int target = 0;
            try {
                target = item.at(0).get<int>();
            } catch (const std::exception&) {
                throw InputError("malformed tetrahedron index at " + loc(t, f));
            }
            if (target < 0 || target >= n) throw InputError("tetrahedron index out of range at " + loc(t, f));
            Perm4 p;
            try {
                p = Perm4::fromDigits(item.at(1).get<std::string>());
            } catch (const std::exception& e) {
                throw InputError(std::string("malformed permutation at ") + loc(t, f) + ": " + e.what());
            }
            glu[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = Gluing{target, p};
        }
    }
    return build(n, std::move(glu));
}

Triangulation Triangulation::build(int tetCount, std::vector<std::array<Gluing, 4>> gluings) {
    Triangulation T;
    T.n_ = tetCount;
    T.glu_ = std::move(gluings);
    T.validateGluings();
    T.orient();
    T.labelEdges();
    T.buildEdgeClasses();
    T.buildBoundary();
    return T;
}

void Triangulation::validateGluings() const {
    for (int t = 0; t < n_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluing(t, f);
            if (g.tet < 0) throw InputError("unglued face at " + loc(t, f));
            int f2 = g.perm[f];
            if (g.tet == t && f2 == f) throw InputError("face glued to itself at " + loc(t, f));
            const Gluing& back = gluing(g.tet, f2);
            if (back.tet != t || !(back.perm == g.perm.inverse()))
                throw InputError("non-involutive gluing at " + loc(t, f));
        }
    }
}

void Triangulation::orient() {
    sign_.assign(static_cast<std::size_t>(n_), 0);
    int components = 0;
    for (int root = 0; root < n_; ++root) {
        if (sign_[static_cast<std::size_t>(root)] != 0) continue;
        ++components;
        sign_[static_cast<std::size_t>(root)] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = gluing(t, f);
                int s2 = sign_[static_cast<std::size_t>(t)] * (g.perm.isOdd() ? 1 : -1);
                int& cur = sign_[static_cast<std::size_t>(g.tet)];
                if (cur == 0) {
                    cur = s2;
                    stack.push_back(g.tet);
                } else if (cur != s2) {
                    throw InputError("non-orientable triangulation (conflict at " + loc(t, f) + ")");
                }
            }
        }
    }
    connected_ = components == 1;
}

std::array<int, 3> Triangulation::faceCycle(int t, int f) const {
    static const std::array<std::array<int, 3>, 4> base = {
        std::array<int, 3>{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    std::array<int, 3> c = base[static_cast<std::size_t>(f)];
    if (orientationSign(t) == -1) std::swap(c[0], c[2]);
    return c;
}

void Triangulation::labelEdges() {
    // Two assignments with a = {01,23}; they differ by swapping b and c, and
    // exactly one of them reads a,b,c clockwise around every hexagonal face.
    static const std::array<Letter, 6> cand1 = {Letter::A, Letter::B, Letter::C, Letter::C, Letter::B, Letter::A};
    static const std::array<Letter, 6> cand2 = {Letter::A, Letter::C, Letter::B, Letter::B, Letter::C, Letter::A};
    labels_.assign(static_cast<std::size_t>(n_), cand1);
    for (int t = 0; t < n_; ++t) {
        bool found = false;
        for (const auto& cand : {cand1, cand2}) {
            bool ok = true;
            for (int f = 0; f < 4 && ok; ++f) {
                auto cyc = faceCycle(t, f);
                // anticlockwise long-edge labels; clockwise a,b,c means the
                // anticlockwise reading is a cyclic permutation of (a,c,b)
                Letter e0 = cand[static_cast<std::size_t>(edgePairIndex(cyc[0], cyc[1]))];
                Letter e1 = cand[static_cast<std::size_t>(edgePairIndex(cyc[1], cyc[2]))];
                Letter e2 = cand[static_cast<std::size_t>(edgePairIndex(cyc[2], cyc[0]))];
                ok = (prevLetter(e0) == e1) && (prevLetter(e1) == e2);
            }
            if (ok) {
                labels_[static_cast<std::size_t>(t)] = cand;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("no abc labelling for tetrahedron " + std::to_string(t));
    }
}

Side Triangulation::sideLabel(int t, int v, int f) const {
    Letter x{}, y{};
    bool first = true;
    for (int w = 0; w < 4; ++w) {
        if (w == v || w == f) continue;
        if (first) {
            x = edgeLabel(t, v, w);
            first = false;
        } else {
            y = edgeLabel(t, v, w);
        }
    }
    return sideOf(x, y);
}

int Triangulation::sideFace(int t, int v, Side k) const {
    for (int f = 0; f < 4; ++f) {
        if (f == v) continue;
        if (sideLabel(t, v, f) == k) return f;
    }
    throw InternalError("side label not found");
}

std::array<int, 3> Triangulation::sideGlue(int t, int v, int f) const {
    const Gluing& g = gluing(t, f);
    return {g.tet, g.perm[v], g.perm[f]};
}

void Triangulation::buildEdgeClasses() {
    UnionFind uf(6 * n_);
    for (int t = 0; t < n_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluing(t, f);
            for (int k = 0; k < 6; ++k) {
                auto [i, jj] = edgePairVerts(k);
                if (i == f || jj == f) continue;
                uf.unite(t * 6 + k, g.tet * 6 + edgePairIndex(g.perm[i], g.perm[jj]));
            }
        }
    }
    slotEdge_.assign(static_cast<std::size_t>(6 * n_), -1);
    edges_.clear();
    std::vector<int> rootId(static_cast<std::size_t>(6 * n_), -1);
    for (int s = 0; s < 6 * n_; ++s) {
        int r = uf.find(s);
        if (rootId[static_cast<std::size_t>(r)] < 0) {
            rootId[static_cast<std::size_t>(r)] = static_cast<int>(edges_.size());
            edges_.push_back(EdgeClass{static_cast<int>(edges_.size()), {}, 0, {-1, -1}, {-1, -1}});
        }
        int id = rootId[static_cast<std::size_t>(r)];
        slotEdge_[static_cast<std::size_t>(s)] = id;
        edges_[static_cast<std::size_t>(id)].slots.emplace_back(s / 6, s % 6);
        edges_[static_cast<std::size_t>(id)].degree++;
    }
}

Corner Triangulation::cornerFromId(int id) const {
    Corner c;
    c.tet = id / 12;
    int r = id % 12;
    c.vertex = r / 3;
    int k = r % 3;
    c.other = k >= c.vertex ? k + 1 : k;
    return c;
}

int Triangulation::cornerVertex(const Corner& c) const { return cornerVert_[static_cast<std::size_t>(cornerId(c))]; }

void Triangulation::buildBoundary() {
    // Boundary vertices: corners identified across glued triangle sides.
    UnionFind ufc(12 * n_);
    for (int t = 0; t < n_; ++t) {
        for (int v = 0; v < 4; ++v) {
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const Gluing& g = gluing(t, f);
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    ufc.unite(cornerId(Corner{t, v, w}), cornerId(Corner{g.tet, g.perm[v], g.perm[w]}));
                }
            }
        }
    }
    cornerVert_.assign(static_cast<std::size_t>(12 * n_), -1);
    std::vector<int> rootId(static_cast<std::size_t>(12 * n_), -1);
    int nv = 0;
    for (int c = 0; c < 12 * n_; ++c) {
        int r = ufc.find(c);
        if (rootId[static_cast<std::size_t>(r)] < 0) rootId[static_cast<std::size_t>(r)] = nv++;
        cornerVert_[static_cast<std::size_t>(c)] = rootId[static_cast<std::size_t>(r)];
    }

    // Link cycles: from a corner, cross the head side of its corner branch
    // (the side whose label starts with the corner letter).
    links_.assign(static_cast<std::size_t>(nv), {});
    std::vector<int> firstCorner(static_cast<std::size_t>(nv), -1);
    for (int c = 0; c < 12 * n_; ++c) {
        int vid = cornerVert_[static_cast<std::size_t>(c)];
        if (firstCorner[static_cast<std::size_t>(vid)] < 0) firstCorner[static_cast<std::size_t>(vid)] = c;
    }
    for (int vid = 0; vid < nv; ++vid) {
        Corner cur = cornerFromId(firstCorner[static_cast<std::size_t>(vid)]);
        std::vector<Corner>& cycle = links_[static_cast<std::size_t>(vid)];
        do {
            cycle.push_back(cur);
            Letter x = cornerLabel(cur);
            int head = -1;
            for (int f = 0; f < 4; ++f) {
                if (f == cur.vertex || f == cur.other) continue;
                if (sideFirst(sideLabel(cur.tet, cur.vertex, f)) == x) head = f;
            }
            if (head < 0) throw InternalError("corner has no head side");
            const Gluing& g = gluing(cur.tet, head);
            cur = Corner{g.tet, g.perm[cur.vertex], g.perm[cur.other]};
            if (cycle.size() > static_cast<std::size_t>(12 * n_)) throw InternalError("vertex link does not close");
        } while (!(cur == cycle.front()));
        if (static_cast<int>(cycle.size()) != static_cast<int>(std::count(cornerVert_.begin(), cornerVert_.end(), vid)))
            throw InternalError("vertex link misses corners (edge end identified with its opposite)");
    }

    // Ends: connected components of triangles under side gluings.
    UnionFind uft(4 * n_);
    for (int t = 0; t < n_; ++t) {
        for (int v = 0; v < 4; ++v) {
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                auto g = sideGlue(t, v, f);
                uft.unite(triangleId(t, v), triangleId(g[0], g[1]));
            }
        }
    }
    triEnd_.assign(static_cast<std::size_t>(4 * n_), -1);
    std::vector<int> endRoot(static_cast<std::size_t>(4 * n_), -1);
    ends_.clear();
    for (int tri = 0; tri < 4 * n_; ++tri) {
        int r = uft.find(tri);
        if (endRoot[static_cast<std::size_t>(r)] < 0) {
            endRoot[static_cast<std::size_t>(r)] = static_cast<int>(ends_.size());
            ends_.push_back(End{static_cast<int>(ends_.size()), {}, {}, 0, 0});
        }
        int id = endRoot[static_cast<std::size_t>(r)];
        triEnd_[static_cast<std::size_t>(tri)] = id;
        ends_[static_cast<std::size_t>(id)].triangles.push_back(tri);
    }

    vertEnd_.assign(static_cast<std::size_t>(nv), -1);
    for (int vid = 0; vid < nv; ++vid) {
        const Corner& c = links_[static_cast<std::size_t>(vid)].front();
        vertEnd_[static_cast<std::size_t>(vid)] = triEnd_[static_cast<std::size_t>(triangleId(c.tet, c.vertex))];
    }
    for (auto& e : ends_) {
        for (int vid = 0; vid < nv; ++vid)
            if (vertEnd_[static_cast<std::size_t>(vid)] == e.id) e.vertices.push_back(vid);
        int F = static_cast<int>(e.triangles.size());
        if ((3 * F) % 2 != 0) throw InternalError("boundary component has unmatched sides");
        int E = 3 * F / 2;
        int V = static_cast<int>(e.vertices.size());
        e.eulerChar = V - E + F;
        if (e.eulerChar % 2 != 0 || e.eulerChar > 2)
            throw InputError("boundary component " + std::to_string(e.id) + " is not a closed orientable surface");
        e.genus = (2 - e.eulerChar) / 2;
    }

    // Edge class endpoints.
    if (nv != 2 * edgeClassCount())
        throw InternalError("boundary vertex count is not twice the edge count");
    for (auto& ec : edges_) {
        auto [t, k] = ec.slots.front();
        auto [i, j] = edgePairVerts(k);
        ec.endVertex = {cornerVertex(Corner{t, i, j}), cornerVertex(Corner{t, j, i})};
        ec.endEnd = {vertexEnd(ec.endVertex[0]), vertexEnd(ec.endVertex[1])};
        if (ec.endVertex[0] == ec.endVertex[1]) throw InternalError("edge with identified ends");
    }
}

int Triangulation::totalGenus() const {
    int g = 0;
    for (const auto& e : ends_) g += e.genus;
    return g;
}

} // namespace osc
