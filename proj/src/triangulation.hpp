#ifndef OSCBASIS_TRIANGULATION_HPP
#define OSCBASIS_TRIANGULATION_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "labels.hpp"
#include "smallperm.hpp"

namespace osc {

// Face f of a tetrahedron is the face opposite vertex f; it carries the three
// vertices other than f. A gluing maps it onto a face of the target
// tetrahedron via a vertex permutation with perm[f] = target face.
struct Gluing {
    int tet = -1;
    Perm4 perm;
};

// Unordered tetrahedron edges {i,j} indexed 0..5 in the order
// {01,02,03,12,13,23}.
int edgePairIndex(int i, int j);
std::pair<int, int> edgePairVerts(int idx);

// Corner of boundary triangle (tet,vertex) lying on tetrahedron edge
// {vertex,other}.
struct Corner {
    int tet = 0;
    int vertex = 0;
    int other = 0;
    bool operator==(const Corner&) const = default;
};

struct EdgeClass {
    int id = 0;
    std::vector<std::pair<int, int>> slots; // (tet, edge pair index)
    int degree = 0;
    std::array<int, 2> endVertex{-1, -1}; // boundary triangulation vertices
    std::array<int, 2> endEnd{-1, -1};    // boundary components at the two ends
};

struct End {
    int id = 0;
    std::vector<int> triangles; // triangle ids, 4*tet + vertex
    std::vector<int> vertices;  // boundary vertex ids on this component
    int eulerChar = 0;
    int genus = 0;
};

class Triangulation {
public:
    // Text format: first non-comment line is the tetrahedron count, then one
    // line per tetrahedron with four "tet:perm" items ('-' marks an unglued
    // face, which is rejected during validation). '#' starts a comment.
    static Triangulation parseText(const std::string& text);
    // JSON mirror: {"tetCount": n, "gluings": [[[tet,"perm"], ...4], ...n]}
    static Triangulation parseJson(const std::string& text);
    static Triangulation build(int tetCount, std::vector<std::array<Gluing, 4>> gluings);

    int tetCount() const { return n_; }
    const Gluing& gluing(int t, int f) const { return glu_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]; }
    int orientationSign(int t) const { return sign_[static_cast<std::size_t>(t)]; }

    // abc labelling
    Letter edgeLabel(int t, int i, int j) const { return labels_[static_cast<std::size_t>(t)][static_cast<std::size_t>(edgePairIndex(i, j))]; }
    Letter cornerLabel(const Corner& c) const { return edgeLabel(c.tet, c.vertex, c.other); }
    Side sideLabel(int t, int v, int f) const;
    // The face giving the side labelled k of triangle (t,v).
    int sideFace(int t, int v, Side k) const;

    // Side (t,v,f) of the boundary triangulation glued to (t',v',f').
    std::array<int, 3> sideGlue(int t, int v, int f) const;

    // Anticlockwise vertex cycle of face f seen from outside through that face.
    std::array<int, 3> faceCycle(int t, int f) const;

    // edge classes
    int edgeClassCount() const { return static_cast<int>(edges_.size()); }
    const EdgeClass& edgeClass(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    int slotEdge(int t, int pairIdx) const { return slotEdge_[static_cast<std::size_t>(t * 6 + pairIdx)]; }

    // boundary triangulation
    int triangleId(int t, int v) const { return 4 * t + v; }
    int triangleEnd(int t, int v) const { return triEnd_[static_cast<std::size_t>(triangleId(t, v))]; }
    int endCount() const { return static_cast<int>(ends_.size()); }
    const End& end(int e) const { return ends_[static_cast<std::size_t>(e)]; }
    int totalGenus() const;

    int vertexCount() const { return static_cast<int>(links_.size()); }
    int cornerVertex(const Corner& c) const;
    // Link of a boundary vertex: its corners in cyclic order, following the
    // orientation of the corner branches around the vertex.
    const std::vector<Corner>& vertexLink(int vid) const { return links_[static_cast<std::size_t>(vid)]; }
    int vertexEnd(int vid) const { return vertEnd_[static_cast<std::size_t>(vid)]; }

    bool connected() const { return connected_; }

private:
    int n_ = 0;
    std::vector<std::array<Gluing, 4>> glu_;
    std::vector<int> sign_;
    std::vector<std::array<Letter, 6>> labels_;
    std::vector<int> slotEdge_;
    std::vector<EdgeClass> edges_;
    std::vector<int> triEnd_;
    std::vector<End> ends_;
    std::vector<int> cornerVert_; // corner id -> vertex id
    std::vector<std::vector<Corner>> links_;
    std::vector<int> vertEnd_;
    bool connected_ = true;

    int cornerId(const Corner& c) const { return c.tet * 12 + c.vertex * 3 + (c.other > c.vertex ? c.other - 1 : c.other); }
    Corner cornerFromId(int id) const;
    void validateGluings() const;
    void orient();
    void labelEdges();
    void buildEdgeClasses();
    void buildBoundary();
};

} // namespace osc

#endif
