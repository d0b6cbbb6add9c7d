#ifndef OSCBASIS_TRAINTRACK_HPP
#define OSCBASIS_TRAINTRACK_HPP

#include <array>
#include <string>
#include <vector>

#include "intlinalg.hpp"
#include "triangulation.hpp"

namespace osc {

// The four kinds of branches, 60 per tetrahedron:
//   Corner(t,v,w)      branch running around the boundary vertex at corner
//                      {v,w} of triangle (t,v); oriented from the switch on
//                      its tail side to the switch on its head side.
//   Exit(t,v,f)        branch leaving triangle (t,v) across the side on face
//                      f into the short rectangle; this is also the hexagon's
//                      "bang" branch for (t,f,v).
//   Central(t,f,v)     branch from the 3-switch of short rectangle (t,f,v)
//                      to the 1-switch on the glued short side.
//   Long(t,f,v,w)      branch entering the long rectangle of hexagon (t,f)
//                      along tetrahedron edge {v,w} at the v end, oriented
//                      into the station.
struct BranchRef {
    enum Kind { Corner = 0, Exit = 1, Central = 2, Long = 3 };
    Kind kind = Corner;
    int tet = 0;
    int a = 0, b = 0, c = 0; // meaning depends on kind, see above
    bool operator==(const BranchRef&) const = default;
};

struct TrackVertexRef {
    enum Kind { TwoSwitch = 0, ThreeSwitch = 1, OneSwitch = 2, Station = 3 };
    Kind kind = TwoSwitch;
    // TwoSwitch: (tet,vertex,face); ThreeSwitch: (tet,face,vertex);
    // OneSwitch: two central slots; Station: two long-rectangle slots
    // (tet,face,i,j) with i<j glued to each other.
    std::array<int, 4> slotA{0, 0, 0, 0};
    std::array<int, 4> slotB{0, 0, 0, 0};
};

// Integer weights per branch; abstract oscillating curves are the weight
// vectors in the kernel of the compatibility system.
struct WeightVector {
    ZVec w;
    explicit WeightVector(int branchCount = 0) : w(static_cast<std::size_t>(branchCount), 0) {}
    mpz_class& operator[](int b) { return w[static_cast<std::size_t>(b)]; }
    const mpz_class& operator[](int b) const { return w[static_cast<std::size_t>(b)]; }
    int size() const { return static_cast<int>(w.size()); }
    bool isZero() const;
    WeightVector& addMul(const WeightVector& o, const mpz_class& c);
    WeightVector negated() const;
};

// Sparse row of the compatibility system; coefficients are small integers.
struct CompatRow {
    std::vector<std::pair<int, int>> terms; // (branch id, coefficient)
};

class TrainTrack {
public:
    explicit TrainTrack(const Triangulation& tri);

    const Triangulation& tri() const { return *tri_; }
    int branchCount() const { return 60 * n_; }
    int vertexCount() const { return static_cast<int>(vertices_.size()); }

    // branch ids
    int cornerBranch(int t, int v, int w) const;
    int exitBranch(int t, int v, int f) const;
    int centralBranch(int t, int f, int v) const;
    int longBranch(int t, int f, int vFrom, int vTo) const;
    // gamma_hex(k)! alias of the exit branch reaching hexagon (t,f) at the
    // short side next to triangle vertex v.
    int hexBangBranch(int t, int f, int v) const { return exitBranch(t, v, f); }
    BranchRef branch(int id) const;
    std::string branchName(int id) const;

    const TrackVertexRef& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    std::vector<int> incidentBranches(int vertexId) const;
    // +1 if the branch is oriented away from the vertex, -1 towards it.
    int branchSign(int vertexId, int branchId) const;
    std::string vertexName(int id) const;

    int twoSwitchId(int t, int v, int f) const;
    int threeSwitchId(int t, int f, int v) const;

    const std::vector<CompatRow>& compatibilitySystem() const { return rows_; }
    bool isOscillating(const WeightVector& z) const;

    // Integer lattice basis of the solution set of the compatibility system.
    std::vector<WeightVector> kernelBasis() const;

    WeightVector zero() const { return WeightVector(branchCount()); }

private:
    const Triangulation* tri_;
    int n_;
    std::vector<TrackVertexRef> vertices_;
    std::vector<CompatRow> rows_;
    int oneSwitchBase_ = 0;
    int stationBase_ = 0;

    void buildVertices();
    void buildRows();
    friend class PairingContext;
};

} // namespace osc

#endif
