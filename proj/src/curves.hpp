#ifndef OSCBASIS_CURVES_HPP
#define OSCBASIS_CURVES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplectic.hpp"
#include "walks.hpp"

namespace osc {

// Spanning-tree data for the end graph plus the deterministic choices used
// by the dual-curve construction.
struct DualCurveContext {
    std::vector<int> endColor;                  // two-colouring from tree parity
    std::vector<std::pair<int, int>> endParent; // per end: (edge used, parent end), root has (-1,-1)
    std::vector<int> treeEdges;                 // edges of the spanning tree
    int e0 = -1;                                // extra edge joining same-coloured ends
    std::vector<int> basisEdges;                // E_1, ..., E_{nE-nC}: everything else
    std::vector<std::array<int, 4>> rect;       // per edge: chosen long rectangle (t,f,i,j), i<j
};

DualCurveContext buildDualContext(const Triangulation& tri);

// Obstacle bookkeeping for the router: strand counts per triangle corner and
// per long-rectangle entry.
struct RoutingObstacles {
    std::map<std::array<int, 3>, long> corner;  // (t,v,w) -> strands
    void addWalk(const Triangulation& tri, const CurveWalk& walk);
    void addWeights(const TrainTrack& tt, const WeightVector& z);
};

// Closed walk diving through the chosen long rectangle of basis edge `edgeId`
// and through the rectangles of its even end-graph cycle, with surface arcs
// found by least-obstacle search.
CurveWalk routeDualCurve(const Triangulation& tri, const DualCurveContext& ctx, int edgeId,
                         const RoutingObstacles& obstacles);

// Anticlockwise loop around the deterministically chosen endpoint of an edge.
WeightVector edgeCurve(const TrainTrack& tt, int edgeId);

// g_i pairs (m_j, l_j) on one boundary component with pairing(m_j,l_j) = 2 and
// all other mutual pairings zero; empty for spheres.
std::vector<std::pair<WeightVector, WeightVector>> boundaryBasis(const TrainTrack& tt, int endId);

struct BasisRow {
    enum Kind { M = 0, L = 1, Gamma = 2, C = 3 };
    Kind kind = M;
    int index = 0;  // pair index for M/L, basis-edge id for Gamma/C
    WeightVector weights;
    std::optional<CurveWalk> walk; // present for C and Gamma rows
    std::string name() const;
};

struct SymplecticBasis {
    DualCurveContext ctx;
    std::vector<BasisRow> rows; // m_1,l_1,...,m_g,l_g, G_1,C_1,...
};

// Build the full basis: boundary pairs, then (Gamma_i, C_i) per basis edge.
SymplecticBasis buildBasis(const TrainTrack& tt);

// Sign flips plus integer additions of C/m/l rows to Gamma rows until the
// pairing Gram matrix is exactly 2*Jstd. Throws InternalError when a required
// pairing has the wrong magnitude (routing bug detector).
void normalizeBasis(const TrainTrack& tt, std::vector<BasisRow>& rows);

// Gram matrix of pairings of the rows.
ZMat pairingGram(const TrainTrack& tt, const std::vector<BasisRow>& rows);

// 2n x 2n block matrix with [[0,1],[-1,0]] blocks.
ZMat standardJ(int halfPairs);

} // namespace osc

#endif
