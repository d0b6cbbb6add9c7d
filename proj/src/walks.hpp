#ifndef OSCBASIS_WALKS_HPP
#define OSCBASIS_WALKS_HPP

#include <vector>

#include "traintrack.hpp"

namespace osc {

// One step of a combinatorial walk on the track. Between consecutive steps
// the walk crosses one boundary triangle through a corner, entering and
// leaving through distinct sides.
//   Cross: leave triangle (tet,vertex) through the side on `face` into the
//          adjacent triangle (through exit, central, central, exit branches).
//   Dive:  leave triangle (tet,enter) through the side on `face`, run through
//          the long rectangle of hexagon (tet,face) along edge {enter,exit},
//          pass the station (orientation flips), and emerge in triangle
//          (tet,exit) at the side on `face`.
struct WalkStep {
    enum Kind { Cross = 0, Dive = 1 };
    Kind kind = Cross;
    int tet = 0;
    int face = 0;
    int enter = 0; // Cross: the triangle vertex; Dive: entry end of the edge
    int exit = 0;  // Dive only: far end of the edge
};

// Cyclic walk; the orientation flag implied by realization starts at +1 and
// flips at each station, so the number of Dive steps must be even.
struct CurveWalk {
    std::vector<WalkStep> steps;
};

// Triangle and entry side after performing a step.
struct WalkState {
    int tet = 0, vertex = 0, face = 0;
    bool operator==(const WalkState&) const = default;
    auto operator<=>(const WalkState&) const = default;
};

WalkState stateAfter(const Triangulation& tri, const WalkStep& s);
WalkState stateBefore(const WalkStep& s); // triangle and exit side a step requires

// Signed branch weights traced by the walk: +1 where the travelling arc
// agrees with the branch orientation, -1 otherwise, with the arc orientation
// flipping at each station. The result always satisfies the compatibility
// system. Throws InputError if consecutive steps are not adjacent, a triangle
// is entered and left through the same side, or the station count is odd.
WeightVector realizeWalk(const TrainTrack& tt, const CurveWalk& walk);

// Anticlockwise loop around one endpoint of an ideal edge; the endpoint is
// the one whose link contains the smallest corner slot. Returns the walk and
// the boundary vertex it encircles.
std::pair<CurveWalk, int> edgeCurveWalk(const Triangulation& tri, int edgeId);

// Fundamental cycles of the dual graph of one boundary component with respect
// to a breadth-first spanning tree (tree-cotree decomposition).
std::vector<CurveWalk> boundaryCycleWalks(const Triangulation& tri, int endId);

} // namespace osc

#endif
