#ifndef OSCBASIS_SVG_HPP
#define OSCBASIS_SVG_HPP

#include <string>

#include "curves.hpp"

namespace osc {

// Renders one boundary component: the triangulation unfolded into the plane
// along a spanning tree of its dual graph, with the basis curves overlaid.
// Walk-backed curves are drawn as polylines through the corners they pass;
// weight-vector rows are drawn as corner chords with multiplicities.
std::string renderEndSvg(const TrainTrack& tt, const SymplecticBasis& basis, int endId);

} // namespace osc

#endif
