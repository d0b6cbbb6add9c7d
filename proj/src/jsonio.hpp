#ifndef OSCBASIS_JSONIO_HPP
#define OSCBASIS_JSONIO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "matrices.hpp"

namespace osc {

using ojson = nlohmann::ordered_json;

ojson infoJson(const Triangulation& tri);
ojson trackJson(const TrainTrack& tt);
ojson basisJson(const TrainTrack& tt, const SymplecticBasis& basis);
ojson matrixJson(const SymplecticSystem& sys, bool nzOnly);
// Classical gluing/cusp system: every edge-curve row plus the cusp rows.
ojson nzJson(const TrainTrack& tt, const SymplecticBasis& basis);
ojson solutionJson(const SymplecticSystem& sys, const ExactSolution& sol, const ResidualReport& rep);
ojson checksJson(const std::vector<CheckResult>& results, unsigned long seed, int samples);

std::string matrixCsv(const std::vector<std::string>& rowNames, const ZMat& m);

// integer/rational helpers for stable output
ojson rationalJson(const mpq_class& q);

} // namespace osc

#endif
