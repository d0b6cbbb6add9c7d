#ifndef OSCBASIS_CHECKS_HPP
#define OSCBASIS_CHECKS_HPP

#include <string>
#include <vector>

#include "matrices.hpp"

namespace osc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Seeded property sweep over a triangulation: the main-theorem sampling
// (omega(h .), pairing, face-wise oracle agree on random kernel combinations),
// the Gram and solver identities, structural counts, and the edge-row
// orthogonality. Used by the `check` CLI command and the acceptance suite.
std::vector<CheckResult> runChecks(const Triangulation& tri, unsigned long seed, int samples);

bool allPassed(const std::vector<CheckResult>& results);

// Deterministic pseudo-random kernel combination sampler.
class KernelSampler {
public:
    KernelSampler(const TrainTrack& tt, unsigned long seed);
    WeightVector next(int coeffBound);
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<WeightVector>& basis() const { return basis_; }

private:
    const TrainTrack* tt_;
    std::vector<WeightVector> basis_;
    unsigned long long state_;
    unsigned long long nextRaw();
};

} // namespace osc

#endif
