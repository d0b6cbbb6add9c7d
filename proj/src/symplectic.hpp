#ifndef OSCBASIS_SYMPLECTIC_HPP
#define OSCBASIS_SYMPLECTIC_HPP

#include "traintrack.hpp"

namespace osc {

// Element of the vector space spanned by a_i, b_i, c_i with a_i+b_i+c_i = 0.
// Stored in incidence coordinates (3 per tetrahedron); the Neumann-Zagier
// view drops the c coordinate by subtracting it from a and b.
struct HolonomyVector {
    ZVec inc; // a_0,b_0,c_0, a_1,b_1,c_1, ...
    explicit HolonomyVector(int tetCount = 0) : inc(static_cast<std::size_t>(3 * tetCount), 0) {}
    int tetCount() const { return static_cast<int>(inc.size()) / 3; }
    ZVec nz() const;
    HolonomyVector& addMul(const HolonomyVector& o, const mpz_class& c);
    bool operator==(const HolonomyVector&) const = default;
};

// Signed local intersection number of two branches at a vertex of the track.
// Throws InputError when a branch is not incident to the vertex.
mpz_class localPairing(const TrainTrack& tt, int vertexId, int branch1, int branch2);

// 2 zeta . zeta', summed over all vertices. Both arguments must satisfy the
// compatibility system.
mpz_class pairing(const TrainTrack& tt, const WeightVector& z1, const WeightVector& z2);

// Same value computed by the face-wise regrouped sums (independent route).
mpz_class pairingFacewise(const TrainTrack& tt, const WeightVector& z1, const WeightVector& z2);

// Combinatorial holonomy: corner branches contribute their letter generator,
// everything else contributes zero.
HolonomyVector holonomy(const TrainTrack& tt, const WeightVector& z);

// omega in NZ coordinates: sum_i (u_a v_b - u_b v_a).
mpz_class omega(const HolonomyVector& u, const HolonomyVector& v);
mpz_class omegaNZ(const ZVec& u, const ZVec& v);

} // namespace osc

#endif
