#pragma once

// Polar decomposition S = H U (Hermitian positive boost H after unitary
// rotation U), read off from a turn whose tail is real: the rotation turn
// runs from the real tail x to the real unit z along Re(y), and the boost
// turn runs from z to the head y.

#include "sl2c/group.hpp"
#include "sl2c/turns.hpp"

namespace sl2c {

struct PolarFactors {
    double beta = 0.0;               ///< rapidity, >= 0
    CVec3 k_b = CVec3::basis(0);     ///< boost axis (e1 when beta = 0)
    double epsilon = 0.0;            ///< rotation angle in [0, 2 pi)
    CVec3 k_r = CVec3::basis(0);     ///< rotation axis (e1 when epsilon = 0)
    int sign = 1;                    ///< S = sign * boost(beta, k_b) * rotation(epsilon, k_r)
};

/// boost(beta, k_b) * rotation(epsilon, k_r), times the sign flag.
GroupElement reconstruct(const PolarFactors& f);

struct PolarTurns {
    Turn rotation_turn;  ///< (x, z), both real
    Turn boost_turn;     ///< (z, y), z real and parallel to Re y
    bool commuting;      ///< Re a and Im a were linearly dependent
};

PolarTurns polar_turns(const GroupElement& s);

/// Factors extracted from polar_turns.
PolarFactors polar_factors(const GroupElement& s);

/// Independent route: H = sqrt(M M^dagger) from a Hermitian eigensolver,
/// U = H^-1 M, and the factors read from the Pauli expansions of H and U.
PolarFactors matrix_polar_oracle(const GroupElement& s);

}  // namespace sl2c
