#pragma once

// Two pure boosts composed with the parallelogram law, then split into a
// Wigner (Thomas) rotation followed by a resultant boost. The closed forms
// below are the same quantities as functions of (beta_m, beta_n, theta).

#include "sl2c/group.hpp"
#include "sl2c/turns.hpp"

namespace sl2c {

struct BoostSpec {
    double beta;  ///< rapidity
    CVec3 n;      ///< real unit direction
};

struct WignerResult {
    double epsilon = 0.0;           ///< Wigner rotation angle
    CVec3 k_r = CVec3::basis(0);    ///< rotation axis, along m ^ n
    double beta_res = 0.0;          ///< resultant rapidity
    CVec3 k_b = CVec3::basis(0);    ///< resultant boost direction, in span{m, n}
    double phi = 0.0;               ///< angle from n to k_b
    GroupElement product;           ///< second * first
    CompositionPath path = CompositionPath::Geometric;
    bool collinear = false;
    double a0_imag = 0.0;           ///< Im a0 of the product, zero in exact arithmetic
    CVec3 meeting_point;            ///< real point where the two boost turns meet
};

/// `first` acts first. Throws NonRealAxis / NotUnitVector for bad axes.
WignerResult compose_boosts(const BoostSpec& first, const BoostSpec& second);

/// tan(eps/2) = sin(theta) / (kappa + cos(theta)), kappa = coth(bn/2) coth(bm/2).
double wigner_angle(double beta_m, double beta_n, double theta);

/// cosh(b) = cosh(bm) cosh(bn) + sinh(bm) sinh(bn) cos(theta).
double resultant_rapidity(double beta_m, double beta_n, double theta);

/// Angle between the resultant boost and the second boost direction.
double boost_deflection(double beta_m, double beta_n, double theta);

}  // namespace sl2c
