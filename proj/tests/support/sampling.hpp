#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sl2c/calg.hpp"
#include "sl2c/group.hpp"

namespace sl2c::testing {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return normal_(rng_); }
    Complex complex_normal() { return {normal(), normal()}; }
    Complex unit_square() { return {uniform(0.0, 1.0), uniform(0.0, 1.0)}; }

    CVec3 complex_vector() { return {complex_normal(), complex_normal(), complex_normal()}; }
    CVec3 unit_square_vector() { return {unit_square(), unit_square(), unit_square()}; }

    CVec3 real_unit() {
        for (;;) {
            const CVec3 v = CVec3::real(normal(), normal(), normal());
            const double n = v.hnorm();
            if (n > 1e-3) return v / n;
        }
    }

    /// Complex-normal (a0, a) projected onto a0^2 + a.a = 1, rejecting
    /// draws whose projection scale is below 1e-6.
    GroupElement element() {
        for (;;) {
            const Complex a0 = complex_normal();
            const CVec3 a = complex_vector();
            const Complex s = std::sqrt(a0 * a0 + dot(a, a));
            if (std::abs(s) < 1e-6) continue;
            return GroupElement::make(a0 / s, a / s);
        }
    }

    GroupElement su2_element() { return rotation(uniform(0.0, 4 * std::numbers::pi), real_unit()); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Component-form product of S2 = b0 - i b.sigma and S1 = a0 - i a.sigma,
/// expanded by hand from (u.sigma)(v.sigma) = u.v + i (u ^ v).sigma.
inline GroupElement quaternion_product(const GroupElement& second, const GroupElement& first) {
    const Complex a0 = first.a0();
    const Complex b0 = second.a0();
    const CVec3& a = first.a();
    const CVec3& b = second.a();
    return GroupElement::from_trusted(b0 * a0 - dot(b, a), b0 * a + a0 * b + wedge(b, a));
}

/// Element whose vector part b makes a ^ b a nonzero isotropic vector, or
/// (every third draw) a parallel vector part, so the two turns never meet.
inline GroupElement non_meeting_partner(Sampler& rng, const GroupElement& s, int variant) {
    const CVec3& a = s.a();
    CVec3 b;
    if (variant % 3 == 0) {
        b = rng.complex_normal() * a;
    } else {
        // Null direction n orthogonal to a: n = u + i v with u, v from a
        // bilinear-orthonormal pair orthogonal to a. Then b = alpha a + beta n
        // gives a ^ b = beta (a ^ n), which is isotropic.
        const UnitCVec3 ahat = normalize(a);
        CVec3 seed = CVec3::basis(0);
        if (std::abs(ahat[0]) > 0.9) seed = CVec3::basis(1);
        const UnitCVec3 u = normalize(seed - dot(seed, ahat.vec()) * ahat.vec());
        const CVec3 v = wedge(ahat, u);
        const CVec3 n = u.vec() + Complex(0.0, 1.0) * v;
        b = rng.complex_normal() * a + rng.complex_normal() * n;
    }
    const Complex b0 = std::sqrt(1.0 - dot(b, b));
    return GroupElement::make(b0, b);
}

}  // namespace sl2c::testing
