#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sl2c/polar.hpp"
#include "support/sampling.hpp"

namespace sl2c {
namespace {

constexpr double kPi = std::numbers::pi;
const CVec3 kX = CVec3::basis(0);
const CVec3 kY = CVec3::basis(1);
const CVec3 kZ = CVec3::basis(2);

double axis_gap(const CVec3& u, const CVec3& v) { return max_abs_diff(u, v); }

TEST(Polar, PureBoost) {
    const CVec3 n = CVec3::real(2.0, -1.0, 2.0) / 3.0;
    const PolarFactors f = polar_factors(boost(1.7, n));
    EXPECT_NEAR(f.beta, 1.7, 1e-14);
    EXPECT_LE(axis_gap(f.k_b, n), 1e-14);
    EXPECT_NEAR(f.epsilon, 0.0, 1e-14);
    EXPECT_EQ(f.sign, 1);
}

TEST(Polar, PureRotation) {
    const PolarFactors f = polar_factors(rotation(2.4, kY));
    EXPECT_NEAR(f.beta, 0.0, 1e-14);
    EXPECT_NEAR(f.epsilon, 2.4, 1e-14);
    EXPECT_LE(axis_gap(f.k_r, kY), 1e-14);
}

TEST(Polar, RotationPastTwoPiFlipsTheAxis) {
    // rotation(7, z) = rotation(4 pi - 7, -z) in SL(2,C).
    const PolarFactors f = polar_factors(rotation(7.0, kZ));
    EXPECT_NEAR(f.epsilon, 4 * kPi - 7.0, 1e-14);
    EXPECT_LE(axis_gap(f.k_r, -kZ), 1e-14);
    EXPECT_EQ(f.sign, 1);
}

TEST(Polar, MinusOneCarriesTheSign) {
    const PolarFactors f = polar_factors(-GroupElement());
    EXPECT_EQ(f.sign, -1);
    EXPECT_EQ(f.epsilon, 0.0);
    EXPECT_EQ(f.beta, 0.0);
    EXPECT_LE(max_abs_diff(reconstruct(f), -GroupElement()), 0.0);
    EXPECT_EQ(matrix_polar_oracle(-GroupElement()).sign, -1);
}

TEST(Polar, BoostAfterRotation) {
    const GroupElement s = multiply(boost(0.8, kX), rotation(1.2, kZ));
    const PolarFactors f = polar_factors(s);
    EXPECT_NEAR(f.beta, 0.8, 1e-13);
    EXPECT_LE(axis_gap(f.k_b, kX), 1e-13);
    EXPECT_NEAR(f.epsilon, 1.2, 1e-13);
    EXPECT_LE(axis_gap(f.k_r, kZ), 1e-13);
}

TEST(Polar, CommutingFactorsShareAnAxis) {
    testing::Sampler rng(51);
    for (int i = 0; i < 200; ++i) {
        const CVec3 n = rng.real_unit();
        const double beta = rng.uniform(0.05, 3.0);
        const double eps = rng.uniform(0.05, 2 * kPi - 0.05);
        const GroupElement s = multiply(boost(beta, n), rotation(eps, n));
        const PolarTurns p = polar_turns(s);
        EXPECT_TRUE(p.commuting);
        const PolarFactors f = polar_factors(s);
        EXPECT_NEAR(f.beta, beta, 1e-9);
        EXPECT_NEAR(f.epsilon, eps, 1e-9);
        EXPECT_LE(axis_gap(f.k_b, n), 1e-8);
        EXPECT_LE(axis_gap(f.k_r, n), 1e-8);
    }
}

TEST(Polar, AgreesWithMatrixOracleAndReconstructs) {
    testing::Sampler rng(52);
    for (int i = 0; i < 2000; ++i) {
        const GroupElement s = rng.element();
        const PolarFactors f = polar_factors(s);
        const PolarFactors o = matrix_polar_oracle(s);
        EXPECT_NEAR(f.beta, o.beta, 1e-8);
        EXPECT_NEAR(f.epsilon, o.epsilon, 1e-8);
        EXPECT_EQ(f.sign, o.sign);
        if (f.beta > 1e-6) EXPECT_LE(axis_gap(f.k_b, o.k_b), 1e-7);
        if (f.epsilon > 1e-6) EXPECT_LE(axis_gap(f.k_r, o.k_r), 1e-7);
        EXPECT_LE(max_abs_diff(reconstruct(f), s), 1e-9);
    }
}

TEST(Polar, TurnsAreRealWhereExpected) {
    testing::Sampler rng(53);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement s = rng.element();
        const PolarTurns p = polar_turns(s);
        EXPECT_EQ(p.rotation_turn.tail().vec().max_abs_imag(), 0.0);
        EXPECT_EQ(p.rotation_turn.head().vec().max_abs_imag(), 0.0);
        // Boost turn: z . y = cosh(beta/2) >= 1 and |Re y| = z . y.
        const Complex zy = dot(p.boost_turn.tail(), p.boost_turn.head());
        EXPECT_GE(zy.real(), 1.0 - 1e-12);
        EXPECT_LE(std::abs(zy.imag()), 1e-10 * std::abs(zy));
        EXPECT_NEAR(p.boost_turn.head().vec().real_part().hnorm(), zy.real(), 1e-10 * zy.real());
        const GroupElement product = multiply(element_of(p.boost_turn), element_of(p.rotation_turn));
        EXPECT_LE(max_abs_diff(product, s), 1e-9);
    }
}

TEST(Polar, RotationConjugationIsCovariant) {
    testing::Sampler rng(54);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement s = rng.element();
        const GroupElement r = rng.su2_element();
        const PolarFactors f = polar_factors(s);
        const PolarFactors g = polar_factors(multiply(multiply(r, s), inverse(r)));
        EXPECT_NEAR(g.beta, f.beta, 1e-8);
        EXPECT_NEAR(g.epsilon, f.epsilon, 1e-8);
        const ComplexRotation3 rot = adjoint_rotation(r);
        if (f.beta > 1e-6) EXPECT_LE(axis_gap(g.k_b, rot * f.k_b), 1e-7);
        if (f.epsilon > 1e-6) EXPECT_LE(axis_gap(g.k_r, rot * f.k_r), 1e-7);
    }
}

TEST(Polar, BoostConjugationChangesTheRapidity) {
    // H U -> B H U B^-1 is not of the form B H B^-1 . B U B^-1 with a
    // unitary middle factor, so beta moves.
    const GroupElement s = multiply(boost(0.6, kX), rotation(1.0, kZ));
    const GroupElement b = boost(1.1, kY);
    const PolarFactors f = polar_factors(multiply(multiply(b, s), inverse(b)));
    EXPECT_GT(std::abs(f.beta - 0.6), 1e-3);
}

}  // namespace
}  // namespace sl2c
