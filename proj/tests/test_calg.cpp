#include <gtest/gtest.h>

#include <cmath>

#include "sl2c/calg.hpp"
#include "sl2c/errors.hpp"
#include "support/sampling.hpp"

namespace sl2c {
namespace {

constexpr Complex kI{0.0, 1.0};

TEST(Dot, IsBilinearNotHermitian) {
    EXPECT_EQ(dot(CVec3::basis(0), CVec3::basis(0)), Complex(1.0));
    EXPECT_EQ(dot(CVec3(1.0, kI, 0.0), CVec3(1.0, kI, 0.0)), Complex(0.0));
    // (1+i)(1-i) + 0*2 + 1*i = 2 + i
    EXPECT_EQ(dot(CVec3(1.0 + kI, 0.0, 1.0), CVec3(1.0 - kI, 2.0, kI)), Complex(2.0, 1.0));
}

TEST(Wedge, BasisAndHandExpansion) {
    EXPECT_EQ(max_abs_diff(wedge(CVec3::basis(0), CVec3::basis(1)), CVec3::basis(2)), 0.0);
    const CVec3 u(1.0 + kI, 2.0, -kI);
    EXPECT_EQ(max_abs_diff(wedge(u, u), CVec3()), 0.0);
    // (1, i, 0) ^ (0, 1, i) = (i*i - 0, 0 - i, 1 - 0)
    EXPECT_EQ(max_abs_diff(wedge(CVec3(1.0, kI, 0.0), CVec3(0.0, 1.0, kI)), CVec3(-1.0, -kI, 1.0)), 0.0);
}

TEST(Normalize, RealAndPrincipalBranch) {
    EXPECT_LT(max_abs_diff(normalize(CVec3(0.0, 0.0, 2.0)).vec(), CVec3::basis(2)), 1e-15);
    // sqrt(-4) = 2i on the principal branch, so (2i, 0, 0) / 2i = e1.
    EXPECT_LT(max_abs_diff(normalize(CVec3(2.0 * kI, 0.0, 0.0)).vec(), CVec3::basis(0)), 1e-15);
    EXPECT_THROW(normalize(CVec3(1.0, kI, 0.0)), IsotropicVector);
    EXPECT_THROW(normalize(CVec3()), IsotropicVector);
}

TEST(Normalize, UnitAndPositiveScaleProperties) {
    testing::Sampler rng(11);
    for (int i = 0; i < 2000; ++i) {
        const CVec3 z = rng.complex_vector();
        const UnitCVec3 u = normalize(z);
        EXPECT_LE(std::abs(dot(u, u) - 1.0), 1e-10);
        const double r = rng.uniform(0.01, 100.0);
        EXPECT_LE(max_abs_diff(normalize(r * z).vec(), u.vec()), 1e-12);
    }
}

TEST(UnitCVec3, CheckedRejectsNonUnit) {
    EXPECT_NO_THROW(UnitCVec3::checked(CVec3(std::cosh(0.3), kI * std::sinh(0.3), 0.0)));
    EXPECT_THROW(UnitCVec3::checked(CVec3(1.0, 1.0, 0.0)), NotUnitVector);
}

TEST(OrthonormalComplement, StandardFrames) {
    auto [p, q] = orthonormal_complement(CVec3::basis(2));
    EXPECT_EQ(max_abs_diff(p, CVec3::basis(0)), 0.0);
    EXPECT_EQ(max_abs_diff(q, CVec3::basis(1)), 0.0);

    std::tie(p, q) = orthonormal_complement(CVec3::basis(0));
    EXPECT_EQ(max_abs_diff(p, CVec3::basis(1)), 0.0);
    EXPECT_EQ(max_abs_diff(q, CVec3::basis(2)), 0.0);

    const double h = std::sqrt(0.5);
    std::tie(p, q) = orthonormal_complement(CVec3::real(h, h, 0.0));
    EXPECT_LT(max_abs_diff(p, CVec3::basis(2)), 1e-15);
    EXPECT_LT(max_abs_diff(q, CVec3::real(h, -h, 0.0)), 1e-15);
}

TEST(OrthonormalComplement, RandomFramesAreRightHanded) {
    testing::Sampler rng(12);
    for (int i = 0; i < 1000; ++i) {
        const CVec3 v = rng.real_unit();
        const auto [p, q] = orthonormal_complement(3.0 * v);
        EXPECT_NEAR(dot(p, p).real(), 1.0, 1e-14);
        EXPECT_NEAR(dot(q, q).real(), 1.0, 1e-14);
        EXPECT_LT(std::abs(dot(p, q)), 1e-14);
        EXPECT_LT(std::abs(dot(p, v)), 1e-14);
        EXPECT_LT(max_abs_diff(wedge(p, q), v), 1e-14);
    }
}

TEST(OrthonormalComplement, Errors) {
    EXPECT_THROW(orthonormal_complement(CVec3()), ZeroVector);
    EXPECT_THROW(orthonormal_complement(CVec3(1.0, kI, 0.0)), NonRealAxis);
}

TEST(Algebra, SymmetryAntisymmetryAndOrthogonality) {
    testing::Sampler rng(13);
    for (int i = 0; i < 2000; ++i) {
        const CVec3 u = rng.complex_vector();
        const CVec3 v = rng.complex_vector();
        EXPECT_EQ(dot(u, v), dot(v, u));
        EXPECT_EQ(max_abs_diff(wedge(u, v), -wedge(v, u)), 0.0);
        EXPECT_LE(std::abs(dot(u, wedge(u, v))), 1e-12);
    }
}

}  // namespace
}  // namespace sl2c
