#include "sl2c/polar.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace sl2c {
namespace {

constexpr double kAxisFloor = 1e-300;

// Shared read-out for both routes. `cos_half`/`sin_vec` describe the unitary
// factor cos(e/2) - i sin(e/2) k_r.sigma and `sinh_vec` the boost
// cosh(b/2) + sinh(b/2) k_b.sigma.
PolarFactors assemble(const CVec3& sinh_vec, double cos_half, const CVec3& sin_vec) {
    PolarFactors f;
    const double sh = sinh_vec.hnorm();
    f.beta = 2.0 * std::asinh(sh);
    if (sh > kAxisFloor) f.k_b = sinh_vec / sh;

    const double s = sin_vec.hnorm();
    double half = std::atan2(s, cos_half);  // [0, pi]
    if (s > kAxisFloor) f.k_r = sin_vec / s;
    if (half >= std::numbers::pi) {
        // U = -1 exactly; keep epsilon in [0, 2 pi) and move the sign out.
        half = 0.0;
        f.sign = -1;
        f.k_r = CVec3::basis(0);
    }
    f.epsilon = 2.0 * half;
    return f;
}

}  // namespace

GroupElement reconstruct(const PolarFactors& f) {
    const GroupElement g = multiply(boost(f.beta, f.k_b), rotation(f.epsilon, f.k_r));
    return f.sign < 0 ? -g : g;
}

PolarTurns polar_turns(const GroupElement& s) {
    const Turn t = turn_of(s);  // canonical tail is always real
    const CVec3 re_y = t.head().vec().real_part();
    const UnitCVec3 z = UnitCVec3::checked(re_y / re_y.hnorm());

    const CVec3 re_a = s.a().real_part();
    const CVec3 im_a = s.a().imag_part();
    const bool commuting = wedge(re_a, im_a).hnorm() <= 1e-10 * (re_a.hnorm() * im_a.hnorm() + 1e-300);
    return {Turn(t.tail(), z), Turn(z, t.head()), commuting};
}

PolarFactors polar_factors(const GroupElement& s) {
    const PolarTurns p = polar_turns(s);
    const GroupElement rot = element_of(p.rotation_turn);
    const GroupElement bst = element_of(p.boost_turn);
    // rot = (cos, sin k_r), real; bst = (cosh, i sinh k_b).
    return assemble(bst.a().imag_part(), rot.a0().real(), rot.a().real_part());
}

PolarFactors matrix_polar_oracle(const GroupElement& s) {
    using Mat = Eigen::Matrix2cd;
    const Mat2C m2 = to_matrix(s);
    Mat m;
    m << m2(0, 0), m2(0, 1), m2(1, 0), m2(1, 1);

    const Mat mm = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Mat> eig(mm);
    const Eigen::Vector2d root = eig.eigenvalues().cwiseSqrt();
    const Mat v = eig.eigenvectors();
    const Mat h = v * root.cast<Complex>().asDiagonal() * v.adjoint();
    const Mat h_inv = v * root.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
    const Mat u = h_inv * m;

    auto pauli_coeff = [](const Mat& x, int k) {
        const Mat2C p = Mat2C::pauli(k);
        Mat pm;
        pm << p(0, 0), p(0, 1), p(1, 0), p(1, 1);
        return 0.5 * (pm * x).trace();
    };

    // H = cosh + sinh k_b.sigma; U = cos - i sin k_r.sigma.
    CVec3 sinh_vec;
    CVec3 sin_vec;
    for (int k = 1; k <= 3; ++k) {
        sinh_vec[k - 1] = pauli_coeff(h, k).real();
        sin_vec[k - 1] = (Complex(0.0, 1.0) * pauli_coeff(u, k)).real();
    }
    return assemble(sinh_vec, 0.5 * u.trace().real(), sin_vec);
}

}  // namespace sl2c
