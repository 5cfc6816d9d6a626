#pragma once

// SL(2,C) in Pauli-component form S(a0, a) = a0 - i a.sigma with
// a0^2 + a.a = 1, together with its defining 2x2 representation, the
// adjoint map onto SO(3,C), the congruence map onto SO(3,1), and the
// adjoint-orbit classification of Lie algebra elements z.sigma.

#include <array>
#include <string_view>

#include "sl2c/calg.hpp"

namespace sl2c {

/// Tolerance on |a0^2 + a.a - 1| for a group element.
inline constexpr double kConstraintTol = 1e-10;

class GroupElement {
public:
    /// Identity element.
    GroupElement() : a0_(1.0) {}

    /// Checked construction; throws ConstraintViolation if the unit
    /// determinant condition fails by more than kConstraintTol.
    static GroupElement make(Complex a0, const CVec3& a);

    /// For components produced by an exact algebraic identity (turn
    /// invariants, matrix products). The constraint is not re-checked.
    static GroupElement from_trusted(Complex a0, const CVec3& a) { return GroupElement(a0, a); }

    const Complex& a0() const noexcept { return a0_; }
    const CVec3& a() const noexcept { return a_; }

    /// a0^2 + a.a, which is det of the 2x2 matrix.
    Complex determinant() const { return a0_ * a0_ + dot(a_, a_); }

    GroupElement operator-() const { return GroupElement(-a0_, -a_); }

private:
    GroupElement(Complex a0, const CVec3& a) : a0_(a0), a_(a) {}
    Complex a0_;
    CVec3 a_;
};

/// Largest componentwise deviation over (a0, a1, a2, a3).
double max_abs_diff(const GroupElement& s, const GroupElement& t);

/// 2x2 complex matrix, row-major [[m00, m01], [m10, m11]].
struct Mat2C {
    std::array<Complex, 4> m{};

    Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const Complex& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

    static Mat2C identity();
    /// Pauli matrix sigma_k for k = 1, 2, 3; k = 0 gives the identity.
    static Mat2C pauli(int k);

    Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
    Complex trace() const { return m[0] + m[3]; }
    Mat2C adjoint() const;
};

Mat2C operator*(const Mat2C& x, const Mat2C& y);
Mat2C operator*(Complex s, Mat2C x);
Mat2C operator+(Mat2C x, const Mat2C& y);
double max_abs_diff(const Mat2C& x, const Mat2C& y);

/// 3x3 complex matrix acting on CVec3; for adjoint images R^T R = 1, det R = 1.
struct ComplexRotation3 {
    std::array<std::array<Complex, 3>, 3> r{};

    static ComplexRotation3 identity();
    /// Rows are u, v, w (so the matrix maps u to e1, v to e2, w to e3
    /// whenever the triad is bilinear-orthonormal).
    static ComplexRotation3 from_rows(const CVec3& u, const CVec3& v, const CVec3& w);

    Complex& operator()(int i, int j) { return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Complex& operator()(int i, int j) const { return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    CVec3 operator*(const CVec3& z) const;
    ComplexRotation3 transpose() const;
    Complex det() const;
};

ComplexRotation3 operator*(const ComplexRotation3& x, const ComplexRotation3& y);
double max_abs_diff(const ComplexRotation3& x, const ComplexRotation3& y);

/// Real 4x4 matrix, index 0 is time. For Lorentz images L^T eta L = eta.
struct LorentzMat4 {
    std::array<std::array<double, 4>, 4> l{};

    static LorentzMat4 identity();

    double& operator()(int i, int j) { return l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    double operator()(int i, int j) const { return l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    std::array<double, 4> operator*(const std::array<double, 4>& x) const;
    double det() const;
};

LorentzMat4 operator*(const LorentzMat4& x, const LorentzMat4& y);
double max_abs_diff(const LorentzMat4& x, const LorentzMat4& y);

/// Largest entrywise |L^T eta L - eta| with eta = diag(+1, -1, -1, -1).
double minkowski_defect(const LorentzMat4& l);

Mat2C to_matrix(const GroupElement& s);
/// a0 = tr(M)/2, a_k = (i/2) tr(sigma_k M). Throws NotUnimodular if
/// |det M - 1| exceeds kConstraintTol.
GroupElement from_matrix(const Mat2C& m);

/// Group product through the 2x2 matrix product. `second` acts after
/// `first`, i.e. the result is second * first.
GroupElement multiply(const GroupElement& second, const GroupElement& first);

GroupElement inverse(const GroupElement& s);

/// cos(theta/2) - i sin(theta/2) n.sigma. Throws NonRealAxis or
/// NotUnitVector for a bad axis.
GroupElement rotation(double theta, const CVec3& axis);

/// cosh(beta/2) + sinh(beta/2) n.sigma, i.e. components (cosh, i n sinh).
GroupElement boost(double beta, const CVec3& axis);

/// Adjoint action: S (z.sigma) S^-1 = (R z).sigma.
ComplexRotation3 adjoint_rotation(const GroupElement& s);

/// Congruence action on Hermitian matrices: S (x0 + x.sigma) S^dagger.
LorentzMat4 lorentz_matrix(const GroupElement& s);

/// One of the two preimages +-S of a complex rotation under adjoint_rotation.
GroupElement lift_rotation(const ComplexRotation3& r);

enum class OrbitType { TypeI, TypeII, Zero };

std::string_view to_string(OrbitType t);

struct OrbitClass {
    OrbitType type = OrbitType::Zero;
    /// Only meaningful for TypeI: z.z = r^2 exp(2 i phi), r > 0, phi in [0, pi).
    double r = 0.0;
    double phi = 0.0;
};

OrbitClass classify_orbit(const CVec3& z);

struct CanonicalReduction {
    GroupElement element;  ///< adjoint_rotation(element) * z == canonical
    CVec3 canonical;       ///< (r e^{i phi}, 0, 0) or (1, i, 0)
    OrbitClass orbit;
};

/// Brings z to its canonical orbit representative with the adjoint action.
/// Throws ZeroVector for z = 0 and NumericalDegeneracy if no admissible
/// triad completion is found.
CanonicalReduction reduce_to_canonical(const CVec3& z);

}  // namespace sl2c
