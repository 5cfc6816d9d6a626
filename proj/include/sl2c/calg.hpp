#pragma once

// Complex 3-vector algebra under the symmetric bilinear product.
//
// Nothing here conjugates: dot(u, v) = u1 v1 + u2 v2 + u3 v3 for complex
// entries, which is the invariant form of SO(3,C). Hermitian norms are
// provided separately for tolerances and conditioning checks only.

#include <array>
#include <complex>
#include <utility>

namespace sl2c {

using Complex = std::complex<double>;

/// Tolerance on |z.z| below which a vector counts as isotropic (null).
inline constexpr double kIsoTol = 1e-12;

/// Tolerance on |v.v - 1| for a complex unit vector.
inline constexpr double kUnitTol = 1e-10;

struct CVec3 {
    std::array<Complex, 3> c{};

    constexpr CVec3() = default;
    constexpr CVec3(Complex z1, Complex z2, Complex z3) : c{z1, z2, z3} {}

    static CVec3 real(double x, double y, double z) { return {x, y, z}; }
    static CVec3 basis(int k);

    Complex& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
    const Complex& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

    CVec3 real_part() const;
    CVec3 imag_part() const;

    /// Hermitian (conjugating) Euclidean norm; never used as the algebraic form.
    double hnorm() const;
    double max_abs_imag() const;
    bool is_finite() const;

    CVec3& operator+=(const CVec3& o);
    CVec3& operator-=(const CVec3& o);
    CVec3& operator*=(Complex s);
};

CVec3 operator+(CVec3 a, const CVec3& b);
CVec3 operator-(CVec3 a, const CVec3& b);
CVec3 operator-(const CVec3& a);
CVec3 operator*(Complex s, CVec3 v);
CVec3 operator*(CVec3 v, Complex s);
CVec3 operator/(CVec3 v, Complex s);

/// Symmetric bilinear product, sum of u_k v_k.
Complex dot(const CVec3& u, const CVec3& v);

/// Componentwise cross product with complex entries.
CVec3 wedge(const CVec3& u, const CVec3& v);

/// Largest componentwise |u_k - v_k|.
double max_abs_diff(const CVec3& u, const CVec3& v);

/// A complex vector with v.v = 1. Only obtainable through normalize() or a
/// checked wrap, so holding one is proof of the invariant.
class UnitCVec3 {
public:
    /// Accepts v if |v.v - 1| <= kUnitTol * max(1, |v|^2); throws NotUnitVector.
    static UnitCVec3 checked(const CVec3& v);

    const CVec3& vec() const noexcept { return v_; }
    operator const CVec3&() const noexcept { return v_; }
    const Complex& operator[](int k) const { return v_[k]; }

    UnitCVec3 operator-() const { return UnitCVec3(-v_); }

private:
    explicit UnitCVec3(const CVec3& v) : v_(v) {}
    friend UnitCVec3 normalize(const CVec3& z, double iso_tol);
    CVec3 v_;
};

/// z / sqrt(z.z) with the principal branch of the complex square root.
/// Throws IsotropicVector when |z.z| < iso_tol.
UnitCVec3 normalize(const CVec3& z, double iso_tol = kIsoTol);

/// Two real unit vectors (p, q) completing the real unit direction of v to a
/// right-handed orthonormal frame with p ^ q parallel to v. p comes from
/// Gram-Schmidt on the standard basis vector with the smallest |v_k| (ties
/// go to the lowest index). Throws NonRealAxis or ZeroVector.
std::pair<CVec3, CVec3> orthonormal_complement(const CVec3& v);

}  // namespace sl2c
