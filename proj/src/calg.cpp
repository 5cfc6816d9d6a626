#include "sl2c/calg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sl2c/errors.hpp"

namespace sl2c {

CVec3 CVec3::basis(int k) {
    CVec3 e;
    e[k] = 1.0;
    return e;
}

CVec3 CVec3::real_part() const {
    return {c[0].real(), c[1].real(), c[2].real()};
}

CVec3 CVec3::imag_part() const {
    return {c[0].imag(), c[1].imag(), c[2].imag()};
}

double CVec3::hnorm() const {
    return std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
}

double CVec3::max_abs_imag() const {
    return std::max({std::abs(c[0].imag()), std::abs(c[1].imag()), std::abs(c[2].imag())});
}

bool CVec3::is_finite() const {
    return std::all_of(c.begin(), c.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

CVec3& CVec3::operator+=(const CVec3& o) {
    for (int k = 0; k < 3; ++k) (*this)[k] += o[k];
    return *this;
}

CVec3& CVec3::operator-=(const CVec3& o) {
    for (int k = 0; k < 3; ++k) (*this)[k] -= o[k];
    return *this;
}

CVec3& CVec3::operator*=(Complex s) {
    for (auto& z : c) z *= s;
    return *this;
}

CVec3 operator+(CVec3 a, const CVec3& b) { return a += b; }
CVec3 operator-(CVec3 a, const CVec3& b) { return a -= b; }
CVec3 operator-(const CVec3& a) { return {-a[0], -a[1], -a[2]}; }
CVec3 operator*(Complex s, CVec3 v) { return v *= s; }
CVec3 operator*(CVec3 v, Complex s) { return v *= s; }
CVec3 operator/(CVec3 v, Complex s) { return v *= (1.0 / s); }

Complex dot(const CVec3& u, const CVec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

CVec3 wedge(const CVec3& u, const CVec3& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

double max_abs_diff(const CVec3& u, const CVec3& v) {
    double m = 0.0;
    for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(u[k] - v[k]));
    return m;
}

UnitCVec3 UnitCVec3::checked(const CVec3& v) {
    const double scale = std::max(1.0, v.hnorm() * v.hnorm());
    const double err = std::abs(dot(v, v) - 1.0);
    if (!v.is_finite() || err > kUnitTol * scale) {
        std::ostringstream msg;
        msg << "vector is not a complex unit vector: |v.v - 1| = " << err;
        throw NotUnitVector(msg.str());
    }
    return UnitCVec3(v);
}

UnitCVec3 normalize(const CVec3& z, double iso_tol) {
    const Complex zz = dot(z, z);
    if (!(std::abs(zz) >= iso_tol)) {
        std::ostringstream msg;
        msg << "cannot normalize isotropic vector: |z.z| = " << std::abs(zz);
        throw IsotropicVector(msg.str());
    }
    return UnitCVec3(z / std::sqrt(zz));
}

std::pair<CVec3, CVec3> orthonormal_complement(const CVec3& v) {
    if (v.max_abs_imag() > 1e-12) throw NonRealAxis("orthonormal_complement needs a real vector");
    const double len = v.hnorm();
    if (len < kIsoTol) throw ZeroVector("orthonormal_complement of a zero vector");

    std::array<double, 3> u{v[0].real() / len, v[1].real() / len, v[2].real() / len};
    int k = 0;
    for (int j = 1; j < 3; ++j) {
        if (std::abs(u[static_cast<std::size_t>(j)]) < std::abs(u[static_cast<std::size_t>(k)])) k = j;
    }

    std::array<double, 3> p{};
    p[static_cast<std::size_t>(k)] = 1.0;
    const double along = u[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < 3; ++j) p[j] -= along * u[j];
    const double pn = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (auto& x : p) x /= pn;

    const CVec3 uc = CVec3::real(u[0], u[1], u[2]);
    const CVec3 pc = CVec3::real(p[0], p[1], p[2]);
    return {pc, wedge(uc, pc)};
}

}  // namespace sl2c
