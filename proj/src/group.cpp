#include "sl2c/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sl2c/errors.hpp"

namespace sl2c {
namespace {

constexpr Complex kI{0.0, 1.0};

// Pauli expansion without the unimodularity check.
GroupElement components_of(const Mat2C& m) {
    CVec3 a;
    for (int k = 1; k <= 3; ++k) a[k - 1] = 0.5 * kI * (Mat2C::pauli(k) * m).trace();
    return GroupElement::from_trusted(0.5 * m.trace(), a);
}

CVec3 real_unit_axis(const CVec3& n) {
    if (n.max_abs_imag() > 1e-12) throw NonRealAxis("axis must be a real vector");
    const CVec3 r = n.real_part();
    if (std::abs(r.hnorm() - 1.0) > kUnitTol) throw NotUnitVector("axis must have unit length");
    return r;
}

}  // namespace

GroupElement GroupElement::make(Complex a0, const CVec3& a) {
    const double err = std::abs(a0 * a0 + dot(a, a) - 1.0);
    if (!(err <= kConstraintTol) || !a.is_finite()) {
        std::ostringstream msg;
        msg << "a0^2 + a.a deviates from 1 by " << err;
        throw ConstraintViolation(msg.str());
    }
    return GroupElement(a0, a);
}

double max_abs_diff(const GroupElement& s, const GroupElement& t) {
    return std::max(std::abs(s.a0() - t.a0()), max_abs_diff(s.a(), t.a()));
}

// ---------------------------------------------------------------------------
// Matrix types

Mat2C Mat2C::identity() { return Mat2C{{1.0, 0.0, 0.0, 1.0}}; }

Mat2C Mat2C::pauli(int k) {
    switch (k) {
        case 1: return Mat2C{{0.0, 1.0, 1.0, 0.0}};
        case 2: return Mat2C{{0.0, -kI, kI, 0.0}};
        case 3: return Mat2C{{1.0, 0.0, 0.0, -1.0}};
        default: return identity();
    }
}

Mat2C Mat2C::adjoint() const {
    return Mat2C{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Mat2C operator*(const Mat2C& x, const Mat2C& y) {
    Mat2C z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return z;
}

Mat2C operator*(Complex s, Mat2C x) {
    for (auto& v : x.m) v *= s;
    return x;
}

Mat2C operator+(Mat2C x, const Mat2C& y) {
    for (std::size_t k = 0; k < 4; ++k) x.m[k] += y.m[k];
    return x;
}

double max_abs_diff(const Mat2C& x, const Mat2C& y) {
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(x.m[k] - y.m[k]));
    return d;
}

ComplexRotation3 ComplexRotation3::identity() {
    ComplexRotation3 r;
    for (int k = 0; k < 3; ++k) r(k, k) = 1.0;
    return r;
}

ComplexRotation3 ComplexRotation3::from_rows(const CVec3& u, const CVec3& v, const CVec3& w) {
    ComplexRotation3 r;
    for (int j = 0; j < 3; ++j) {
        r(0, j) = u[j];
        r(1, j) = v[j];
        r(2, j) = w[j];
    }
    return r;
}

CVec3 ComplexRotation3::operator*(const CVec3& z) const {
    CVec3 out;
    for (int i = 0; i < 3; ++i) out[i] = (*this)(i, 0) * z[0] + (*this)(i, 1) * z[1] + (*this)(i, 2) * z[2];
    return out;
}

ComplexRotation3 ComplexRotation3::transpose() const {
    ComplexRotation3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
}

Complex ComplexRotation3::det() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

ComplexRotation3 operator*(const ComplexRotation3& x, const ComplexRotation3& y) {
    ComplexRotation3 z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) z(i, j) += x(i, k) * y(k, j);
    return z;
}

double max_abs_diff(const ComplexRotation3& x, const ComplexRotation3& y) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
    return d;
}

LorentzMat4 LorentzMat4::identity() {
    LorentzMat4 l;
    for (int k = 0; k < 4; ++k) l(k, k) = 1.0;
    return l;
}

std::array<double, 4> LorentzMat4::operator*(const std::array<double, 4>& x) const {
    std::array<double, 4> y{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

double LorentzMat4::det() const {
    // Laplace expansion along the first row.
    auto minor3 = [this](int skip_col) {
        std::array<std::array<double, 3>, 3> m{};
        for (int i = 1; i < 4; ++i) {
            int c = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == skip_col) continue;
                m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c++)] = (*this)(i, j);
            }
        }
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    double d = 0.0;
    for (int j = 0; j < 4; ++j) d += ((j % 2 == 0) ? 1.0 : -1.0) * (*this)(0, j) * minor3(j);
    return d;
}

LorentzMat4 operator*(const LorentzMat4& x, const LorentzMat4& y) {
    LorentzMat4 z;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) z(i, j) += x(i, k) * y(k, j);
    return z;
}

double max_abs_diff(const LorentzMat4& x, const LorentzMat4& y) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
    return d;
}

double minkowski_defect(const LorentzMat4& l) {
    constexpr std::array<double, 4> eta{1.0, -1.0, -1.0, -1.0};
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += l(k, i) * eta[static_cast<std::size_t>(k)] * l(k, j);
            const double target = (i == j) ? eta[static_cast<std::size_t>(i)] : 0.0;
            d = std::max(d, std::abs(s - target));
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Group operations

Mat2C to_matrix(const GroupElement& s) {
    const Complex a0 = s.a0();
    const CVec3& a = s.a();
    return Mat2C{{a0 - kI * a[2], -kI * a[0] - a[1], -kI * a[0] + a[1], a0 + kI * a[2]}};
}

GroupElement from_matrix(const Mat2C& m) {
    const double err = std::abs(m.det() - 1.0);
    if (!(err <= kConstraintTol)) {
        std::ostringstream msg;
        msg << "matrix is not unimodular: |det - 1| = " << err;
        throw NotUnimodular(msg.str());
    }
    return components_of(m);
}

GroupElement multiply(const GroupElement& second, const GroupElement& first) {
    return components_of(to_matrix(second) * to_matrix(first));
}

GroupElement inverse(const GroupElement& s) { return GroupElement::from_trusted(s.a0(), -s.a()); }

GroupElement rotation(double theta, const CVec3& axis) {
    const CVec3 n = real_unit_axis(axis);
    return GroupElement::from_trusted(std::cos(theta / 2), std::sin(theta / 2) * n);
}

GroupElement boost(double beta, const CVec3& axis) {
    const CVec3 n = real_unit_axis(axis);
    return GroupElement::from_trusted(std::cosh(beta / 2), kI * std::sinh(beta / 2) * n);
}

ComplexRotation3 adjoint_rotation(const GroupElement& s) {
    const Mat2C m = to_matrix(s);
    const Mat2C m_inv = to_matrix(inverse(s));
    ComplexRotation3 r;
    for (int k = 1; k <= 3; ++k) {
        const Mat2C image = m * Mat2C::pauli(k) * m_inv;
        for (int j = 1; j <= 3; ++j) r(j - 1, k - 1) = 0.5 * (Mat2C::pauli(j) * image).trace();
    }
    return r;
}

LorentzMat4 lorentz_matrix(const GroupElement& s) {
    const Mat2C m = to_matrix(s);
    const Mat2C m_dag = m.adjoint();
    LorentzMat4 l;
    for (int mu = 0; mu < 4; ++mu) {
        const Mat2C image = m * Mat2C::pauli(mu) * m_dag;
        for (int nu = 0; nu < 4; ++nu) l(nu, mu) = 0.5 * (Mat2C::pauli(nu) * image).trace().real();
    }
    return l;
}

GroupElement lift_rotation(const ComplexRotation3& r) {
    // R = (a0^2 - a.a) 1 + 2 a a^T + 2 a0 [a]_x. Recover from the largest of
    // the four squared components, then the rest from off-diagonal sums.
    const Complex tr = r(0, 0) + r(1, 1) + r(2, 2);
    const std::array<Complex, 4> quad{1.0 + tr, 1.0 + 2.0 * r(0, 0) - tr, 1.0 + 2.0 * r(1, 1) - tr,
                                      1.0 + 2.0 * r(2, 2) - tr};
    std::size_t best = 0;
    for (std::size_t k = 1; k < 4; ++k)
        if (std::abs(quad[k]) > std::abs(quad[best])) best = k;

    const Complex v = 0.5 * std::sqrt(quad[best]);
    const Complex inv4v = 1.0 / (4.0 * v);
    Complex a0;
    CVec3 a;
    // 4 a0 a_k from the antisymmetric part, 4 a_j a_k from the symmetric part.
    const std::array<Complex, 3> anti{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    if (best == 0) {
        a0 = v;
        for (int k = 0; k < 3; ++k) a[k] = anti[static_cast<std::size_t>(k)] * inv4v;
    } else {
        const int k = static_cast<int>(best) - 1;
        a[k] = v;
        a0 = anti[static_cast<std::size_t>(k)] * inv4v;
        for (int j = 0; j < 3; ++j)
            if (j != k) a[j] = (r(j, k) + r(k, j)) * inv4v;
    }
    return GroupElement::from_trusted(a0, a);
}

std::string_view to_string(OrbitType t) {
    switch (t) {
        case OrbitType::TypeI: return "TypeI";
        case OrbitType::TypeII: return "TypeII";
        case OrbitType::Zero: return "Zero";
    }
    return "Zero";
}

OrbitClass classify_orbit(const CVec3& z) {
    const Complex zz = dot(z, z);
    OrbitClass out;
    // z.z of a null vector only vanishes to ~eps |z|^2 in floating point.
    const double n = z.hnorm();
    if (std::abs(zz) >= kIsoTol * std::max(1.0, n * n)) {
        out.type = OrbitType::TypeI;
        out.r = std::sqrt(std::abs(zz));
        out.phi = 0.5 * std::arg(zz);
        if (out.phi < 0.0) out.phi += std::numbers::pi;
    } else if (n >= kIsoTol) {
        out.type = OrbitType::TypeII;
    }
    return out;
}

namespace {

CanonicalReduction reduce_type_one(const CVec3& z, const OrbitClass& orbit) {
    const Complex s = std::sqrt(dot(z, z));
    const UnitCVec3 zhat = normalize(z);

    // Seed order: smallest |zhat_k| first, ties to the higher index, so an
    // already canonical (r, 0, 0) seeds with e3 and reduces with R = 1.
    std::array<int, 3> order{2, 1, 0};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return std::abs(zhat[i]) < std::abs(zhat[j]); });

    for (int k : order) {
        const CVec3 seed = CVec3::basis(k) - zhat[k] * zhat.vec();
        if (std::abs(dot(seed, seed)) < 1e-8) continue;
        const UnitCVec3 w = normalize(seed);
        const CVec3 v = wedge(w, zhat);
        ComplexRotation3 r = ComplexRotation3::from_rows(zhat, v, w);

        const Complex target = orbit.r * std::polar(1.0, orbit.phi);
        if (std::abs(s - target) > std::abs(s + target)) {
            // rotation by pi about e3 sends e1 to -e1
            for (int j = 0; j < 3; ++j) {
                r(0, j) = -r(0, j);
                r(1, j) = -r(1, j);
            }
        }
        return {lift_rotation(r), CVec3(target, 0.0, 0.0), orbit};
    }
    throw NumericalDegeneracy("triad completion met an isotropic seed for every basis vector");
}

CanonicalReduction reduce_type_two(const CVec3& z, const OrbitClass& orbit) {
    // Re z and Im z are orthogonal with equal length rho. Rotate them onto
    // e1, e2, then scale (1, i, 0) by exp(beta) with the boost along e3.
    const CVec3 re = z.real_part();
    const CVec3 im = z.imag_part();
    const double rho = re.hnorm();
    if (rho < kIsoTol) throw NumericalDegeneracy("isotropic vector with vanishing real part");

    const CVec3 e1 = re / rho;
    const CVec3 im_perp = im - dot(im, e1) * e1;
    const double im_len = im_perp.hnorm();
    if (im_len < kIsoTol) throw NumericalDegeneracy("isotropic vector with parallel real and imaginary parts");
    const CVec3 e2 = im_perp / im_len;
    const CVec3 e3 = wedge(e1, e2);

    const GroupElement align = lift_rotation(ComplexRotation3::from_rows(e1, e2, e3));
    const GroupElement scale = boost(-std::log(std::sqrt(rho * im_len)), CVec3::basis(2));
    return {multiply(scale, align), CVec3(1.0, kI, 0.0), orbit};
}

}  // namespace

CanonicalReduction reduce_to_canonical(const CVec3& z) {
    const OrbitClass orbit = classify_orbit(z);
    switch (orbit.type) {
        case OrbitType::TypeI: return reduce_type_one(z, orbit);
        case OrbitType::TypeII: return reduce_type_two(z, orbit);
        case OrbitType::Zero: break;
    }
    throw ZeroVector("cannot reduce the zero vector to a canonical form");
}

}  // namespace sl2c
