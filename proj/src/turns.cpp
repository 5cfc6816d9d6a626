#include "sl2c/turns.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sl2c/errors.hpp"

namespace sl2c {
namespace {

// Relative meet quality below which composition falls back to factorizing.
// Bounds the Hermitian norm of the meeting point by ~1e3, which keeps the
// products in the parallelogram step accurate to ~1e-10.
constexpr double kComposeMeetTol = 1e-6;

// Below this Hermitian norm the vector part is treated as exactly zero.
constexpr double kZeroVectorPart = 1e-150;

bool admissible(const CVec3& tail, const CVec3& a) {
    const double scale = std::max(1.0, tail.hnorm() * a.hnorm());
    return std::abs(dot(tail, a)) <= 1e-9 * scale;
}

double meet_quality(const CVec3& a, const CVec3& b) {
    const double denom = a.hnorm() * b.hnorm();
    if (denom == 0.0) return 0.0;
    const CVec3 w = wedge(a, b);
    return std::abs(dot(w, w)) / (denom * denom);
}

UnitCVec3 unit_from_formula(const CVec3& v) { return UnitCVec3::checked(v); }

// Head of the representative with tail x: a0 x + a ^ x.
CVec3 head_from_tail(const GroupElement& s, const CVec3& x) { return s.a0() * x + wedge(s.a(), x); }

// Tail of the representative with head y: a0 y - a ^ y.
CVec3 tail_from_head(const GroupElement& s, const CVec3& y) { return s.a0() * y - wedge(s.a(), y); }

// a and b parallel: the two carrier planes coincide and every unit vector
// orthogonal to a is a common point.
bool coincident(const CVec3& a, const CVec3& b) {
    return wedge(a, b).hnorm() <= 1e-12 * a.hnorm() * b.hnorm();
}

// One parallelogram step, assuming the two turns meet well enough. With
// `allow_coincident` a pair with parallel vector parts meets at the
// canonical tail of the first turn.
std::optional<Turn> parallelogram(const Turn& second, const Turn& first, bool allow_coincident = false) {
    const GroupElement s1 = element_of(first);
    const GroupElement s2 = element_of(second);
    const bool first_trivial = s1.a().hnorm() < kZeroVectorPart;
    const bool second_trivial = s2.a().hnorm() < kZeroVectorPart;

    CVec3 z;
    if (first_trivial) {
        z = second.tail();
    } else if (second_trivial) {
        z = first.head();
    } else if (auto m = meet(first, second, kComposeMeetTol)) {
        z = *m;
    } else if (allow_coincident && coincident(s1.a(), s2.a())) {
        z = canonical_tail(s1);
    } else {
        return std::nullopt;
    }
    return Turn(unit_from_formula(tail_from_head(s1, z)), unit_from_formula(head_from_tail(s2, z)));
}

bool meets_well(const GroupElement& s1, const GroupElement& s2, double tol, bool allow_coincident) {
    if (s1.a().hnorm() < kZeroVectorPart || s2.a().hnorm() < kZeroVectorPart) return true;
    if (allow_coincident && coincident(s1.a(), s2.a())) return true;
    return meet_quality(s1.a(), s2.a()) >= tol;
}

// Six signed coordinate axes, then the twelve face diagonals.
std::vector<CVec3> factor_axes() {
    std::vector<CVec3> axes;
    for (int k = 0; k < 3; ++k) {
        axes.push_back(CVec3::basis(k));
        axes.push_back(-CVec3::basis(k));
    }
    const double h = std::numbers::sqrt2 / 2;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (double si : {1.0, -1.0}) {
                for (double sj : {1.0, -1.0}) {
                    CVec3 w;
                    w[i] = si * h;
                    w[j] = sj * h;
                    axes.push_back(w);
                }
            }
        }
    }
    return axes;
}

}  // namespace

GroupElement element_of(const Turn& t) {
    return GroupElement::from_trusted(dot(t.tail(), t.head()), wedge(t.tail(), t.head()));
}

UnitCVec3 canonical_tail(const GroupElement& s) {
    const CVec3& a = s.a();
    if (a.hnorm() < kIsoTol) return UnitCVec3::checked(CVec3::basis(0));

    const CVec3 re = a.real_part();
    const CVec3 im = a.imag_part();
    const CVec3 normal = wedge(re, im);
    const double n = normal.hnorm();
    if (n > 1e-10 * (re.hnorm() * im.hnorm() + 1e-300)) return UnitCVec3::checked(normal / n);

    const CVec3& axis = re.hnorm() >= im.hnorm() ? re : im;
    return UnitCVec3::checked(orthonormal_complement(axis / axis.hnorm()).first);
}

Turn turn_of(const GroupElement& s) {
    const UnitCVec3 tail = canonical_tail(s);
    return Turn(tail, unit_from_formula(head_from_tail(s, tail)));
}

bool equivalent(const Turn& t1, const Turn& t2, double tol) {
    return max_abs_diff(element_of(t1), element_of(t2)) <= tol;
}

Turn slide(const Turn& t, const UnitCVec3& new_tail) {
    const GroupElement s = element_of(t);
    if (!admissible(new_tail, s.a())) {
        std::ostringstream msg;
        msg << "tail is not orthogonal to the turn's vector part: |x.a| = " << std::abs(dot(new_tail, s.a()));
        throw TailNotAdmissible(msg.str());
    }
    return Turn(new_tail, unit_from_formula(head_from_tail(s, new_tail)));
}

Turn slide_to_head(const Turn& t, const UnitCVec3& new_head) {
    const GroupElement s = element_of(t);
    if (!admissible(new_head, s.a())) {
        std::ostringstream msg;
        msg << "head is not orthogonal to the turn's vector part: |y.a| = " << std::abs(dot(new_head, s.a()));
        throw TailNotAdmissible(msg.str());
    }
    return Turn(unit_from_formula(tail_from_head(s, new_head)), new_head);
}

Turn invert(const Turn& t) { return Turn(t.head(), t.tail()); }

std::optional<UnitCVec3> meet(const Turn& t1, const Turn& t2, double meet_tol) {
    const CVec3 a = element_of(t1).a();
    const CVec3 b = element_of(t2).a();
    if (meet_quality(a, b) < meet_tol) return std::nullopt;

    UnitCVec3 z = normalize(wedge(a, b), 0.0);
    for (int k = 0; k < 3; ++k) {
        if (std::abs(z[k]) < 1e-6) continue;
        const double arg = std::arg(z[k]);
        if (!(arg > -std::numbers::pi / 2 && arg <= std::numbers::pi / 2)) z = -z;
        break;
    }
    return z;
}

std::string_view to_string(CompositionPath p) {
    return p == CompositionPath::Geometric ? "geometric" : "degenerate-factorized";
}

Composition compose(const Turn& second, const Turn& first) {
    if (auto direct = parallelogram(second, first)) return {*direct, CompositionPath::Geometric};

    // Non-meeting pair: split the second factor as S2 = (S2 R^-1) R with R a
    // quarter rotation, then apply the parallelogram law twice. When the
    // product is +-1 the last pair is (P, +-P^-1), whose carriers coincide.
    const GroupElement s1 = element_of(first);
    const GroupElement s2 = element_of(second);
    for (const CVec3& w : factor_axes()) {
        const GroupElement quarter = rotation(std::numbers::pi / 2, w);
        if (!meets_well(s1, quarter, 10 * kComposeMeetTol, false)) continue;
        const GroupElement rest = multiply(s2, inverse(quarter));

        const auto partial = parallelogram(turn_of(quarter), first);
        if (!partial || !meets_well(element_of(*partial), rest, 10 * kComposeMeetTol, true)) continue;
        if (auto full = parallelogram(turn_of(rest), *partial, true)) return {*full, CompositionPath::DegenerateFactorized};
    }
    throw DegenerateCompositionFailure("no quarter-rotation factorization made both turn pairs meet");
}

}  // namespace sl2c
