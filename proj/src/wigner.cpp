#include "sl2c/wigner.hpp"

#include <cmath>

#include "sl2c/polar.hpp"

namespace sl2c {
namespace {

constexpr double kCollinearTol = 1e-9;

double angle_between(const CVec3& u, const CVec3& v) {
    const CVec3 ur = u.real_part();
    const CVec3 vr = v.real_part();
    return std::atan2(wedge(ur, vr).hnorm(), dot(ur, vr).real());
}

}  // namespace

WignerResult compose_boosts(const BoostSpec& first, const BoostSpec& second) {
    const GroupElement bm = boost(first.beta, first.n);
    const GroupElement bn = boost(second.beta, second.n);
    const Turn tm = turn_of(bm);
    const Turn tn = turn_of(bn);

    WignerResult out;
    const Composition c = compose(tn, tm);
    out.product = element_of(c.turn);
    out.path = c.path;
    out.a0_imag = out.product.a0().imag();
    if (auto z = meet(tm, tn)) out.meeting_point = *z;

    const CVec3 m = first.n.real_part();
    const CVec3 n = second.n.real_part();
    out.collinear = wedge(m, n).hnorm() < kCollinearTol;
    if (out.collinear) {
        const double signed_beta = second.beta + dot(m, n).real() * first.beta;
        out.beta_res = std::abs(signed_beta);
        out.k_b = signed_beta >= 0.0 ? n : -n;
        out.phi = signed_beta >= 0.0 ? 0.0 : angle_between(out.k_b, n);
        return out;
    }

    const PolarFactors f = polar_factors(out.product);
    out.epsilon = f.epsilon;
    out.k_r = f.k_r;
    out.beta_res = f.beta;
    out.k_b = f.k_b;
    out.phi = angle_between(f.k_b, n);
    return out;
}

double wigner_angle(double beta_m, double beta_n, double theta) {
    const double kappa = 1.0 / (std::tanh(beta_n / 2) * std::tanh(beta_m / 2));
    return 2.0 * std::atan2(std::sin(theta), kappa + std::cos(theta));
}

double resultant_rapidity(double beta_m, double beta_n, double theta) {
    const double c = std::cosh(beta_m) * std::cosh(beta_n) + std::sinh(beta_m) * std::sinh(beta_n) * std::cos(theta);
    return std::acosh(std::max(c, 1.0));
}

double boost_deflection(double beta_m, double beta_n, double theta) {
    const double num = std::sin(theta) * std::sinh(beta_m);
    const double den = std::cosh(beta_m) * std::sinh(beta_n) + std::cos(theta) * std::cosh(beta_n) * std::sinh(beta_m);
    return std::atan2(num, den);
}

}  // namespace sl2c
