#include "sl2c/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sl2c/polar.hpp"
#include "sl2c/turns.hpp"
#include "sl2c/wigner.hpp"

namespace sl2c::cli {
namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, std::string_view what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError(std::string(what) + " must be a [re, im] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) throw InputError(std::string("missing numeric field '") + key + "'");
    const double v = j[key].get<double>();
    if (!std::isfinite(v)) throw InputError(std::string("field '") + key + "' must be finite");
    return v;
}

CVec3 real_vec_from_json(const Json& j, const char* key) {
    if (!j.is_array() || j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); }))
        throw InputError(std::string("field '") + key + "' must be an array of three numbers");
    return CVec3::real(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Json real_vec_to_json(const CVec3& v) { return Json::array({v[0].real(), v[1].real(), v[2].real()}); }

Json tolerances() {
    return Json{{"constraint", kConstraintTol}, {"unit", kUnitTol}, {"isotropic", kIsoTol}, {"meet", kMeetTol}};
}

Json envelope(std::string_view command, const Json& input, Json output, std::string_view path) {
    Json e;
    e["command"] = command;
    e["input"] = input;
    e["output"] = std::move(output);
    e["path"] = path;
    e["tolerances"] = tolerances();
    return e;
}

Json turn_to_json(const Turn& t) { return Json{{"tail", vec_to_json(t.tail())}, {"head", vec_to_json(t.head())}}; }

Json factors_to_json(const PolarFactors& f) {
    return Json{{"beta", f.beta},
                {"k_b", real_vec_to_json(f.k_b)},
                {"epsilon", f.epsilon},
                {"k_r", real_vec_to_json(f.k_r)},
                {"sign", f.sign}};
}

double axis_gap(const CVec3& u, const CVec3& v) { return std::min(max_abs_diff(u, v), max_abs_diff(u, -v)); }

Json cmd_compose(const Json& input) {
    if (!input.is_object() || !input.contains("first") || !input.contains("second"))
        throw InputError("compose expects {\"first\": element, \"second\": element}");
    const GroupElement first = element_from_json(input["first"]);
    const GroupElement second = element_from_json(input["second"]);

    const Composition c = compose(turn_of(second), turn_of(first));
    const GroupElement product = element_of(c.turn);
    const GroupElement oracle = multiply(second, first);
    Json out{{"product", element_to_json(product)},
             {"oracle_product", element_to_json(oracle)},
             {"deviation", max_abs_diff(product, oracle)},
             {"turn", turn_to_json(c.turn)}};
    return envelope("compose", input, std::move(out), to_string(c.path));
}

Json cmd_polar(const Json& input) {
    const GroupElement s = element_from_json(input);
    const PolarTurns turns = polar_turns(s);
    const PolarFactors f = polar_factors(s);
    const PolarFactors o = matrix_polar_oracle(s);

    double dev = std::max(std::abs(f.beta - o.beta), std::abs(f.epsilon - o.epsilon));
    if (f.beta > 1e-12) dev = std::max(dev, axis_gap(f.k_b, o.k_b));
    if (f.epsilon > 1e-12) dev = std::max(dev, axis_gap(f.k_r, o.k_r));

    Json out = factors_to_json(f);
    out["rotation_turn"] = turn_to_json(turns.rotation_turn);
    out["boost_turn"] = turn_to_json(turns.boost_turn);
    out["oracle"] = factors_to_json(o);
    out["deviation"] = dev;
    return envelope("polar", input, std::move(out), turns.commuting ? "algebraic" : "geometric");
}

Json cmd_wigner(const Json& input) {
    if (!input.is_object()) throw InputError("wigner expects a JSON object");
    const double beta_m = number_field(input, "beta_m");
    const double beta_n = number_field(input, "beta_n");
    if (!(beta_m > 0.0) || !(beta_n > 0.0)) throw InputError("rapidities must be positive");

    CVec3 m;
    CVec3 n;
    double theta = 0.0;
    const bool has_axes = input.contains("m") || input.contains("n");
    if (has_axes) {
        if (!input.contains("m") || !input.contains("n")) throw InputError("give both axes 'm' and 'n' or neither");
        m = real_vec_from_json(input["m"], "m");
        n = real_vec_from_json(input["n"], "n");
        if (m.hnorm() < kIsoTol || n.hnorm() < kIsoTol) throw InputError("axes must be nonzero");
        m = m / m.hnorm();
        n = n / n.hnorm();
        theta = std::atan2(wedge(m, n).hnorm(), dot(m, n).real());
        if (input.contains("theta") && std::abs(number_field(input, "theta") - theta) > 1e-9)
            throw InputError("'theta' disagrees with the angle between 'm' and 'n'");
    } else {
        theta = number_field(input, "theta");
        if (theta < 0.0 || theta > std::numbers::pi) throw InputError("theta must lie in [0, pi]");
        n = CVec3::basis(0);
        m = CVec3::real(std::cos(theta), std::sin(theta), 0.0);
    }

    const WignerResult w = compose_boosts({beta_m, m}, {beta_n, n});
    const double eps_cf = wigner_angle(beta_m, beta_n, theta);
    const double beta_cf = resultant_rapidity(beta_m, beta_n, theta);
    const double phi_cf = boost_deflection(beta_m, beta_n, theta);

    Json out;
    out["theta"] = theta;
    out["closed_form"] = Json{{"epsilon", eps_cf}, {"beta_res", beta_cf}, {"phi", phi_cf}};
    out["constructive"] = Json{{"epsilon", w.epsilon},
                               {"beta_res", w.beta_res},
                               {"phi", w.phi},
                               {"k_r", real_vec_to_json(w.k_r)},
                               {"k_b", real_vec_to_json(w.k_b)},
                               {"meeting_point", vec_to_json(w.meeting_point)},
                               {"product", element_to_json(w.product)}};
    out["deviation"] = std::max({std::abs(eps_cf - w.epsilon), std::abs(beta_cf - w.beta_res), std::abs(phi_cf - w.phi)});
    return envelope("wigner", input, std::move(out), w.collinear ? "algebraic" : to_string(w.path));
}

Json cmd_classify(const Json& input) {
    if (!input.is_object() || !input.contains("z")) throw InputError("classify expects {\"z\": vector}");
    const CVec3 z = vec_from_json(input["z"]);
    const OrbitClass orbit = classify_orbit(z);

    Json out;
    out["type"] = to_string(orbit.type);
    if (orbit.type == OrbitType::TypeI) {
        out["r"] = orbit.r;
        out["phi"] = orbit.phi;
    }
    if (orbit.type != OrbitType::Zero) {
        const CanonicalReduction red = reduce_to_canonical(z);
        out["canonical"] = vec_to_json(red.canonical);
        out["reducing_element"] = element_to_json(red.element);
        out["residual"] = max_abs_diff(adjoint_rotation(red.element) * z, red.canonical);
    }
    return envelope("classify", input, std::move(out), "algebraic");
}

Json cmd_matrices(const Json& input) {
    const GroupElement s = element_from_json(input);
    const Mat2C m = to_matrix(s);
    const ComplexRotation3 r = adjoint_rotation(s);
    const LorentzMat4 l = lorentz_matrix(s);

    Json sl2c = Json::array();
    for (int i = 0; i < 2; ++i) sl2c.push_back(Json::array({complex_to_json(m(i, 0)), complex_to_json(m(i, 1))}));
    Json so3c = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(r(i, j)));
        so3c.push_back(row);
    }
    Json so31 = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(l(i, j));
        so31.push_back(row);
    }
    Json out{{"sl2c", sl2c}, {"so3c", so3c}, {"so31", so31}};
    return envelope("matrices", input, std::move(out), "algebraic");
}

void format_into(std::string& out, const Json& j, bool pretty, int depth) {
    const std::string indent = pretty ? std::string(static_cast<std::size_t>(2 * (depth + 1)), ' ') : "";
    const std::string close_indent = pretty ? std::string(static_cast<std::size_t>(2 * depth), ' ') : "";
    const char* nl = pretty ? "\n" : "";

    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += indent;
                out += Json(it.key()).dump();
                out += pretty ? ": " : ":";
                format_into(out, it.value(), pretty, depth + 1);
            }
            out += nl;
            out += close_indent;
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += nl;
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k > 0) {
                    out += ",";
                    out += nl;
                }
                out += indent;
                format_into(out, j[k], pretty, depth + 1);
            }
            out += nl;
            out += close_indent;
            out += "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

Json vec_to_json(const CVec3& v) {
    return Json::array({complex_to_json(v[0]), complex_to_json(v[1]), complex_to_json(v[2])});
}

CVec3 vec_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw InputError("a complex vector must be three [re, im] pairs");
    CVec3 v;
    for (int k = 0; k < 3; ++k) v[k] = complex_from_json(j[static_cast<std::size_t>(k)], "vector component");
    if (!v.is_finite()) throw InputError("vector components must be finite");
    return v;
}

Json element_to_json(const GroupElement& s) { return Json{{"a0", complex_to_json(s.a0())}, {"a", vec_to_json(s.a())}}; }

GroupElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a0") || !j.contains("a"))
        throw InputError("an element must be {\"a0\": [re, im], \"a\": [[re, im] x 3]}");
    const Complex a0 = complex_from_json(j["a0"], "a0");
    if (!std::isfinite(a0.real()) || !std::isfinite(a0.imag())) throw InputError("a0 must be finite");
    return GroupElement::make(a0, vec_from_json(j["a"]));
}

Json run_command(std::string_view command, const Json& input) {
    if (command == "compose") return cmd_compose(input);
    if (command == "polar") return cmd_polar(input);
    if (command == "wigner") return cmd_wigner(input);
    if (command == "classify") return cmd_classify(input);
    if (command == "matrices") return cmd_matrices(input);
    throw InputError("unknown command '" + std::string(command) + "'");
}

Outcome execute(std::string_view command, std::string_view input_text) {
    auto error_body = [](std::string_view kind, std::string_view message) {
        return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
    };
    Json input;
    try {
        input = Json::parse(input_text);
    } catch (const Json::parse_error& e) {
        return {error_body("InputError", e.what()), kExitInputError};
    }
    try {
        return {run_command(command, input), kExitOk};
    } catch (const NumericalDegeneracy& e) {
        return {error_body(e.kind(), e.what()), kExitNumericalFailure};
    } catch (const DegenerateCompositionFailure& e) {
        return {error_body(e.kind(), e.what()), kExitNumericalFailure};
    } catch (const Error& e) {
        return {error_body(e.kind(), e.what()), kExitInputError};
    } catch (const Json::exception& e) {
        return {error_body("InputError", e.what()), kExitInputError};
    }
}

std::string format_json(const Json& j, bool pretty) {
    std::string out;
    format_into(out, j, pretty, 0);
    return out;
}

}  // namespace sl2c::cli
