#pragma once

// JSON command layer behind the sl2c-turns executable. Kept in the library
// so tests can drive every subcommand without spawning a process.
//
// Schemas:
//   element  {"a0": [re, im], "a": [[re, im], [re, im], [re, im]]}
//   compose  {"first": element, "second": element}   product = second * first
//   polar    element
//   matrices element
//   classify {"z": [[re, im], [re, im], [re, im]]}
//   wigner   {"beta_m": x, "beta_n": x, "theta": x, "m": [x, y, z], "n": [x, y, z]}
//            (either theta or both axes; defaults n = e1, m = (cos t, sin t, 0))

#include <string>
#include <string_view>

#include "json.hpp"
#include "sl2c/errors.hpp"
#include "sl2c/group.hpp"

namespace sl2c::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Malformed or out-of-range command input.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("InputError", what) {}
};

Json element_to_json(const GroupElement& s);
GroupElement element_from_json(const Json& j);
Json vec_to_json(const CVec3& v);
CVec3 vec_from_json(const Json& j);

/// Runs one subcommand and returns its result envelope. Throws InputError
/// (or a library input error) for bad input and NumericalDegeneracy /
/// DegenerateCompositionFailure for numerical failures.
Json run_command(std::string_view command, const Json& input);

/// Envelope or error object plus the process exit code.
struct Outcome {
    Json body;
    int exit_code;
};

/// run_command with every failure mapped onto an error object and exit code.
Outcome execute(std::string_view command, std::string_view input_text);

/// Serializes with every floating-point value printed as %.17g.
std::string format_json(const Json& j, bool pretty);

}  // namespace sl2c::cli
