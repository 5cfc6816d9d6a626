// sl2c-turns: JSON front end for turn composition, polar decomposition,
// Wigner rotation, orbit classification and matrix export.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sl2c/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    namespace cli = sl2c::cli;

    CLI::App app{"Hamilton turns for SL(2,C): composition, polar decomposition and Wigner rotation"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    const std::pair<const char*, const char*> commands[] = {
        {"compose", "Compose two elements by the parallelogram law and compare with the matrix product"},
        {"polar", "Polar decomposition into boost x rotation, checked against a matrix polar oracle"},
        {"wigner", "Wigner rotation and resultant boost of two composed boosts"},
        {"classify", "Adjoint-orbit type and canonical form of a complex vector"},
        {"matrices", "SL(2,C), SO(3,C) and SO(3,1) matrices of an element"},
    };
    std::string input_path = "-";
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input", input_path, "Input JSON file, '-' for stdin")->capture_default_str();
        sub->add_flag("--pretty", pretty, "Indent the JSON output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::string text;
    try {
        text = slurp(input_path);
    } catch (const std::exception& e) {
        const cli::Json err{{"error", cli::Json{{"kind", "InputError"}, {"message", e.what()}}}};
        std::cout << cli::format_json(err, pretty) << '\n';
        return cli::kExitInputError;
    }

    const cli::Outcome outcome = cli::execute(command, text);
    std::cout << cli::format_json(outcome.body, pretty) << '\n';
    return outcome.exit_code;
}
