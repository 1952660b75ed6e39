#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

using coronakit::cli::json;

enum ExitCode { exit_ok = 0, exit_input = 1, exit_breach = 2 };

json read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream is(path);
        if (!is) throw coronakit::cli::SchemaError("cannot read input file '" + path + "'");
        ss << is.rdbuf();
    }
    return json::parse(ss.str());
}

void write_report(const json& report, const std::string& path) {
    const std::string text = report.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw coronakit::cli::SchemaError("cannot write output file '" + path + "'");
    os << text;
}

int fail(const std::string& command, const std::string& kind, const std::string& message, const std::string& output) {
    std::cerr << "coronakit " << command << ": " << kind << " error: " << message << '\n';
    const json report{{"schema_version", coronakit::cli::schema_version},
                      {"command", command},
                      {"status", "error"},
                      {"error", {{"kind", kind}, {"message", message}}}};
    try {
        if (!output.empty() && output != "-") write_report(report, output);
    } catch (const std::exception&) {
    }
    return exit_input;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coronakit: reproducing-kernel, Carleson and corona computations from JSON inputs"};
    app.require_subcommand(1);
    std::string input, output;
    std::vector<std::string> tol_overrides;
    int nodes = 0, trunc = 256;
    std::uint64_t seed = 20240601;
    for (const auto& name : coronakit::cli::command_names()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " computation");
        sub->add_option("--input,-i", input, "input JSON file, or - for stdin")->required();
        sub->add_option("--output,-o", output, "report path (default stdout)");
        sub->add_option("--tol", tol_overrides, "override a tolerance, name=value (repeatable)");
        sub->add_option("--nodes", nodes, "quadrature or sample count override")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", seed, "seed for randomized inputs");
        sub->add_option("--trunc", trunc, "series truncation for kernel coefficients")->check(CLI::PositiveNumber);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    coronakit::cli::Context ctx;
    ctx.nodes = nodes;
    ctx.trunc = trunc;
    ctx.rng.seed(seed);
    try {
        for (const auto& t : tol_overrides) coronakit::cli::apply_tolerance_override(t, ctx.tol, ctx.checks);
        const json in = read_input(input);
        const json report = coronakit::cli::run_report(command, in, ctx, seed);
        write_report(report, output);
        if (!ctx.all_passed()) {
            std::cerr << "coronakit " << command << ": tolerance breach\n";
            return exit_breach;
        }
        return exit_ok;
    } catch (const json::exception& e) {
        return fail(command, "schema", e.what(), output);
    } catch (const coronakit::cli::SchemaError& e) {
        return fail(command, "schema", e.what(), output);
    } catch (const coronakit::NumericalError& e) {
        return fail(command, "numerical", e.what(), output);
    } catch (const coronakit::Error& e) {
        return fail(command, "input", e.what(), output);
    }
}
