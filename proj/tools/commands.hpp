#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace coronakit::cli {

inline constexpr int schema_version = 1;

/// Worst value seen for one named check across all runs of a command.
struct CheckSummary {
    double worst = 0.0;
    double tolerance = 0.0;
    long runs = 0;
    long failures = 0;
};

struct Context {
    Tolerances tol;
    CheckTolerances checks;
    std::mt19937_64 rng;
    /// Quadrature or sample count override; 0 keeps each command's default.
    int nodes = 0;
    int trunc = 256;
    std::map<std::string, CheckSummary> summary;

    /// Records value <= tolerance.
    void check(const std::string& name, double value, double tolerance);
    /// Records a boolean outcome as 0 (pass) or 1 (fail) against tolerance 0.
    void check_true(const std::string& name, bool ok);
    bool all_passed() const;
    json summary_json() const;
};

const std::vector<std::string>& command_names();

/// Runs one command on one input object and returns its result block.
json run_command(const std::string& command, const json& input, Context& ctx);

/// Expands "instances" and "repeat", runs every instance and assembles the full report.
json run_report(const std::string& command, const json& input, Context& ctx, std::uint64_t seed);

}  // namespace coronakit::cli
