#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "coronakit/carleson.hpp"
#include "coronakit/config.hpp"
#include "coronakit/convex_poisson.hpp"
#include "coronakit/kernels.hpp"
#include "coronakit/power_series.hpp"
#include "coronakit/types.hpp"

namespace coronakit::cli {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Named pass/fail thresholds used by the report checks, with documented defaults.
struct CheckTolerances {
    std::map<std::string, double> values{
        {"poisson", 1e-9},        {"shift_invariance", 1e-9}, {"constant_norm", 1e-10}, {"divide_norm", 1e-12},
        {"zero_residual", 1e-12}, {"rescaling", 1e-8},        {"distance", 1e-10},     {"saddle_scan", 1e-6},
        {"duality", 1e-9},        {"outer_boundary", 1e-6},   {"outer_norm", 1e-6},    {"outer_identity", 1e-7},
        {"imp_fd", 1e-4},         {"carleson_ratio", 32.0},   {"besov_reproducing", 1e-8},
        {"cauchy_pompeiu", 1e-10}, {"jones_fd", 1e-3},        {"corona_residual", 1e-4},
    };

    double operator[](const std::string& name) const;
};

/// Applies "name=value" to the numerical policy or to a check threshold; throws SchemaError for unknown names.
void apply_tolerance_override(const std::string& assignment, Tolerances& tol, CheckTolerances& checks);
void apply_tolerance_overrides(const json& obj, Tolerances& tol, CheckTolerances& checks);
json tolerances_to_json(const Tolerances& tol, const CheckTolerances& checks);

const json& require(const json& j, const std::string& key);

cplx parse_complex(const json& j);
std::vector<cplx> parse_complex_list(const json& j);
std::vector<double> parse_real_list(const json& j);
CVector parse_cvector(const json& j);
/// List of rows, each a list of complex entries.
CMatrix parse_cmatrix(const json& j);
Point parse_point(const json& j, const DomainSpec& domain);
std::vector<Point> parse_point_list(const json& j, const DomainSpec& domain);
/// Explicit list, or {"random": count, "rmax", "min_sep", "include_origin"} drawn from rng.
PointSet parse_point_set(const json& j, const DomainSpec& domain, std::mt19937_64& rng);
KernelSpec parse_kernel(const json& j, int default_trunc);
PowerSeries1D parse_series(const json& j);
DiscreteMeasure parse_measure(const json& j);
ShiftConfig parse_shift(const json& j, const DomainSpec& domain);
/// P x N matrix from a list of N channels, each listing one value per sample point.
CMatrix parse_channels(const json& j, std::size_t points);

json to_json(cplx z);
json to_json(const CVector& v);
json to_json(const CMatrix& m);
json to_json(const Point& p, bool scalar);
json to_json(const PowerSeries1D& s);

}  // namespace coronakit::cli
