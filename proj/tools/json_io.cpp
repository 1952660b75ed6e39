#include "json_io.hpp"

#include <cmath>

namespace coronakit::cli {

double CheckTolerances::operator[](const std::string& name) const {
    const auto it = values.find(name);
    if (it == values.end()) throw SchemaError("unknown check tolerance '" + name + "'");
    return it->second;
}

namespace {

double* policy_field(const std::string& name, Tolerances& tol) {
    if (name == "tikhonov_rel") return &tol.tikhonov_rel;
    if (name == "range_cutoff") return &tol.range_cutoff;
    if (name == "psd_tol") return &tol.psd_tol;
    if (name == "merge_tol") return &tol.merge_tol;
    if (name == "bezout_residual") return &tol.bezout_residual;
    if (name == "cocycle_tol") return &tol.cocycle_tol;
    return nullptr;
}

void set_tolerance(const std::string& name, double value, Tolerances& tol, CheckTolerances& checks) {
    if (!(value >= 0.0) || !std::isfinite(value)) throw SchemaError("tolerance '" + name + "' must be finite and >= 0");
    if (double* f = policy_field(name, tol)) {
        *f = value;
        return;
    }
    const auto it = checks.values.find(name);
    if (it == checks.values.end()) throw SchemaError("unknown tolerance '" + name + "'");
    it->second = value;
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw SchemaError(std::string(what) + " must be finite");
}

}  // namespace

void apply_tolerance_override(const std::string& assignment, Tolerances& tol, CheckTolerances& checks) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw SchemaError("--tol expects name=value, got '" + assignment + "'");
    const std::string name = assignment.substr(0, eq);
    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(assignment.substr(eq + 1), &used);
        if (used != assignment.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw SchemaError("--tol value for '" + name + "' is not a number");
    }
    set_tolerance(name, value, tol, checks);
}

void apply_tolerance_overrides(const json& obj, Tolerances& tol, CheckTolerances& checks) {
    if (!obj.is_object()) throw SchemaError("'tolerances' must be an object");
    for (const auto& [name, v] : obj.items()) {
        if (!v.is_number()) throw SchemaError("tolerance '" + name + "' must be a number");
        set_tolerance(name, v.get<double>(), tol, checks);
    }
}

json tolerances_to_json(const Tolerances& tol, const CheckTolerances& checks) {
    json policy{{"tikhonov_rel", tol.tikhonov_rel}, {"range_cutoff", tol.range_cutoff}, {"psd_tol", tol.psd_tol},
                {"merge_tol", tol.merge_tol},       {"bezout_residual", tol.bezout_residual},
                {"cocycle_tol", tol.cocycle_tol}};
    json chk = json::object();
    for (const auto& [k, v] : checks.values) chk[k] = v;
    return {{"policy", policy}, {"checks", chk}};
}

const json& require(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError("missing required field '" + key + "'");
    return j.at(key);
}

cplx parse_complex(const json& j) {
    cplx z;
    if (j.is_number()) {
        z = j.get<double>();
    } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        z = cplx(j[0].get<double>(), j[1].get<double>());
    } else if (j.is_object() && j.contains("re")) {
        z = cplx(j.at("re").get<double>(), j.value("im", 0.0));
    } else {
        throw SchemaError("expected a complex number (number, [re, im] or {re, im}), got " + j.dump());
    }
    require_finite(z.real(), "complex value");
    require_finite(z.imag(), "complex value");
    return z;
}

std::vector<cplx> parse_complex_list(const json& j) {
    if (!j.is_array()) throw SchemaError("expected a list of complex numbers");
    std::vector<cplx> out;
    for (const auto& e : j) out.push_back(parse_complex(e));
    return out;
}

std::vector<double> parse_real_list(const json& j) {
    if (j.is_number()) return {j.get<double>()};
    if (!j.is_array()) throw SchemaError("expected a list of numbers");
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) throw SchemaError("expected a number, got " + e.dump());
        out.push_back(e.get<double>());
        require_finite(out.back(), "real value");
    }
    return out;
}

CVector parse_cvector(const json& j) {
    const auto v = parse_complex_list(j);
    return Eigen::Map<const CVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

CMatrix parse_cmatrix(const json& j) {
    if (!j.is_array()) throw SchemaError("expected a matrix as a list of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    CMatrix m(rows, rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size()));
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto r = parse_complex_list(j[static_cast<std::size_t>(i)]);
        if (static_cast<Eigen::Index>(r.size()) != m.cols()) throw SchemaError("matrix rows have unequal lengths");
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = r[static_cast<std::size_t>(c)];
    }
    return m;
}

Point parse_point(const json& j, const DomainSpec& domain) {
    if (domain.dim == 1 && !(j.is_array() && j.size() == 1)) return make_point(parse_complex(j));
    const auto c = parse_complex_list(j);
    if (static_cast<int>(c.size()) != domain.dim)
        throw SchemaError("point " + j.dump() + " does not have " + std::to_string(domain.dim) + " coordinates");
    return Eigen::Map<const CVector>(c.data(), static_cast<Eigen::Index>(c.size()));
}

std::vector<Point> parse_point_list(const json& j, const DomainSpec& domain) {
    if (!j.is_array()) throw SchemaError("expected a list of points");
    std::vector<Point> out;
    for (const auto& e : j) out.push_back(parse_point(e, domain));
    return out;
}

namespace {

Point random_point(const DomainSpec& d, std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point p(d.dim);
    if (d.kind == DomainKind::polydisc) {
        for (int j = 0; j < d.dim; ++j) p(j) = std::polar(rmax * std::sqrt(u(rng)), 2.0 * pi * u(rng));
        return p;
    }
    std::normal_distribution<double> g(0.0, 1.0);
    for (int j = 0; j < d.dim; ++j) p(j) = cplx(g(rng), g(rng));
    return p * (rmax * std::pow(u(rng), 1.0 / (2.0 * d.dim)) / p.norm());
}

double separation(const Point& a, const Point& b) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
        s = std::max(s, std::abs(a(j) - b(j)) / std::abs(1.0 - std::conj(b(j)) * a(j)));
    return s;
}

}  // namespace

PointSet parse_point_set(const json& j, const DomainSpec& domain, std::mt19937_64& rng) {
    PointSet ps;
    ps.domain = domain;
    if (j.is_object()) {
        const int count = require(j, "random").get<int>();
        const double rmax = j.value("rmax", 0.9), min_sep = j.value("min_sep", 0.0);
        if (count < 0 || !(rmax > 0.0 && rmax < 1.0)) throw SchemaError("random point set needs count >= 0, 0 < rmax < 1");
        int guard = 0;
        while (static_cast<int>(ps.size()) < count && guard++ < 100000) {
            Point p = random_point(domain, rng, rmax);
            bool ok = true;
            for (const auto& q : ps.points) ok = ok && separation(p, q) >= min_sep;
            if (ok) ps.points.push_back(p);
        }
        if (static_cast<int>(ps.size()) < count) throw SchemaError("could not place random points with that separation");
        if (j.value("include_origin", false)) ps.points.push_back(Point::Zero(domain.dim));
    } else {
        ps.points = parse_point_list(j, domain);
    }
    ps.validate();
    return ps;
}

KernelSpec parse_kernel(const json& j, int default_trunc) {
    KernelSpec s;
    if (j.is_string()) {
        s.family = kernel_family_from_string(j.get<std::string>());
    } else {
        s.family = kernel_family_from_string(require(j, "family").get<std::string>());
        s.n = j.value("n", 1);
        s.sigma = j.value("sigma", 0.5);
        s.p = j.value("p", 2.0);
        s.alpha = j.value("alpha", 0.0);
    }
    s.trunc = j.is_object() ? j.value("trunc", default_trunc) : default_trunc;
    s.validate();
    return s;
}

PowerSeries1D parse_series(const json& j) {
    const auto c = parse_complex_list(j.is_object() ? require(j, "coeffs") : j);
    if (c.empty()) throw SchemaError("power series needs at least one coefficient");
    return PowerSeries1D(c);
}

DiscreteMeasure parse_measure(const json& j) {
    const auto z = parse_complex_list(require(j, "points"));
    const auto w = parse_real_list(require(j, "weights"));
    if (z.size() != w.size()) throw SchemaError("measure points and weights differ in length");
    auto mu = DiscreteMeasure::disk(z, w);
    mu.validate();
    return mu;
}

ShiftConfig parse_shift(const json& j, const DomainSpec& domain) {
    ShiftConfig s;
    s.base_points = parse_point_list(j.value("base_points", json::array()), domain);
    s.theta = parse_real_list(require(j, "theta"));
    s.validate(domain);
    return s;
}

CMatrix parse_channels(const json& j, std::size_t points) {
    if (!j.is_array() || j.empty()) throw SchemaError("channels must be a non-empty list of value lists");
    CMatrix m(static_cast<Eigen::Index>(points), static_cast<Eigen::Index>(j.size()));
    for (std::size_t l = 0; l < j.size(); ++l) {
        const auto v = parse_complex_list(j[l]);
        if (v.size() != points) throw SchemaError("each channel must list one value per sample point");
        for (std::size_t i = 0; i < points; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) = v[i];
    }
    return m;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

json to_json(const CMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(CVector(m.row(i).transpose())));
    return out;
}

json to_json(const Point& p, bool scalar) { return scalar && p.size() == 1 ? to_json(p(0)) : to_json(CVector(p)); }

json to_json(const PowerSeries1D& s) {
    json out = json::array();
    for (cplx c : s.coeffs) out.push_back(to_json(c));
    return out;
}

}  // namespace coronakit::cli
