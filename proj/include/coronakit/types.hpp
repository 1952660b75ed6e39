#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace coronakit {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double pi = 3.14159265358979323846;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside the declared domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A numerical check failed (indefinite Gram matrix, non-convergence, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// An equality-constrained problem has no solution.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

enum class DomainKind { disk, ball, polydisc };

std::string to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

using Point = CVector;

inline Point make_point(cplx z) {
    Point p(1);
    p(0) = z;
    return p;
}

struct DomainSpec {
    DomainKind kind = DomainKind::disk;
    int dim = 1;

    /// Strict interior membership.
    bool contains(const Point& z) const;
    void validate() const;
    void require_inside(const Point& z) const;

    friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Finite list of points of a declared domain.
struct PointSet {
    DomainSpec domain;
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    /// Throws DomainError if a point has the wrong length or lies outside the domain.
    void validate() const;

    static PointSet disk(const std::vector<cplx>& zs);
};

/// Inner product sum_j z_j conj(w_j).
inline cplx dot(const Point& z, const Point& w) {
    cplx s = 0.0;
    for (Eigen::Index j = 0; j < z.size(); ++j) s += z(j) * std::conj(w(j));
    return s;
}

}  // namespace coronakit
