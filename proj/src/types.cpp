#include "coronakit/types.hpp"

#include <cmath>

namespace coronakit {

std::string to_string(DomainKind kind) {
    switch (kind) {
    case DomainKind::disk: return "disk";
    case DomainKind::ball: return "ball";
    case DomainKind::polydisc: return "polydisc";
    }
    return "unknown";
}

DomainKind domain_kind_from_string(const std::string& name) {
    if (name == "disk") return DomainKind::disk;
    if (name == "ball") return DomainKind::ball;
    if (name == "polydisc") return DomainKind::polydisc;
    throw ParameterError("unknown domain kind '" + name + "'");
}

void DomainSpec::validate() const {
    if (dim < 1) throw ParameterError("domain dimension must be positive");
    if (kind == DomainKind::disk && dim != 1) throw ParameterError("disk domain must have dim = 1");
}

bool DomainSpec::contains(const Point& z) const {
    if (z.size() != dim) return false;
    switch (kind) {
    case DomainKind::disk:
    case DomainKind::ball:
        return z.squaredNorm() < 1.0;
    case DomainKind::polydisc:
        for (Eigen::Index j = 0; j < z.size(); ++j)
            if (std::abs(z(j)) >= 1.0) return false;
        return true;
    }
    return false;
}

void DomainSpec::require_inside(const Point& z) const {
    if (z.size() != dim)
        throw DomainError("point has " + std::to_string(z.size()) + " coordinates, domain expects " +
                          std::to_string(dim));
    if (!contains(z)) throw DomainError("point lies outside the open " + to_string(kind));
}

void PointSet::validate() const {
    domain.validate();
    for (const auto& p : points) domain.require_inside(p);
}

PointSet PointSet::disk(const std::vector<cplx>& zs) {
    PointSet ps;
    ps.domain = DomainSpec{DomainKind::disk, 1};
    ps.points.reserve(zs.size());
    for (cplx z : zs) ps.points.push_back(make_point(z));
    return ps;
}

}  // namespace coronakit
