#include "fermat/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fermat {

namespace {

struct EdgePairs {
    // Opposite-edge pair means: {a12,a34}, {a13,a24}, {a14,a23}.
    std::array<std::array<double, 2>, 3> pairs;
};

EdgePairs opposite_edge_pairs(const Tetrahedron& t) {
    return {{{
        {t.edge_length(1, 2), t.edge_length(3, 4)},
        {t.edge_length(1, 3), t.edge_length(2, 4)},
        {t.edge_length(1, 4), t.edge_length(2, 3)},
    }}};
}

}  // namespace

const char* to_string(TetrahedronShape shape) {
    switch (shape) {
        case TetrahedronShape::Regular:
            return "regular";
        case TetrahedronShape::AlmostPlatonic:
            return "almost_platonic";
        case TetrahedronShape::Isosceles:
            return "isosceles";
        case TetrahedronShape::General:
            return "general";
    }
    return "general";
}

TetrahedronShape classify_shape(const Tetrahedron& t, double rel_tol) {
    if (!(rel_tol >= 0.0)) {
        throw DomainError("classify_shape: rel_tol must be nonnegative");
    }
    const EdgePairs ep = opposite_edge_pairs(t);
    const double scale = t.diameter();
    const auto equal = [&](double a, double b) {
        return std::abs(a - b) <= rel_tol * scale;
    };

    double lo = ep.pairs[0][0];
    double hi = lo;
    for (const auto& pair : ep.pairs) {
        for (const double e : pair) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    if (equal(lo, hi)) {
        return TetrahedronShape::Regular;
    }

    const bool isosceles = equal(ep.pairs[0][0], ep.pairs[0][1]) &&
                           equal(ep.pairs[1][0], ep.pairs[1][1]) &&
                           equal(ep.pairs[2][0], ep.pairs[2][1]);
    if (!isosceles) {
        return TetrahedronShape::General;
    }

    const double p0 = 0.5 * (ep.pairs[0][0] + ep.pairs[0][1]);
    const double p1 = 0.5 * (ep.pairs[1][0] + ep.pairs[1][1]);
    const double p2 = 0.5 * (ep.pairs[2][0] + ep.pairs[2][1]);
    const int coincidences = int(equal(p0, p1)) + int(equal(p0, p2)) + int(equal(p1, p2));
    return coincidences == 1 ? TetrahedronShape::AlmostPlatonic : TetrahedronShape::Isosceles;
}

Point3 isosceles_fermat_point(const Tetrahedron& t) {
    if (classify_shape(t) == TetrahedronShape::General) {
        throw NotIsosceles("isosceles_fermat_point: opposite edge pairs are not equal");
    }
    return circumcenter(t).center;
}

Tetrahedron natural_ft_tetrahedron(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("natural_ft_tetrahedron: a must be positive");
    }
    const ClassParameters params{a * std::numbers::sqrt2, std::numbers::pi / 2.0,
                                 a * std::numbers::sqrt3, a * std::numbers::sqrt2};
    return embed(construct_class(params)).tetrahedron;
}

double phi_from_omega(double omega) {
    if (!(omega > 0.0) || !(omega < std::numbers::pi)) {
        throw DomainError("phi_from_omega: omega must lie in (0, pi)");
    }
    const double c = (-1.0 - std::cos(omega)) / 2.0;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

DerivedConfiguration construct_class(const ClassParameters& params) {
    const auto positive_length = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive_length(params.a12) || !positive_length(params.a13) ||
        !positive_length(params.a34)) {
        throw DomainError("construct_class: edge lengths must be positive");
    }
    const double phi = phi_from_omega(params.omega);  // also validates omega
    const double co = std::cos(params.omega);
    const double cphi = (-1.0 - co) / 2.0;
    const double sphi2 = 1.0 - cphi * cphi;

    const double x = params.a12 / std::sqrt(2.0 * (1.0 - co));

    const double disc_z = params.a13 * params.a13 - x * x * sphi2;
    if (disc_z < 0.0) {
        throw ConstructError("NoRealZ", "construct_class: a13 too short, z has no real solution");
    }
    const double z = x * cphi + std::sqrt(disc_z);
    if (z <= 0.0) {
        throw ConstructError("NonpositiveZ", "construct_class: a13 <= x forces z <= 0");
    }

    const double so2 = 1.0 - co * co;
    const double disc_d = params.a34 * params.a34 - z * z * so2;
    if (disc_d < 0.0) {
        throw ConstructError("NoRealD", "construct_class: a34 too short, d has no real solution");
    }
    const double d = z * co + std::sqrt(disc_d);
    if (d <= 0.0) {
        throw ConstructError("NonpositiveD", "construct_class: a34 <= z with obtuse omega forces d <= 0");
    }

    DerivedConfiguration out;
    out.params = params;
    out.x = x;
    out.z = z;
    out.d = d;
    out.phi = phi;
    out.a14 = std::sqrt(x * x + d * d - 2.0 * x * d * cphi);
    return out;
}

EmbeddedTetrahedron embed(const DerivedConfiguration& cfg) {
    if (!(cfg.x > 0.0) || !(cfg.z > 0.0) || !(cfg.d > 0.0)) {
        throw DomainError("embed: distances x, z, d must be positive");
    }
    const double omega = cfg.params.omega;
    if (!(omega > 0.0) || !(omega < std::numbers::pi)) {
        throw DomainError("embed: omega must lie in (0, pi)");
    }
    const double co = std::cos(omega);
    const double so = std::sin(omega);
    const double cphi = std::cos(cfg.phi);

    // Balance requires the angle pairing cos phi = (-1 - cos omega)/2; an
    // angle set violating it admits no embedding with the origin balanced.
    if (std::abs(cphi - (-1.0 - co) / 2.0) > 1e-9) {
        throw EmbeddingInfeasible("embed: phi is inconsistent with omega");
    }

    const double cos2_theta = 2.0 * cphi * cphi / (1.0 + co);
    if (cos2_theta < -1e-12 || cos2_theta > 1.0 + 1e-12) {
        throw EmbeddingInfeasible("embed: cos^2 theta falls outside [0, 1]");
    }
    const double sin_theta = std::sqrt(1.0 - std::clamp(cos2_theta, 0.0, 1.0));

    const Point3 u1{1.0, 0.0, 0.0};
    const Point3 u2{co, so, 0.0};
    // cos(theta) cos(psi3) = cos phi and cos(theta) sin(psi3) follows from
    // the second direction-cosine relation; theta3 > 0 picks the chirality,
    // A4 mirrors A3 in the u1-u2 plane.
    const Point3 u3{cphi, cphi * (1.0 - co) / so, sin_theta};
    const Point3 u4{u3.x, u3.y, -sin_theta};

    const std::array<Point3, 4> vertices = {
        cfg.x * u1,
        cfg.x * u2,
        cfg.z * u3,
        cfg.d * u4,
    };
    return {Tetrahedron(vertices), Point3{0.0, 0.0, 0.0}};
}

Tetrahedron ray_scale(const Tetrahedron& t, const Point3& a0,
                      const std::array<double, 4>& factors) {
    for (const double f : factors) {
        if (!std::isfinite(f) || !(f > 0.0)) {
            throw FactorsNotPositive("ray_scale: all factors must be positive");
        }
    }
    std::array<Point3, 4> vertices;
    for (int i = 1; i <= 4; ++i) {
        vertices[i - 1] = a0 + factors[i - 1] * (t.vertex(i) - a0);
    }
    return Tetrahedron(vertices);
}

}  // namespace fermat
