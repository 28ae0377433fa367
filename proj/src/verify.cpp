#include "fermat/verify.hpp"

#include <cmath>
#include <random>

#include "fermat/closed_form.hpp"

namespace fermat {

std::array<double, 4> spira_synge_residuals(const AngleTable& angles) {
    const double c12 = std::cos(angles.at(1, 2));
    const double c13 = std::cos(angles.at(1, 3));
    const double c14 = std::cos(angles.at(1, 4));
    const double c23 = std::cos(angles.at(2, 3));
    const double c24 = std::cos(angles.at(2, 4));
    const double c34 = std::cos(angles.at(3, 4));
    return {
        std::abs(c12 - c34),
        std::abs(c23 - c14),
        std::abs(c13 - c24),
        std::abs(1.0 + c12 + c13 + c24),
    };
}

double balancing_residual(const Tetrahedron& t, const Point3& p) {
    Point3 sum;
    for (int i = 1; i <= 4; ++i) {
        try {
            sum += unit_vector(p, t.vertex(i)).vec();
        } catch (const CoincidentPoints&) {
            throw AtVertex(i, "balancing_residual: point sits on a vertex");
        }
    }
    return norm(sum);
}

int convexity_check(const Tetrahedron& t, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw DomainError("convexity_check: trials must be >= 1");
    }
    std::mt19937_64 rng(seed);
    const Point3 c = t.centroid();
    const double h = 1.5 * t.diameter();
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const auto sample = [&] {
        return Point3{c.x + h * unit(rng), c.y + h * unit(rng), c.z + h * unit(rng)};
    };

    int violations = 0;
    for (int k = 0; k < trials; ++k) {
        const Point3 p = sample();
        const Point3 q = sample();
        const double l = weight(rng);
        const double fp = objective(t, p);
        const double fq = objective(t, q);
        const double lhs = objective(t, l * p + (1.0 - l) * q);
        const double rhs = l * fp + (1.0 - l) * fq;
        if (lhs > rhs + 1e-12 * (fp + fq)) {
            ++violations;
        }
    }
    return violations;
}

VerificationReport cross_validate(const Tetrahedron& t, const VerificationConfig& cfg,
                                  std::optional<Point3> expected) {
    VerificationReport report;
    report.solution = solve(t);
    report.convexity_violations = convexity_check(t, cfg.convexity_trials, cfg.seed);

    std::optional<Point3> reference = expected;
    if (!reference && classify_shape(t) != TetrahedronShape::General) {
        reference = isosceles_fermat_point(t);
    }
    if (reference) {
        report.explicit_numeric_gap = distance(*reference, report.solution.point);
    }

    bool pass = report.convexity_violations == 0;
    report.balancing_residual = report.solution.balancing_residual;
    if (report.solution.kind == SolutionKind::Interior) {
        report.spira_synge = spira_synge_residuals(*report.solution.angles);
        pass = pass && report.balancing_residual <= cfg.balancing_tolerance;
        for (const double r : *report.spira_synge) {
            pass = pass && r <= cfg.spira_synge_tolerance;
        }
    } else {
        pass = pass && report.balancing_residual <= 1.0 + 1e-9;
    }
    if (report.explicit_numeric_gap) {
        pass = pass && *report.explicit_numeric_gap <= cfg.gap_tolerance * t.diameter();
    }
    report.pass = pass;
    return report;
}

}  // namespace fermat
