#include "fermat/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fermat/closed_form.hpp"

namespace fermat {

namespace {

double eval_cubic(double a, double b, double c, double d, double x) {
    return ((a * x + b) * x + c) * x + d;
}

void newton_polish(double a, double b, double c, double d, std::vector<double>& roots) {
    for (double& r : roots) {
        for (int k = 0; k < 2; ++k) {
            const double f = eval_cubic(a, b, c, d, r);
            const double fp = (3.0 * a * r + 2.0 * b) * r + c;
            if (fp != 0.0) {
                const double step = f / fp;
                if (std::isfinite(step)) {
                    r -= step;
                }
            }
        }
    }
}

}  // namespace

CubicRealRoots solve_cubic_real(double a, double b, double c, double d) {
    if (a == 0.0) {
        throw NotCubic("solve_cubic_real: leading coefficient is zero");
    }
    const double bn = b / a;
    const double cn = c / a;
    const double dn = d / a;

    const double q = (bn * bn - 3.0 * cn) / 9.0;
    const double r = (bn * (2.0 * bn * bn - 9.0 * cn) + 27.0 * dn) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;

    CubicRealRoots out;
    if (r2 < q3) {
        // Casus irreducibilis: three distinct real roots, radical form would
        // need complex arithmetic, so use the trigonometric form.
        out.discriminant_negative = true;
        const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        const double shift = bn / 3.0;
        out.roots = {
            m * std::cos(theta / 3.0) - shift,
            m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0) - shift,
            m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0) - shift,
        };
    } else {
        const double big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r2 - q3)), r);
        const double small = (big == 0.0) ? 0.0 : q / big;
        out.roots = {big + small - bn / 3.0};
        // On the boundary r2 == q3 the complex pair collapses to a real
        // double root.
        if (r2 - q3 <= 1e-14 * std::max(r2, q3)) {
            out.roots.push_back(-0.5 * (big + small) - bn / 3.0);
        }
    }

    newton_polish(a, b, c, d, out.roots);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<double> solve_quadratic_real(double a, double b, double c) {
    if (a == 0.0) {
        throw DomainError("solve_quadratic_real: leading coefficient is zero");
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        return {};
    }
    if (disc == 0.0) {
        return {-b / (2.0 * a)};
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::vector<double> roots = {q / a, (q != 0.0) ? c / q : -b / a - q / a};
    std::sort(roots.begin(), roots.end());
    return roots;
}

Tetrahedron mehlhos_tetrahedron() {
    return Tetrahedron(Point3{0, -1, 0}, Point3{0, 1, 0}, Point3{1, 0, 0}, Point3{1, 0, 1});
}

Point3 mehlhos_fermat_point() {
    const Tetrahedron t = mehlhos_tetrahedron();
    const CubicRealRoots cubic = solve_cubic_real(8.0, 4.0, -3.0, -1.0);

    std::vector<Point3> interior;
    for (const double s : cubic.roots) {
        if (std::abs(s) > 1.0 || std::abs(1.0 - s) < 1e-12) {
            continue;  // not a sine, or the formula's pole
        }
        const double cos2 = 1.0 - s * s;
        for (const double sign : {1.0, -1.0}) {
            const double cphi = sign * std::sqrt(cos2);
            const Point3 candidate{cos2 / (1.0 - s), 0.0, cphi * s / (1.0 - s)};
            const auto bary = barycentric_coordinates(t, candidate);
            const bool inside = std::all_of(bary.begin(), bary.end(),
                                            [](double w) { return w > 1e-12; });
            if (inside) {
                interior.push_back(candidate);
            }
        }
    }
    if (interior.size() != 1) {
        throw InternalInconsistency(
            "mehlhos_fermat_point: expected exactly one interior candidate");
    }
    return interior.front();
}

Tetrahedron glastier_tetrahedron() {
    return Tetrahedron(Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1});
}

Point3 glastier_fermat_point() {
    const Tetrahedron t = glastier_tetrahedron();
    // Stationary points of the objective restricted to the diagonal (x,x,x).
    const std::vector<double> roots = solve_quadratic_real(12.0, -8.0, 1.0);
    double best = roots.front();
    for (const double r : roots) {
        if (objective(t, {r, r, r}) < objective(t, {best, best, best})) {
            best = r;
        }
    }
    return {best, best, best};
}

Point3 regular_fermat_point(const Tetrahedron& t) {
    if (classify_shape(t) != TetrahedronShape::Regular) {
        throw NotRegular("regular_fermat_point: tetrahedron is not regular");
    }
    return t.centroid();
}

}  // namespace fermat
