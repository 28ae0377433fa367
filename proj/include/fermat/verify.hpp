#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "fermat/geometry.hpp"
#include "fermat/weiszfeld.hpp"

namespace fermat {

struct VerificationConfig {
    double balancing_tolerance = 1e-8;
    double spira_synge_tolerance = 1e-7;
    double gap_tolerance = 1e-6;  // relative to the diameter
    int convexity_trials = 2000;
    std::uint64_t seed = 12345;
};

struct VerificationReport {
    FermatSolution solution;
    // Interior solutions: norm of the unit-vector sum at the solution point.
    // Vertex solutions: the pull-norm certificate, which must not exceed 1.
    double balancing_residual = 0.0;
    // Cosine-relation residuals; absent for vertex solutions, where the
    // interior angle table does not exist.
    std::optional<std::array<double, 4>> spira_synge;
    int convexity_violations = 0;
    // Distance between the closed-form point and the iterative one, when a
    // closed form applies.
    std::optional<double> explicit_numeric_gap;
    bool pass = false;
};

// Residuals of the four relations that hold at an interior Fermat point:
// |cos a12 - cos a34|, |cos a23 - cos a14|, |cos a13 - cos a24| and
// |1 + cos a12 + cos a13 + cos a24|.
std::array<double, 4> spira_synge_residuals(const AngleTable& angles);

// Norm of the sum of unit vectors from p towards the four vertices, in
// [0, 4]. Zero characterizes an interior Fermat point. Throws AtVertex when
// p sits on a vertex.
double balancing_residual(const Tetrahedron& t, const Point3& p);

// Samples `trials` random segments and convex weights around the
// tetrahedron, counting violations of
// f(l p + (1-l) q) <= l f(p) + (1-l) f(q) beyond a tiny slack. Expected 0.
int convexity_check(const Tetrahedron& t, int trials, std::uint64_t seed);

// Runs the solver plus the certificate battery. `expected`, when given,
// overrides the closed-form reference point for the gap check (callers that
// placed the Fermat point themselves pass it here).
VerificationReport cross_validate(const Tetrahedron& t,
                                  const VerificationConfig& cfg = {},
                                  std::optional<Point3> expected = std::nullopt);

}  // namespace fermat
