#pragma once

#include <vector>

#include "fermat/geometry.hpp"

namespace fermat {

struct CubicRealRoots {
    std::vector<double> roots;           // ascending, 1 to 3 entries
    bool discriminant_negative = false;  // three-real-root (trigonometric) case
};

// All real roots of a x^3 + b x^2 + c x + d = 0. The three-real-root case is
// solved trigonometrically, the rest by Cardano's radical form; every root
// gets two Newton polish steps. Throws NotCubic when a == 0.
CubicRealRoots solve_cubic_real(double a, double b, double c, double d);

// Real roots of a x^2 + b x + c = 0, ascending. Empty when the discriminant
// is negative. Throws DomainError when a == 0.
std::vector<double> solve_quadratic_real(double a, double b, double c);

// A1=(0,-1,0), A2=(0,1,0), A3=(1,0,0), A4=(1,0,1). Edge multiset
// {2, sqrt2, sqrt2, sqrt3, sqrt3, 1}.
Tetrahedron mehlhos_tetrahedron();

// Fermat-Torricelli point of the tetrahedron above, via the real roots of
// 8x^3 + 4x^2 - 3x - 1 = 0: each root s is a candidate sin(phi); the
// coordinate formula (cos^2 phi/(1 - sin phi), 0, cos phi sin phi/(1 - sin phi))
// is evaluated for both signs of cos phi and the unique strictly interior
// candidate is returned. Approximately (0.71341, 0, 0.21341).
Point3 mehlhos_fermat_point();

// Corner tetrahedron (0,0,0),(1,0,0),(0,1,0),(0,0,1).
Tetrahedron glastier_tetrahedron();

// (1/6, 1/6, 1/6): of the roots {1/6, 1/2} of 12x^2 - 8x + 1 = 0, the one
// minimizing the diagonal restriction of the objective.
Point3 glastier_fermat_point();

// Centroid of a regular tetrahedron, with the equiangular property
// (all six vertex angles arccos(-1/3)). Throws NotRegular.
Point3 regular_fermat_point(const Tetrahedron& t);

}  // namespace fermat
