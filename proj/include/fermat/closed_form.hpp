#pragma once

#include <array>

#include "fermat/geometry.hpp"

namespace fermat {

enum class TetrahedronShape { Regular, AlmostPlatonic, Isosceles, General };

const char* to_string(TetrahedronShape shape);

// Most specific label that fits: Regular (all six edges equal), then
// AlmostPlatonic (isosceles with exactly two of the three opposite-pair
// lengths coinciding), then Isosceles (the pairs {a12,a34}, {a13,a24},
// {a14,a23} each equal), then General.
TetrahedronShape classify_shape(const Tetrahedron& t, double rel_tol = 1e-9);

// Fermat point of an isosceles tetrahedron: its circumcenter.
// Throws NotIsosceles when classify_shape says General.
Point3 isosceles_fermat_point(const Tetrahedron& t);

// The almost-platonic tetrahedron with four edges a*sqrt(3) and two opposite
// edges a*sqrt(2), inscribed in a sphere of radius a about the origin. Its
// Fermat point is the origin, with central angles 90, 90, 120, 120, 120, 120
// degrees.
Tetrahedron natural_ft_tetrahedron(double a);

// The interior angle pairing: arccos((-1 - cos omega)/2), in (pi/2, pi).
// Throws DomainError unless omega is in (0, pi).
double phi_from_omega(double omega);

// Inputs of the symmetric-family constructor: edge a12, apex angle omega
// (radians) subtended by A1A2 at the Fermat point, and edges a13 = a23 and
// a34.
struct ClassParameters {
    double a12 = 0.0;
    double omega = 0.0;
    double a13 = 0.0;
    double a34 = 0.0;
};

// Constructor output: distances from the Fermat point to the vertices
// (x = y to A1/A2, z to A3, d to A4), the paired angle phi, and the implied
// edge a14 = a24. Satisfies the cosine laws
//   a12^2 = 2x^2(1 - cos omega)
//   a13^2 = x^2 + z^2 - 2xz cos phi
//   a34^2 = z^2 + d^2 - 2zd cos omega
//   a14^2 = x^2 + d^2 - 2xd cos phi
struct DerivedConfiguration {
    ClassParameters params;
    double x = 0.0;
    double z = 0.0;
    double d = 0.0;
    double phi = 0.0;
    double a14 = 0.0;
};

// Solves the two quadratics of the construction, taking the "+" root of
// each. Throws ConstructError with code NoRealZ, NonpositiveZ, NoRealD or
// NonpositiveD when the parameters are inadmissible, DomainError when they
// are outside the basic ranges (lengths > 0, omega in (0, pi)).
DerivedConfiguration construct_class(const ClassParameters& params);

struct EmbeddedTetrahedron {
    Tetrahedron tetrahedron;
    Point3 fermat_point;  // always the origin
};

// Places the configuration in coordinates with the Fermat point at the
// origin: A_i = dist_i * u_i with u1 = (1,0,0), u2 in the xy-plane, and
// A3/A4 mirror-symmetric about it (A3 above). The unit vectors balance and
// all six edge lengths are reproduced. Throws EmbeddingInfeasible when the
// angle set is inconsistent.
EmbeddedTetrahedron embed(const DerivedConfiguration& cfg);

// Moves each vertex along its ray from a0 by the matching factor. For an
// interior Fermat point a0 and factors that keep the vertex test negative,
// the Fermat point of the result is still a0. Throws FactorsNotPositive.
Tetrahedron ray_scale(const Tetrahedron& t, const Point3& a0,
                      const std::array<double, 4>& factors);

}  // namespace fermat
