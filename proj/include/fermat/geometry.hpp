#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "fermat/errors.hpp"

namespace fermat {

// Coordinates in 3-space. Doubles as a displacement vector; lengths are in a
// consistent arbitrary unit.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3() = default;
    Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Point3 operator-() const { return {-x, -y, -z}; }
    Point3& operator+=(const Point3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Point3 operator*(double s, const Point3& p) { return p * s; }

inline double dot(const Point3& a, const Point3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

double distance(const Point3& p, const Point3& q);

// Direction in 3-space, length 1 within 1e-12.
class UnitVector3 {
public:
    // Throws DomainError unless v has unit norm within 1e-12.
    explicit UnitVector3(const Point3& v);

    // Normalizes v. Throws CoincidentPoints when v is (numerically) zero.
    static UnitVector3 normalized(const Point3& v);

    double ux() const { return v_.x; }
    double uy() const { return v_.y; }
    double uz() const { return v_.z; }
    const Point3& vec() const { return v_; }

private:
    struct Unchecked {};
    UnitVector3(const Point3& v, Unchecked) : v_(v) {}
    Point3 v_;
};

// Unit direction from `from` towards `to`. Throws CoincidentPoints when the
// separation is below 1e-12 relative to the points' magnitude.
UnitVector3 unit_vector(const Point3& from, const Point3& to);

// Four labeled vertices A1..A4. Construction rejects coplanar or coincident
// quadruples: |signed volume| must exceed 1e-10 x (longest edge)^3.
class Tetrahedron {
public:
    explicit Tetrahedron(const std::array<Point3, 4>& vertices);
    Tetrahedron(const Point3& a1, const Point3& a2, const Point3& a3, const Point3& a4);

    // index is 1-based (A1..A4), matching the pairing conventions below.
    const Point3& vertex(int index) const;
    const std::array<Point3, 4>& vertices() const { return v_; }

    double edge_length(int i, int j) const;  // 1-based, i != j
    // Longest edge; used as the length scale ("diameter") for tolerances.
    double diameter() const;
    Point3 centroid() const;

private:
    std::array<Point3, 4> v_;
};

// (1/6) det of the edge-vector matrix; sign flips under odd vertex permutation.
double signed_volume(const Point3& a1, const Point3& a2, const Point3& a3, const Point3& a4);
double signed_volume(const Tetrahedron& t);

// Sum of distances from p to the four vertices -- the quantity the
// Fermat-Torricelli point minimizes.
double objective(const Tetrahedron& t, const Point3& p);

// The six angles A_i-p-A_j, keyed by the unordered vertex pair {i,j}.
// Opposite-edge pairs are {12,34}, {13,24}, {14,23}.
class AngleTable {
public:
    double at(int i, int j) const { return angles_[pair_index(i, j)]; }
    void set(int i, int j, double radians) { angles_[pair_index(i, j)] = radians; }

    // {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}
    static const std::array<std::pair<int, int>, 6>& pairs();

private:
    static int pair_index(int i, int j);
    std::array<double, 6> angles_{};
};

// Angles subtended at p by each vertex pair. Dot products are clamped to
// [-1,1] before acos. Throws CoincidentPoints when p equals a vertex.
AngleTable vertex_angles(const Tetrahedron& t, const Point3& p);

struct CircumsphereData {
    Point3 center;
    double radius = 0.0;
};

// Center and radius of the sphere through all four vertices. Throws
// DegenerateTetrahedron if the equidistance system is singular.
CircumsphereData circumcenter(const Tetrahedron& t);

// Coordinates of p in the barycentric frame of t; sums to 1. Strictly
// positive components mean p is strictly inside.
std::array<double, 4> barycentric_coordinates(const Tetrahedron& t, const Point3& p);

inline double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

}  // namespace fermat
