#include "fermat/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fermat {

namespace {

constexpr double kUnitNormTolerance = 1e-12;
constexpr double kCoincidenceRelTolerance = 1e-12;
constexpr double kFlatnessRelTolerance = 1e-10;  // |volume| vs (longest edge)^3

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

}  // namespace

double distance(const Point3& p, const Point3& q) { return norm(p - q); }

UnitVector3::UnitVector3(const Point3& v) : v_(v) {
    if (std::abs(norm(v) - 1.0) > kUnitNormTolerance) {
        throw DomainError("UnitVector3: components are not unit length");
    }
}

UnitVector3 UnitVector3::normalized(const Point3& v) {
    const double n = norm(v);
    if (n <= 0.0 || !std::isfinite(n)) {
        throw CoincidentPoints("cannot normalize a zero direction");
    }
    return UnitVector3(v / n, Unchecked{});
}

UnitVector3 unit_vector(const Point3& from, const Point3& to) {
    const double scale = std::max(norm(from), norm(to));
    const double d = distance(from, to);
    if (d <= kCoincidenceRelTolerance * scale || d == 0.0) {
        throw CoincidentPoints("unit_vector: points coincide");
    }
    return UnitVector3::normalized(to - from);
}

Tetrahedron::Tetrahedron(const std::array<Point3, 4>& vertices) : v_(vertices) {
    for (const Point3& p : v_) {
        if (!p.is_finite()) {
            throw DomainError("Tetrahedron: vertex coordinates must be finite");
        }
    }
    double longest = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double e = distance(v_[i], v_[j]);
            if (e <= 0.0) {
                throw DegenerateTetrahedron("Tetrahedron: coincident vertices");
            }
            longest = std::max(longest, e);
        }
    }
    const double vol = signed_volume(v_[0], v_[1], v_[2], v_[3]);
    if (std::abs(vol) <= kFlatnessRelTolerance * longest * longest * longest) {
        throw DegenerateTetrahedron("Tetrahedron: vertices are coplanar within tolerance");
    }
}

Tetrahedron::Tetrahedron(const Point3& a1, const Point3& a2, const Point3& a3, const Point3& a4)
    : Tetrahedron(std::array<Point3, 4>{a1, a2, a3, a4}) {}

const Point3& Tetrahedron::vertex(int index) const {
    if (index < 1 || index > 4) {
        throw DomainError("Tetrahedron::vertex: index must be 1..4");
    }
    return v_[index - 1];
}

double Tetrahedron::edge_length(int i, int j) const {
    return distance(vertex(i), vertex(j));
}

double Tetrahedron::diameter() const {
    double longest = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            longest = std::max(longest, distance(v_[i], v_[j]));
        }
    }
    return longest;
}

Point3 Tetrahedron::centroid() const {
    return (v_[0] + v_[1] + v_[2] + v_[3]) / 4.0;
}

double signed_volume(const Point3& a1, const Point3& a2, const Point3& a3, const Point3& a4) {
    return dot(a2 - a1, cross(a3 - a1, a4 - a1)) / 6.0;
}

double signed_volume(const Tetrahedron& t) {
    const auto& v = t.vertices();
    return signed_volume(v[0], v[1], v[2], v[3]);
}

double objective(const Tetrahedron& t, const Point3& p) {
    double sum = 0.0;
    for (const Point3& v : t.vertices()) {
        sum += distance(p, v);
    }
    return sum;
}

const std::array<std::pair<int, int>, 6>& AngleTable::pairs() {
    static const std::array<std::pair<int, int>, 6> p = {
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return p;
}

int AngleTable::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 4 || i == j) {
        throw DomainError("AngleTable: vertex pair must be distinct indices in 1..4");
    }
    // {1,2}->0 {1,3}->1 {1,4}->2 {2,3}->3 {2,4}->4 {3,4}->5
    static constexpr int index[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return index[i - 1][j - 1];
}

AngleTable vertex_angles(const Tetrahedron& t, const Point3& p) {
    std::array<UnitVector3, 4> u = {
        unit_vector(p, t.vertex(1)), unit_vector(p, t.vertex(2)),
        unit_vector(p, t.vertex(3)), unit_vector(p, t.vertex(4))};
    AngleTable table;
    for (const auto& [i, j] : AngleTable::pairs()) {
        const double c = clamp_unit(dot(u[i - 1].vec(), u[j - 1].vec()));
        table.set(i, j, std::acos(c));
    }
    return table;
}

CircumsphereData circumcenter(const Tetrahedron& t) {
    // Equating squared distances to A1 yields a 3x3 linear system
    // 2(A_k - A1) . c = |A_k|^2 - |A1|^2, solved here by Cramer's rule.
    const auto& v = t.vertices();
    std::array<Point3, 3> rows;
    std::array<double, 3> rhs;
    for (int k = 0; k < 3; ++k) {
        rows[k] = (v[k + 1] - v[0]) * 2.0;
        rhs[k] = dot(v[k + 1], v[k + 1]) - dot(v[0], v[0]);
    }
    const double det = dot(rows[0], cross(rows[1], rows[2]));
    const double scale = t.diameter();
    if (std::abs(det) <= 1e-12 * scale * scale * scale) {
        throw DegenerateTetrahedron("circumcenter: equidistance system is singular");
    }
    const Point3 center = (cross(rows[1], rows[2]) * rhs[0] +
                           cross(rows[2], rows[0]) * rhs[1] +
                           cross(rows[0], rows[1]) * rhs[2]) /
                          det;
    return {center, distance(center, v[0])};
}

std::array<double, 4> barycentric_coordinates(const Tetrahedron& t, const Point3& p) {
    const auto& v = t.vertices();
    const double total = signed_volume(v[0], v[1], v[2], v[3]);
    const std::array<double, 4> sub = {
        signed_volume(p, v[1], v[2], v[3]), signed_volume(v[0], p, v[2], v[3]),
        signed_volume(v[0], v[1], p, v[3]), signed_volume(v[0], v[1], v[2], p)};
    return {sub[0] / total, sub[1] / total, sub[2] / total, sub[3] / total};
}

}  // namespace fermat
