#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "fermat/geometry.hpp"
#include "support/oracles.hpp"

using namespace fermat;

namespace {

Tetrahedron unit_corner() {
    return Tetrahedron(Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1});
}

Tetrahedron regular_reference() {
    return Tetrahedron(Point3{1, 1, 1}, Point3{1, -1, -1}, Point3{-1, 1, -1}, Point3{-1, -1, 1});
}

}  // namespace

TEST_CASE("point arithmetic") {
    const Point3 a{1, 2, 3};
    const Point3 b{-1, 0.5, 2};
    CHECK((a + b).x == doctest::Approx(0.0));
    CHECK((a - b).y == doctest::Approx(1.5));
    CHECK((a * 2.0).z == doctest::Approx(6.0));
    CHECK((2.0 * a).z == doctest::Approx(6.0));
    CHECK((a / 2.0).x == doctest::Approx(0.5));
    CHECK((-a).y == doctest::Approx(-2.0));
    CHECK(dot(a, b) == doctest::Approx(-1.0 + 1.0 + 6.0));
    const Point3 c = cross(Point3{1, 0, 0}, Point3{0, 1, 0});
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == 1.0);
    CHECK(norm(Point3{3, 4, 0}) == doctest::Approx(5.0));
    CHECK(distance(Point3{1, 1, 1}, Point3{1, 1, 3}) == doctest::Approx(2.0));
    CHECK(Point3{1, 2, 3}.is_finite());
    CHECK_FALSE(Point3{1, std::nan(""), 3}.is_finite());
}

TEST_CASE("unit vectors validate their length") {
    CHECK_NOTHROW(UnitVector3(Point3{1, 0, 0}));
    CHECK_THROWS_AS(UnitVector3(Point3{1, 1, 0}), DomainError);
    const UnitVector3 u = UnitVector3::normalized(Point3{3, 4, 0});
    CHECK(u.ux() == doctest::Approx(0.6));
    CHECK(u.uy() == doctest::Approx(0.8));
    CHECK_THROWS_AS(UnitVector3::normalized(Point3{0, 0, 0}), CoincidentPoints);

    const UnitVector3 v = unit_vector(Point3{1, 1, 1}, Point3{1, 1, 3});
    CHECK(v.uz() == doctest::Approx(1.0));
    CHECK_THROWS_AS(unit_vector(Point3{2, 2, 2}, Point3{2, 2, 2}), CoincidentPoints);
}

TEST_CASE("tetrahedron construction and accessors") {
    const Tetrahedron t = unit_corner();
    CHECK(t.vertex(1).x == 0.0);
    CHECK(t.vertex(4).z == 1.0);
    CHECK_THROWS_AS(t.vertex(0), DomainError);
    CHECK_THROWS_AS(t.vertex(5), DomainError);
    CHECK(t.edge_length(1, 2) == doctest::Approx(1.0));
    CHECK(t.edge_length(2, 3) == doctest::Approx(std::numbers::sqrt2));
    CHECK(t.edge_length(3, 2) == t.edge_length(2, 3));
    CHECK(t.diameter() == doctest::Approx(std::numbers::sqrt2));
    const Point3 c = t.centroid();
    CHECK(c.x == doctest::Approx(0.25));
    CHECK(c.y == doctest::Approx(0.25));
    CHECK(c.z == doctest::Approx(0.25));
}

TEST_CASE("degenerate vertex sets are rejected") {
    const Point3 a{0, 0, 0};
    const Point3 b{1, 0, 0};
    const Point3 c{0, 1, 0};
    CHECK_THROWS_AS(Tetrahedron(a, b, c, Point3{0.3, 0.7, 0}), DegenerateTetrahedron);
    CHECK_THROWS_AS(Tetrahedron(a, b, c, c), DegenerateTetrahedron);
    CHECK_THROWS_AS(Tetrahedron(a, b, c, Point3{0, 1, std::nan("")}), DomainError);

    // The flatness gate compares |volume| against 1e-10 x diameter^3; an
    // apex height of 1e-10 is under it, 1e-6 is comfortably over.
    CHECK_THROWS_AS(Tetrahedron(a, b, c, Point3{0.3, 0.3, 1e-10}), DegenerateTetrahedron);
    CHECK_NOTHROW(Tetrahedron(a, b, c, Point3{0.3, 0.3, 1e-6}));
}

TEST_CASE("signed volume") {
    CHECK(signed_volume(unit_corner()) == doctest::Approx(1.0 / 6.0));
    // Swapping two vertices flips the orientation.
    const Tetrahedron swapped(Point3{1, 0, 0}, Point3{0, 0, 0}, Point3{0, 1, 0},
                              Point3{0, 0, 1});
    CHECK(signed_volume(swapped) == doctest::Approx(-1.0 / 6.0));
}

TEST_CASE("objective sums the four distances") {
    const Tetrahedron t = regular_reference();
    CHECK(objective(t, Point3{0, 0, 0}) == doctest::Approx(4.0 * std::numbers::sqrt3));
    CHECK(objective(t, t.vertex(1)) ==
          doctest::Approx(t.edge_length(1, 2) + t.edge_length(1, 3) + t.edge_length(1, 4)));
}

TEST_CASE("angle table pairing") {
    AngleTable a;
    a.set(1, 2, 0.5);
    CHECK(a.at(1, 2) == 0.5);
    CHECK(a.at(2, 1) == 0.5);
    a.set(4, 3, 1.25);
    CHECK(a.at(3, 4) == 1.25);
    CHECK(AngleTable::pairs().size() == 6);
    CHECK_THROWS_AS(a.at(1, 1), DomainError);
    CHECK_THROWS_AS(a.at(0, 2), DomainError);
}

TEST_CASE("vertex angles") {
    const Tetrahedron t = regular_reference();
    const AngleTable a = vertex_angles(t, Point3{0, 0, 0});
    const double equiangular = std::acos(-1.0 / 3.0);
    for (const auto& [i, j] : AngleTable::pairs()) {
        CHECK(a.at(i, j) == doctest::Approx(equiangular).epsilon(1e-12));
    }
    CHECK_THROWS_AS(vertex_angles(t, t.vertex(2)), CoincidentPoints);
}

TEST_CASE("circumcenter") {
    SUBCASE("regular reference tetrahedron") {
        const CircumsphereData c = circumcenter(regular_reference());
        CHECK(norm(c.center) <= 1e-12);
        CHECK(c.radius == doctest::Approx(std::numbers::sqrt3));
    }
    SUBCASE("equidistance on random tetrahedra") {
        std::mt19937_64 rng(7);
        for (int k = 0; k < 20; ++k) {
            const Tetrahedron t = oracles::random_tetrahedron(rng);
            const CircumsphereData c = circumcenter(t);
            for (int i = 1; i <= 4; ++i) {
                CHECK(distance(c.center, t.vertex(i)) == doctest::Approx(c.radius).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("barycentric coordinates") {
    const Tetrahedron t = unit_corner();
    SUBCASE("centroid is the equal-weight point") {
        const auto w = barycentric_coordinates(t, t.centroid());
        for (const double wi : w) {
            CHECK(wi == doctest::Approx(0.25));
        }
    }
    SUBCASE("vertices are the basis points") {
        for (int i = 0; i < 4; ++i) {
            const auto w = barycentric_coordinates(t, t.vertices()[i]);
            for (int j = 0; j < 4; ++j) {
                CHECK(w[j] == doctest::Approx(i == j ? 1.0 : 0.0));
            }
        }
    }
    SUBCASE("weights sum to one, outside points go negative") {
        std::mt19937_64 rng(11);
        for (int k = 0; k < 20; ++k) {
            const Point3 p = oracles::random_point(rng, -2.0, 2.0);
            const auto w = barycentric_coordinates(t, p);
            CHECK(w[0] + w[1] + w[2] + w[3] == doctest::Approx(1.0));
        }
        const auto outside = barycentric_coordinates(t, Point3{-1, -1, -1});
        CHECK(*std::min_element(outside.begin(), outside.end()) < 0.0);
    }
}

TEST_CASE("degree and radian conversions invert each other") {
    CHECK(deg_to_rad(180.0) == doctest::Approx(std::numbers::pi));
    CHECK(rad_to_deg(std::numbers::pi / 2.0) == doctest::Approx(90.0));
    CHECK(rad_to_deg(deg_to_rad(106.654)) == doctest::Approx(106.654).epsilon(1e-14));
}
