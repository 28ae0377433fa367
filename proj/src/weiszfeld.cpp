#include "fermat/weiszfeld.hpp"

#include <cmath>

namespace fermat {

namespace {

constexpr double kClassifyTieTolerance = 1e-9;
constexpr double kVertexProximityRel = 1e-14;  // of the diameter
constexpr double kVertexEscapeRel = 1e-10;     // displacement off a vertex

// Index (1..4) of a vertex within proximity of p, or 0.
int vertex_near(const Tetrahedron& t, const Point3& p, double diameter) {
    for (int i = 1; i <= 4; ++i) {
        if (distance(p, t.vertex(i)) <= kVertexProximityRel * diameter) {
            return i;
        }
    }
    return 0;
}

// Sum of unit vectors from A_i towards the other vertices.
Point3 vertex_pull(const Tetrahedron& t, int i) {
    Point3 sum;
    for (int j = 1; j <= 4; ++j) {
        if (j != i) {
            sum += unit_vector(t.vertex(i), t.vertex(j)).vec();
        }
    }
    return sum;
}

FermatSolution make_vertex_solution(const Tetrahedron& t, int i, int iterations) {
    FermatSolution s;
    s.kind = SolutionKind::Vertex;
    s.vertex_index = i;
    s.point = t.vertex(i);
    s.objective_value = objective(t, s.point);
    s.balancing_residual = vertex_pull_norm(t, i);
    s.iterations = iterations;
    return s;
}

}  // namespace

double vertex_pull_norm(const Tetrahedron& t, int i) {
    return norm(vertex_pull(t, i));
}

Classification classify(const Tetrahedron& t) {
    for (int i = 1; i <= 4; ++i) {
        const double n = vertex_pull_norm(t, i);
        if (n <= 1.0 + kClassifyTieTolerance) {
            return {true, i, n};
        }
    }
    return {false, 0, 0.0};
}

Point3 weiszfeld_step(const Tetrahedron& t, const Point3& p) {
    const double diameter = t.diameter();
    if (const int i = vertex_near(t, p, diameter)) {
        throw AtVertex(i, "weiszfeld_step: point coincides with a vertex");
    }
    Point3 weighted;
    double inv_sum = 0.0;
    for (int i = 1; i <= 4; ++i) {
        const double r = distance(p, t.vertex(i));
        weighted += t.vertex(i) / r;
        inv_sum += 1.0 / r;
    }
    return weighted / inv_sum;
}

Point3 gradient(const Tetrahedron& t, const Point3& p) {
    const double diameter = t.diameter();
    if (const int i = vertex_near(t, p, diameter)) {
        throw AtVertex(i, "gradient: point coincides with a vertex");
    }
    Point3 g;
    for (int i = 1; i <= 4; ++i) {
        const Point3 d = p - t.vertex(i);
        g += d / norm(d);
    }
    return g;
}

FermatSolution solve(const Tetrahedron& t, const SolverConfig& cfg) {
    if (cfg.step_tolerance <= 0.0 || cfg.residual_tolerance <= 0.0 || cfg.max_iterations < 1) {
        throw DomainError("solve: tolerances must be positive and max_iterations >= 1");
    }

    const Classification cls = classify(t);
    if (cls.is_vertex) {
        return make_vertex_solution(t, cls.vertex_index, 0);
    }

    const double diameter = t.diameter();
    Point3 p = cfg.start.value_or(t.centroid());
    int iterations = 0;
    if (cfg.objective_trace) {
        cfg.objective_trace->push_back(objective(t, p));
    }

    while (iterations < cfg.max_iterations) {
        // The fixed-point map is undefined at vertices. Landing on one is
        // either a genuine vertex optimum or a transient that a small move
        // along the descent direction resolves.
        if (const int i = vertex_near(t, p, diameter)) {
            const Point3 pull = vertex_pull(t, i);
            if (norm(pull) <= 1.0 + kClassifyTieTolerance) {
                return make_vertex_solution(t, i, iterations);
            }
            p = t.vertex(i) + UnitVector3::normalized(pull).vec() * (kVertexEscapeRel * diameter);
        }
        const Point3 next = weiszfeld_step(t, p);
        const double step = distance(p, next);
        p = next;
        ++iterations;
        if (cfg.objective_trace) {
            cfg.objective_trace->push_back(objective(t, p));
        }
        if (step < cfg.step_tolerance * diameter) {
            break;
        }
    }

    const double residual = norm(gradient(t, p));
    if (residual > cfg.residual_tolerance) {
        throw NoConvergence(p, residual, iterations);
    }

    FermatSolution s;
    s.kind = SolutionKind::Interior;
    s.point = p;
    s.objective_value = objective(t, p);
    s.angles = vertex_angles(t, p);
    s.balancing_residual = residual;
    s.iterations = iterations;
    return s;
}

}  // namespace fermat
