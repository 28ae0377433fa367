#pragma once

#include <optional>
#include <vector>

#include "fermat/geometry.hpp"

namespace fermat {

struct SolverConfig {
    double step_tolerance = 1e-13;     // relative to the tetrahedron diameter
    double residual_tolerance = 1e-10;  // on the balancing (gradient) norm
    int max_iterations = 10000;
    std::optional<Point3> start;  // nullopt: start at the centroid
    // When set, receives the objective at the start point and after every
    // accepted step, in order.
    std::vector<double>* objective_trace = nullptr;
};

enum class SolutionKind { Interior, Vertex };

struct FermatSolution {
    SolutionKind kind = SolutionKind::Interior;
    Point3 point;
    int vertex_index = 0;  // 1..4 when kind == Vertex
    double objective_value = 0.0;
    std::optional<AngleTable> angles;  // present for interior solutions
    // Interior: ||sum of unit vectors to the vertices|| at `point`.
    // Vertex: ||sum_{j!=i} u(j,i)||, the optimality certificate (<= 1).
    double balancing_residual = 0.0;
    int iterations = 0;
};

struct Classification {
    bool is_vertex = false;
    int vertex_index = 0;       // 1..4 when is_vertex
    double condition_norm = 0;  // ||sum_{j!=i} u(j,i)|| for the reported vertex
};

// Iteration ran out before the residual dropped below tolerance.
class NoConvergence : public Error {
public:
    NoConvergence(const Point3& last_iterate, double residual, int iterations)
        : Error("weiszfeld: no convergence within the iteration budget"),
          last_iterate_(last_iterate),
          residual_(residual),
          iterations_(iterations) {}
    const Point3& last_iterate() const { return last_iterate_; }
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    Point3 last_iterate_;
    double residual_;
    int iterations_;
};

// ||sum_{j!=i} u(j,i)|| -- the pull of the other vertices at A_i. A value
// <= 1 certifies that A_i itself is the Fermat point.
double vertex_pull_norm(const Tetrahedron& t, int i);

// Vertex test at each vertex in ascending order; the first vertex whose pull
// norm is <= 1 (ties within 1e-9 count as vertex) wins, otherwise the
// optimum is interior.
Classification classify(const Tetrahedron& t);

// Fixed-point map p -> (sum A_i/r_i)/(sum 1/r_i). Never increases the
// objective. Throws AtVertex when p is within 1e-14 x diameter of a vertex.
Point3 weiszfeld_step(const Tetrahedron& t, const Point3& p);

// sum (p - A_i)/r_i; its norm is the balancing residual. Throws AtVertex.
Point3 gradient(const Tetrahedron& t, const Point3& p);

// Full solve: classify, then iterate weiszfeld_step until the step length
// drops below step_tolerance x diameter. Throws NoConvergence if the
// balancing residual is still above residual_tolerance afterwards.
FermatSolution solve(const Tetrahedron& t, const SolverConfig& cfg = {});

}  // namespace fermat
