#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two points coincide where a direction is required.
class CoincidentPoints : public Error {
public:
    using Error::Error;
};

// Vertices are coplanar (or coincident) beyond tolerance.
class DegenerateTetrahedron : public Error {
public:
    using Error::Error;
};

// An argument is outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Query point coincides with a vertex; the quantity is undefined there.
class AtVertex : public Error {
public:
    AtVertex(int vertex_index, const std::string& what)
        : Error(what), vertex_index_(vertex_index) {}
    int vertex_index() const { return vertex_index_; }

private:
    int vertex_index_;  // 1..4
};

class NotIsosceles : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class NotCubic : public Error {
public:
    using Error::Error;
};

class FactorsNotPositive : public Error {
public:
    using Error::Error;
};

// Angle data does not describe a realizable direction set.
class EmbeddingInfeasible : public Error {
public:
    using Error::Error;
};

// A guarded impossibility happened anyway; indicates a library bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// Parameter set rejected by the quadratic-class constructor. `code()` is one
// of "NoRealZ", "NonpositiveZ", "NoRealD", "NonpositiveD".
class ConstructError : public Error {
public:
    ConstructError(std::string code, const std::string& what)
        : Error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace fermat
