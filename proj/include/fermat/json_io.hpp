#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fermat/closed_form.hpp"
#include "fermat/verify.hpp"
#include "fermat/weiszfeld.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

enum class AngleUnit { Deg, Rad };

// Shared tetrahedron document: {"vertices": [[x,y,z] x4]}.
Json tetrahedron_to_json(const Tetrahedron& t);
Tetrahedron tetrahedron_from_json(const Json& j);

// Optional "fermat_point" member of a tetrahedron document (embeddings carry
// one); nullopt when absent.
std::optional<Point3> fermat_point_from_json(const Json& j);

Json point_to_json(const Point3& p);

// Angle table keyed "12".."34"; values in the requested unit.
Json angle_table_to_json(const AngleTable& angles, AngleUnit unit);

Json solution_to_json(const FermatSolution& s, AngleUnit unit);

// {"a12", "omega_deg", "a13", "a34"}; the angle arrives in degrees and is
// converted to radians.
ClassParameters class_parameters_from_json(const Json& j);

Json derived_configuration_to_json(const DerivedConfiguration& cfg, AngleUnit unit);

Json embedded_to_json(const EmbeddedTetrahedron& et);

Json report_to_json(const VerificationReport& r);

// Serializer used for all CLI output: floating-point numbers are printed
// with 17 significant digits so that parsing them back reproduces the exact
// double; layout is fixed, making the text deterministic for fixed input.
std::string dump_json(const Json& j);

}  // namespace fermat
