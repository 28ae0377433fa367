#include "fermat/json_io.hpp"

#include <cstdio>

namespace fermat {

namespace {

Point3 point_from_json(const Json& a) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
        !a[2].is_number()) {
        throw DomainError("point JSON must be an array of three numbers");
    }
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_string(std::string& out, const std::string& s) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

bool all_primitive(const Json& j) {
    for (const auto& e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void write_value(const Json& j, std::string& out, int indent) {
    using value_t = Json::value_t;
    switch (j.type()) {
        case value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out.append(indent + 2, ' ');
                append_string(out, it.key());
                out += ": ";
                write_value(it.value(), out, indent + 2);
            }
            out += '\n';
            out.append(indent, ' ');
            out += '}';
            return;
        }
        case value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (all_primitive(j)) {
                out += '[';
                bool first = true;
                for (const auto& e : j) {
                    if (!first) {
                        out += ", ";
                    }
                    first = false;
                    write_value(e, out, indent);
                }
                out += ']';
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out.append(indent + 2, ' ');
                write_value(e, out, indent + 2);
            }
            out += '\n';
            out.append(indent, ' ');
            out += ']';
            return;
        }
        case value_t::string:
            append_string(out, j.get<std::string>());
            return;
        case value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case value_t::number_float:
            append_double(out, j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

}  // namespace

Json tetrahedron_to_json(const Tetrahedron& t) {
    Json vertices = Json::array();
    for (int i = 1; i <= 4; ++i) {
        vertices.push_back(point_to_json(t.vertex(i)));
    }
    Json j;
    j["vertices"] = std::move(vertices);
    return j;
}

Tetrahedron tetrahedron_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw DomainError("tetrahedron JSON must carry a \"vertices\" array of four points");
    }
    const Json& vs = j["vertices"];
    if (!vs.is_array() || vs.size() != 4) {
        throw DomainError("tetrahedron JSON must carry a \"vertices\" array of four points");
    }
    std::array<Point3, 4> pts;
    for (int i = 0; i < 4; ++i) {
        pts[i] = point_from_json(vs[i]);
    }
    return Tetrahedron(pts);
}

std::optional<Point3> fermat_point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("fermat_point")) {
        return std::nullopt;
    }
    return point_from_json(j["fermat_point"]);
}

Json point_to_json(const Point3& p) {
    return Json::array({p.x, p.y, p.z});
}

Json angle_table_to_json(const AngleTable& angles, AngleUnit unit) {
    Json j;
    for (const auto& [a, b] : AngleTable::pairs()) {
        const double value = angles.at(a, b);
        j[std::to_string(a) + std::to_string(b)] =
            unit == AngleUnit::Deg ? rad_to_deg(value) : value;
    }
    return j;
}

Json solution_to_json(const FermatSolution& s, AngleUnit unit) {
    Json j;
    const bool vertex = s.kind == SolutionKind::Vertex;
    j["kind"] = vertex ? "vertex" : "interior";
    j["point"] = point_to_json(s.point);
    j["vertex_index"] = vertex ? Json(s.vertex_index) : Json(nullptr);
    j["objective"] = s.objective_value;
    j["balancing_residual"] = s.balancing_residual;
    j["iterations"] = s.iterations;
    const char* key = unit == AngleUnit::Deg ? "angles_deg" : "angles_rad";
    j[key] = s.angles ? angle_table_to_json(*s.angles, unit) : Json(nullptr);
    return j;
}

ClassParameters class_parameters_from_json(const Json& j) {
    for (const char* key : {"a12", "omega_deg", "a13", "a34"}) {
        if (!j.is_object() || !j.contains(key) || !j[key].is_number()) {
            throw DomainError(std::string("class parameters need a numeric \"") + key + "\"");
        }
    }
    ClassParameters p;
    p.a12 = j["a12"].get<double>();
    p.omega = deg_to_rad(j["omega_deg"].get<double>());
    p.a13 = j["a13"].get<double>();
    p.a34 = j["a34"].get<double>();
    return p;
}

Json derived_configuration_to_json(const DerivedConfiguration& cfg, AngleUnit unit) {
    const bool deg = unit == AngleUnit::Deg;
    Json j;
    j["a12"] = cfg.params.a12;
    j[deg ? "omega_deg" : "omega_rad"] = deg ? rad_to_deg(cfg.params.omega) : cfg.params.omega;
    j["a13"] = cfg.params.a13;
    j["a34"] = cfg.params.a34;
    j["x"] = cfg.x;
    j["z"] = cfg.z;
    j["d"] = cfg.d;
    j[deg ? "phi_deg" : "phi_rad"] = deg ? rad_to_deg(cfg.phi) : cfg.phi;
    j["a14"] = cfg.a14;
    return j;
}

Json embedded_to_json(const EmbeddedTetrahedron& et) {
    Json j = tetrahedron_to_json(et.tetrahedron);
    j["fermat_point"] = point_to_json(et.fermat_point);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["balancing_residual"] = r.balancing_residual;
    if (r.spira_synge) {
        j["spira_synge"] = Json::array(
            {(*r.spira_synge)[0], (*r.spira_synge)[1], (*r.spira_synge)[2], (*r.spira_synge)[3]});
    } else {
        j["spira_synge"] = nullptr;
    }
    j["convexity_violations"] = r.convexity_violations;
    j["explicit_numeric_gap"] = r.explicit_numeric_gap ? Json(*r.explicit_numeric_gap) : Json(nullptr);
    const bool vertex = r.solution.kind == SolutionKind::Vertex;
    j["solution_kind"] = vertex ? "vertex" : "interior";
    j["vertex_index"] = vertex ? Json(r.solution.vertex_index) : Json(nullptr);
    j["point"] = point_to_json(r.solution.point);
    return j;
}

std::string dump_json(const Json& j) {
    std::string out;
    write_value(j, out, 0);
    return out;
}

}  // namespace fermat
