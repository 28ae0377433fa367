#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fermat/classical.hpp"
#include "fermat/closed_form.hpp"
#include "fermat/json_io.hpp"
#include "fermat/verify.hpp"
#include "fermat/weiszfeld.hpp"

namespace {

using fermat::Json;

// 0 success; 1 malformed input; 2 solver or verification failure;
// 3 inadmissible construction parameters.
constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kNumericFailure = 2;
constexpr int kInadmissible = 3;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("cannot open " + path);
        }
        ss << in.rdbuf();
    }
    return ss.str();
}

void emit(const Json& j, bool text) {
    if (!text) {
        std::cout << fermat::dump_json(j) << "\n";
        return;
    }
    for (const auto& item : j.items()) {
        if (item.value().is_string()) {
            std::cout << item.key() << ": " << item.value().get<std::string>() << "\n";
        } else {
            std::cout << item.key() << ": " << fermat::dump_json(item.value()) << "\n";
        }
    }
}

// Plain OBJ-style listing: five "v" lines (vertices then the solution point),
// "l" lines for the six edges and the four spokes.
void write_scene(const std::string& path, const fermat::Tetrahedron& t,
                 const fermat::Point3& p) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    char buf[128];
    const auto vline = [&](const fermat::Point3& v) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    };
    out << "# vertices 1-4, solution point 5\n";
    for (int i = 1; i <= 4; ++i) {
        vline(t.vertex(i));
    }
    vline(p);
    for (const auto& [i, j] : fermat::AngleTable::pairs()) {
        out << "l " << i << " " << j << "\n";
    }
    for (int i = 1; i <= 4; ++i) {
        out << "l " << i << " 5\n";
    }
}

fermat::Tetrahedron tetrahedron_from_coords(const std::vector<double>& c) {
    return fermat::Tetrahedron(fermat::Point3{c[0], c[1], c[2]}, fermat::Point3{c[3], c[4], c[5]},
                               fermat::Point3{c[6], c[7], c[8]},
                               fermat::Point3{c[9], c[10], c[11]});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermat point of a tetrahedron: iterative solver, closed forms, certificates"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    bool rad = false;
    app.add_flag("--rad", rad, "emit angles in radians instead of degrees");

    auto* solve_cmd =
        app.add_subcommand("solve", "iterative Fermat point of a tetrahedron document");
    solve_cmd->fallthrough();
    std::string solve_input;
    std::vector<double> coords;
    std::string solve_scene;
    solve_cmd->add_option("input", solve_input, "tetrahedron JSON path, or - for stdin");
    solve_cmd->add_option("--coords", coords, "twelve numbers x1 y1 z1 ... z4")->expected(12);
    solve_cmd->add_option("--emit-scene", solve_scene, "write an OBJ-style listing to this path");

    auto* construct_cmd =
        app.add_subcommand("construct", "closed-form configuration from (a12, omega, a13, a34)");
    construct_cmd->fallthrough();
    std::string params_path;
    double a12 = 0.0;
    double omega_deg = 0.0;
    double a13 = 0.0;
    double a34 = 0.0;
    bool do_embed = false;
    construct_cmd->add_option("--params", params_path, "ClassParameters JSON path, or - for stdin");
    auto* opt_a12 = construct_cmd->add_option("--a12", a12, "edge A1A2");
    auto* opt_omega = construct_cmd->add_option("--omega-deg", omega_deg, "angle at the Fermat point over A1A2, degrees");
    auto* opt_a13 = construct_cmd->add_option("--a13", a13, "edge A1A3 (= A2A3)");
    auto* opt_a34 = construct_cmd->add_option("--a34", a34, "edge A3A4");
    construct_cmd->add_flag("--embed", do_embed, "also emit vertices with the Fermat point at the origin");

    auto* fixture_cmd = app.add_subcommand("fixture", "emit a named fixture with its explicit Fermat point");
    fixture_cmd->fallthrough();
    std::string fixture_name;
    std::string fixture_scene;
    fixture_cmd->add_option("name", fixture_name, "mehlhos | glastier | regular | natural")->required();
    fixture_cmd->add_option("--emit-scene", fixture_scene, "write an OBJ-style listing to this path");

    auto* verify_cmd = app.add_subcommand("verify", "certificate battery for a tetrahedron document");
    verify_cmd->fallthrough();
    std::string verify_input;
    fermat::VerificationConfig vcfg;
    verify_cmd->add_option("input", verify_input, "tetrahedron JSON path, or - for stdin")->required();
    verify_cmd->add_option("--trials", vcfg.convexity_trials, "convexity sample count")->capture_default_str();
    verify_cmd->add_option("--seed", vcfg.seed, "sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    const fermat::AngleUnit unit = rad ? fermat::AngleUnit::Rad : fermat::AngleUnit::Deg;
    const bool text = format == "text";
    const char* angles_key = rad ? "angles_rad" : "angles_deg";

    try {
        if (solve_cmd->parsed()) {
            fermat::Tetrahedron t = [&] {
                if (!coords.empty()) {
                    return tetrahedron_from_coords(coords);
                }
                if (solve_input.empty()) {
                    throw std::runtime_error("solve needs an input document or --coords");
                }
                return fermat::tetrahedron_from_json(Json::parse(read_input(solve_input)));
            }();
            const fermat::FermatSolution sol = fermat::solve(t);
            emit(fermat::solution_to_json(sol, unit), text);
            if (!solve_scene.empty()) {
                write_scene(solve_scene, t, sol.point);
            }
            return kOk;
        }

        if (construct_cmd->parsed()) {
            fermat::ClassParameters params;
            if (!params_path.empty()) {
                params = fermat::class_parameters_from_json(Json::parse(read_input(params_path)));
            } else if (*opt_a12 && *opt_omega && *opt_a13 && *opt_a34) {
                params = {a12, fermat::deg_to_rad(omega_deg), a13, a34};
            } else {
                throw std::runtime_error(
                    "construct needs --params or all of --a12 --omega-deg --a13 --a34");
            }
            fermat::DerivedConfiguration cfg;
            try {
                cfg = fermat::construct_class(params);
            } catch (const fermat::ConstructError& e) {
                Json err;
                err["error"] = e.code();
                err["message"] = e.what();
                emit(err, text);
                return kInadmissible;
            }
            Json j = fermat::derived_configuration_to_json(cfg, unit);
            if (do_embed) {
                const fermat::EmbeddedTetrahedron et = fermat::embed(cfg);
                const Json ej = fermat::embedded_to_json(et);
                j["vertices"] = ej["vertices"];
                j["fermat_point"] = ej["fermat_point"];
            }
            emit(j, text);
            return kOk;
        }

        if (fixture_cmd->parsed()) {
            fermat::Tetrahedron t = fermat::mehlhos_tetrahedron();
            fermat::Point3 p;
            if (fixture_name == "mehlhos") {
                p = fermat::mehlhos_fermat_point();
            } else if (fixture_name == "glastier") {
                t = fermat::glastier_tetrahedron();
                p = fermat::glastier_fermat_point();
            } else if (fixture_name == "regular") {
                t = fermat::Tetrahedron(fermat::Point3{1, 1, 1}, fermat::Point3{1, -1, -1},
                                        fermat::Point3{-1, 1, -1}, fermat::Point3{-1, -1, 1});
                p = fermat::regular_fermat_point(t);
            } else if (fixture_name == "natural") {
                t = fermat::natural_ft_tetrahedron(1.0);
                p = fermat::isosceles_fermat_point(t);
            } else {
                throw std::runtime_error("unknown fixture: " + fixture_name);
            }
            Json j = fermat::tetrahedron_to_json(t);
            j["point"] = fermat::point_to_json(p);
            j[angles_key] = fermat::angle_table_to_json(fermat::vertex_angles(t, p), unit);
            emit(j, text);
            if (!fixture_scene.empty()) {
                write_scene(fixture_scene, t, p);
            }
            return kOk;
        }

        // verify
        const Json doc = Json::parse(read_input(verify_input));
        const fermat::Tetrahedron t = fermat::tetrahedron_from_json(doc);
        const fermat::VerificationReport report =
            fermat::cross_validate(t, vcfg, fermat::fermat_point_from_json(doc));
        emit(fermat::report_to_json(report), text);
        return report.pass ? kOk : kNumericFailure;
    } catch (const fermat::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
