#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fit3d/fit.hpp"
#include "fit3d/io.hpp"
#include "fit3d/version.hpp"

namespace {

fit3d::Format to_format(const std::string& name) {
    if (name == "csv") return fit3d::Format::Csv;
    if (name == "ws") return fit3d::Format::Whitespace;
    return fit3d::Format::Auto;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(const fit3d::Vec3& v) {
    return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")";
}

void print_summary(const fit3d::FitReport& report) {
    const fit3d::FitResult& r = report.result;
    std::cout << "source           " << report.source << "\n"
              << "points           " << r.n_points << "\n"
              << "centroid         " << fmt(r.centroid) << "\n"
              << "direction        " << fmt(r.direction) << "\n"
              << "moment           " << fmt(r.moment) << "\n"
              << "eigenvalues      (" << fmt(r.eigenvalues[0]) << ", " << fmt(r.eigenvalues[1])
              << ", " << fmt(r.eigenvalues[2]) << ")\n"
              << "mean sq dist     " << fmt(r.mean_square_distance) << "\n"
              << "rms dist         " << fmt(r.rms_distance) << "\n"
              << "classification   " << fit3d::to_string(r.classification) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal-distance straight-line fit for 3D point clouds"};
    app.set_version_flag("--version", std::string(fit3d::kVersion));

    std::string input;
    std::string format = "auto";
    double tol_degeneracy = 1e-6;
    bool strict = false;
    std::string json_out;
    std::string svg_out;
    bool pretty = false;

    app.add_option("--input,-i", input, "Point file (CSV or whitespace), or - for stdin")
        ->required();
    app.add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"csv", "ws", "auto"}))
        ->capture_default_str();
    app.add_option("--tol-degeneracy", tol_degeneracy,
                   "Relative eigenvalue-gap tolerance for degeneracy detection")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--strict", strict, "Fail on degenerate (non-unique direction) configurations");
    app.add_option("--json", json_out, "Write the JSON report to this path, or - for stdout");
    app.add_option("--svg", svg_out, "Write projection plots to this SVG path");
    app.add_flag("--pretty", pretty, "Indent the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const fit3d::InputSpec spec{input, to_format(format)};
        const fit3d::PointCloud cloud = fit3d::parse_points(spec);
        const fit3d::FitConfig config{tol_degeneracy, strict};
        const fit3d::FitResult result = fit3d::fit_line(cloud, config);
        const fit3d::FitReport report =
            fit3d::make_report(result, input == "-" ? "<stdin>" : input);

        if (result.classification != fit3d::SpectrumClass::Unique)
            std::cerr << "note: degenerate configuration ("
                      << fit3d::to_string(result.classification)
                      << "): the optimal direction is not unique\n";

        if (json_out == "-") {
            std::cout << fit3d::emit_report(report, pretty);
        } else {
            print_summary(report);
            if (!json_out.empty()) {
                std::ofstream file(json_out, std::ios::binary);
                if (!file) throw fit3d::IoError("cannot open " + json_out + " for writing");
                file << fit3d::emit_report(report, pretty);
                file.flush();
                if (!file) throw fit3d::IoError("write failure on " + json_out);
            }
        }
        if (!svg_out.empty()) fit3d::emit_svg(cloud, result, svg_out);
        return 0;
    } catch (const fit3d::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fit3d::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fit3d::DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
