#include "fit3d/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fit3d/version.hpp"

namespace fit3d {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_field(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return false;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line, bool csv) {
    std::vector<std::string_view> fields;
    if (csv) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(trim(line.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

std::string location(const std::string& source, std::size_t line) {
    return source + ": line " + std::to_string(line) + ": ";
}

}  // namespace

PointCloud parse_points(std::istream& in, Format format, const std::string& source_name) {
    PointCloud cloud;
    std::string raw;
    std::size_t lineno = 0;
    bool csv = format == Format::Csv;
    bool format_resolved = format != Format::Auto;
    bool saw_first_data_line = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line{raw};
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (!format_resolved) {
            csv = line.find(',') != std::string_view::npos;
            format_resolved = true;
        }
        const std::vector<std::string_view> fields = split_fields(line, csv);

        if (!saw_first_data_line) {
            saw_first_data_line = true;
            bool all_numeric = !fields.empty();
            for (const std::string_view f : fields) {
                double ignored;
                if (!parse_field(f, ignored)) {
                    all_numeric = false;
                    break;
                }
            }
            if (!all_numeric) continue;  // header row
        }

        if (fields.size() != 3)
            throw ParseError(location(source_name, lineno) + "expected 3 fields, found " +
                                 std::to_string(fields.size()),
                             lineno);
        std::array<double, 3> value{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (!parse_field(fields[k], value[k]))
                throw ParseError(location(source_name, lineno) + "non-numeric field '" +
                                     std::string(fields[k]) + "'",
                                 lineno);
            if (!std::isfinite(value[k]))
                throw ParseError(location(source_name, lineno) + "non-finite coordinate", lineno);
        }
        cloud.points.push_back({value[0], value[1], value[2]});
    }

    if (in.bad()) throw IoError("read failure on " + source_name);
    if (cloud.empty()) throw ParseError(source_name + ": empty point cloud");
    return cloud;
}

PointCloud parse_points(const InputSpec& spec) {
    if (spec.path == "-") return parse_points(std::cin, spec.format, "<stdin>");
    std::ifstream file(spec.path);
    if (!file) throw IoError("cannot open " + spec.path);
    return parse_points(file, spec.format, spec.path);
}

FitReport make_report(const FitResult& result, std::string source) {
    return {result, std::move(source), std::string(kVersion)};
}

std::string emit_report(const FitReport& report, bool pretty) {
    const FitResult& r = report.result;
    nlohmann::ordered_json j;
    j["n_points"] = r.n_points;
    j["centroid"] = {r.centroid.x, r.centroid.y, r.centroid.z};
    j["direction"] = {r.direction.x, r.direction.y, r.direction.z};
    j["moment"] = {r.moment.x, r.moment.y, r.moment.z};
    j["eigenvalues"] = {r.eigenvalues[0], r.eigenvalues[1], r.eigenvalues[2]};
    j["mean_square_distance"] = r.mean_square_distance;
    j["rms_distance"] = r.rms_distance;
    j["classification"] = std::string(to_string(r.classification));
    j["source"] = report.source;
    j["version"] = report.version;
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace fit3d
