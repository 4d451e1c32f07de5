#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fit3d/fit.hpp"
#include "fit3d/point_cloud.hpp"

namespace fit3d {

enum class Format { Csv, Whitespace, Auto };

struct InputSpec {
    std::string path;  // "-" reads standard input
    Format format = Format::Auto;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(message), line_(line) {}

    /// 1-based line number of the offending input line; 0 when not line-specific.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One point per data line, three numeric fields each. Lines starting with '#'
/// and blank lines are skipped. A first data line whose fields are not all
/// numeric is treated as a header and skipped. Format::Auto resolves to Csv if
/// the first data line contains a comma, else Whitespace. Decimal points only,
/// scientific notation accepted, independent of the process locale.
PointCloud parse_points(std::istream& in, Format format,
                        const std::string& source_name = "<stream>");
PointCloud parse_points(const InputSpec& spec);

/// Serializable mirror of a fit result plus input metadata.
struct FitReport {
    FitResult result;
    std::string source;
    std::string version;
};

FitReport make_report(const FitResult& result, std::string source);

/// JSON text with fixed key order: n_points, centroid, direction, moment,
/// eigenvalues, mean_square_distance, rms_distance, classification, source,
/// version. Numbers round-trip losslessly.
std::string emit_report(const FitReport& report, bool pretty = false);

/// One SVG with three axis-aligned orthographic projections (xy, xz, yz):
/// points as circles, the fitted line clipped to the point bounding box
/// inflated by 10%, and a legend carrying the rms distance and classification.
std::string render_svg(const PointCloud& cloud, const FitResult& result);
void emit_svg(const PointCloud& cloud, const FitResult& result, const std::string& path);

}  // namespace fit3d
