#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeg/oracle.hpp"
#include "skeg/skeg.hpp"

namespace skeg {

/// Parse {"vertices": [[x,y],...]} and validate. Parse/shape errors throw
/// std::runtime_error; geometric rejection throws the validate_polygon types.
Polygon load_polygon_file(const std::string& path);

/// Parse {"sites": [[x,y],...]}. Rejects coordinate duplicates within
/// kCrossTol (general-position guard).
std::vector<Point> load_sites_file(const std::string& path);

void save_polygon_file(const std::string& path, const std::vector<Point>& vertices);
void save_sites_file(const std::string& path, const std::vector<Point>& sites);

/// Timing block for the result JSON. Reported but excluded from
/// reproducibility comparisons.
struct Timings {
    double preprocessMs = 0.0;
    double solveMs = 0.0;
};

/// Serialize a result to JSON. Numbers are printed with 17 significant
/// digits so identical runs are byte-identical (timings aside) and values
/// round-trip exactly. `algorithmLabel` overrides the enum name (the CLI
/// reports oracle flavors); `bracket` adds the oracle bracket object.
std::string result_to_json(const SkegResult& r, int k, const Timings& timings,
                           const std::string& algorithmLabel = "",
                           const std::optional<OptBracket>& bracket = std::nullopt);

/// One-line machine-readable error object for stderr.
std::string error_to_json(const std::string& kind, const std::string& message);

/// Render polygon, sites, and the disc (boundary sampled at 256 chord points
/// by binary search along rays from the center) to an SVG file. Draws the
/// decomposition diagonals when a tree is given.
void write_svg(const std::string& path, const Polygon& p, const Triangulation& t,
               const std::vector<Point>& sites, const Disc& disc,
               const DecompTree* tree = nullptr);

std::string format_double(double v); // %.17g, the shared number format

} // namespace skeg
