#include "skeg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "skeg/errors.hpp"

namespace skeg {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<Point> read_point_array(const json& j, const std::string& key,
                                    const std::string& path) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
        throw std::runtime_error(path + ": expected object with \"" + key + "\" array");
    }
    std::vector<Point> out;
    for (const json& entry : j[key]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw std::runtime_error(path + ": \"" + key + "\" entries must be [x, y] numbers");
        }
        out.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return out;
}

void write_point_array(const std::string& path, const std::string& key,
                       const std::vector<Point>& pts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "{\"" << key << "\": [";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ", ";
        out << '[' << format_double(pts[i].x) << ", " << format_double(pts[i].y) << ']';
    }
    out << "]}\n";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Polygon load_polygon_file(const std::string& path) {
    return validate_polygon(read_point_array(parse_file(path), "vertices", path));
}

std::vector<Point> load_sites_file(const std::string& path) {
    std::vector<Point> sites = read_point_array(parse_file(path), "sites", path);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (dist(sites[i], sites[j]) <= kCrossTol) {
                throw std::runtime_error(path + ": sites " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");
            }
        }
    }
    return sites;
}

void save_polygon_file(const std::string& path, const std::vector<Point>& vertices) {
    write_point_array(path, "vertices", vertices);
}

void save_sites_file(const std::string& path, const std::vector<Point>& sites) {
    write_point_array(path, "sites", sites);
}

std::string result_to_json(const SkegResult& r, int k, const Timings& timings,
                           const std::string& algorithmLabel,
                           const std::optional<OptBracket>& bracket) {
    const std::string name = algorithmLabel.empty() ? algo_name(r.algorithm) : algorithmLabel;
    std::ostringstream out;
    out << "{\n";
    out << "  \"algorithm\": \"" << json_escape(name) << "\",\n";
    out << "  \"k\": " << k << ",\n";
    out << "  \"center\": [" << format_double(r.disc.center.x) << ", "
        << format_double(r.disc.center.y) << "],\n";
    out << "  \"radius\": " << format_double(r.disc.radius) << ",\n";
    out << "  \"coveredCount\": " << r.coveredCount << ",\n";
    out << "  \"seed\": " << r.seed << ",\n";
    out << "  \"stats\": {\"iterations\": " << r.stats.iterations
        << ", \"sampleSize\": " << r.stats.sampleSize
        << ", \"recursionDepth\": " << r.stats.recursionDepth << "},\n";
    if (bracket) {
        out << "  \"bracket\": {\"rhoLo\": " << format_double(bracket->rhoLo)
            << ", \"rhoHi\": " << format_double(bracket->rhoHi)
            << ", \"resolution\": " << format_double(bracket->resolution) << "},\n";
    }
    out << "  \"timings\": {\"preprocessMs\": " << format_double(timings.preprocessMs)
        << ", \"solveMs\": " << format_double(timings.solveMs) << "}\n";
    out << "}\n";
    return out.str();
}

std::string error_to_json(const std::string& kind, const std::string& message) {
    return "{\"error\": \"" + json_escape(kind) + "\", \"message\": \"" + json_escape(message) +
           "\"}\n";
}

void write_svg(const std::string& path, const Polygon& p, const Triangulation& t,
               const std::vector<Point>& sites, const Disc& disc, const DecompTree* tree) {
    double minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    for (const Point& v : p.vertices) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    const double span = std::max(maxx - minx, maxy - miny);
    const double pad = 0.05 * span;
    const double stroke = span / 300.0;

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\""
        << (minx - pad) << ' ' << (miny - pad) << ' ' << (maxx - minx + 2 * pad) << ' '
        << (maxy - miny + 2 * pad) << "\">\n";
    // Flip y so the picture matches math orientation.
    out << "<g transform=\"matrix(1 0 0 -1 0 " << (miny + maxy) << ")\">\n";

    out << "<polygon points=\"";
    for (const Point& v : p.vertices) out << v.x << ',' << v.y << ' ';
    out << "\" fill=\"#f6f1e7\" stroke=\"#444\" stroke-width=\"" << stroke << "\"/>\n";

    if (tree) {
        for (const DecompNode& node : tree->nodes) {
            if (node.left < 0) continue;
            const Chord d = diagonal_chord(p, t, node.diagIndex);
            out << "<line x1=\"" << d.a.x << "\" y1=\"" << d.a.y << "\" x2=\"" << d.b.x
                << "\" y2=\"" << d.b.y << "\" stroke=\"#b8b0a0\" stroke-width=\"" << stroke * 0.7
                << "\" stroke-dasharray=\"" << stroke * 3 << ' ' << stroke * 2 << "\"/>\n";
        }
    }

    // Geodesic disc boundary: 256 rays from the center, binary search for the
    // farthest in-polygon point within geodesic distance `radius`. Display
    // only; the geodesic distance caps the Euclidean reach, so the bracket
    // [0, radius] always contains the flip.
    if (disc.radius > 1e-12) {
        const auto reachable = [&](Point q) {
            if (!point_in_polygon(p, q)) return false;
            return geodesic_distance(p, t, disc.center, q) <= disc.radius;
        };
        out << "<polygon points=\"";
        for (int i = 0; i < 256; ++i) {
            const double th = 2.0 * 3.14159265358979323846 * i / 256.0;
            const Point dir{std::cos(th), std::sin(th)};
            double lo = 0.0, hi = disc.radius * (1.0 + 1e-9) + 1e-12;
            for (int step = 0; step < 48; ++step) {
                const double mid = 0.5 * (lo + hi);
                if (reachable(disc.center + mid * dir)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const Point b = disc.center + lo * dir;
            out << b.x << ',' << b.y << ' ';
        }
        out << "\" fill=\"#4d86d2\" fill-opacity=\"0.25\" stroke=\"#2a5fa8\" stroke-width=\""
            << stroke << "\"/>\n";
    }

    for (const Point& s : sites) {
        out << "<circle cx=\"" << s.x << "\" cy=\"" << s.y << "\" r=\"" << stroke * 2.2
            << "\" fill=\"#b33939\"/>\n";
    }
    out << "<circle cx=\"" << disc.center.x << "\" cy=\"" << disc.center.y << "\" r=\""
        << stroke * 2.8 << "\" fill=\"none\" stroke=\"#1e3d6b\" stroke-width=\"" << stroke * 1.2
        << "\"/>\n";
    out << "</g>\n</svg>\n";
}

} // namespace skeg
