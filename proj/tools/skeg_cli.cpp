#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skeg/decomp.hpp"
#include "skeg/errors.hpp"
#include "skeg/io.hpp"
#include "skeg/oracle.hpp"
#include "skeg/skeg.hpp"
#include "skeg/triangulate.hpp"

namespace {

int log_level() {
    static const int lvl = [] {
        const char* v = std::getenv("SKEG_LOG");
        if (!v) return 0;
        const std::string s(v);
        if (s == "debug") return 2;
        if (s == "info") return 1;
        return 0;
    }();
    return lvl;
}

template <typename... Args> void log_info(const char* fmt, Args... args) {
    if (log_level() >= 1) {
        std::fprintf(stderr, "[skeg] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args> void log_debug(const char* fmt, Args... args) {
    if (log_level() >= 2) {
        std::fprintf(stderr, "[skeg:debug] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << skeg::error_to_json(kind, message);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct RunConfig {
    std::string polygonPath;
    std::string sitesPath;
    int k = 1;
    std::string algo = "auto";
    std::uint64_t seed = 0;
    std::string svgPath;
    std::string jsonPath;
    double gridEps = 0.05;
};

int run_command(const RunConfig& cfg) {
    const skeg::Polygon p = skeg::load_polygon_file(cfg.polygonPath);
    const std::vector<skeg::Point> sites = skeg::load_sites_file(cfg.sitesPath);
    log_info("polygon: %d vertices (%zu reflex), %zu sites, k=%d, algo=%s", p.size(),
             p.reflexIndices.size(), sites.size(), cfg.k, cfg.algo.c_str());

    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (!skeg::point_in_polygon(p, sites[i])) {
            throw skeg::SiteOutsidePolygon("site " + std::to_string(i) + " at (" +
                                           skeg::format_double(sites[i].x) + ", " +
                                           skeg::format_double(sites[i].y) +
                                           ") lies outside the polygon");
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    const skeg::Triangulation tri = skeg::triangulate(p);
    const skeg::DecompTree tree = skeg::build_decomp_tree(p, tri);
    const skeg::SiteAssignment assign = skeg::locate_sites(p, tri, tree, sites);
    skeg::Timings timings;
    timings.preprocessMs = ms_since(t0);
    log_debug("triangulation: %d triangles, %zu diagonals; tree height %d", tri.size(),
              tri.diagonals.size(), tree.height);

    const auto t1 = std::chrono::steady_clock::now();
    skeg::SkegResult result;
    std::string label;
    std::optional<skeg::OptBracket> bracket;
    if (cfg.algo == "auto") {
        result = skeg::main_algo(p, tri, tree, assign, sites, cfg.k, cfg.seed);
    } else if (cfg.algo == "rs") {
        result = skeg::rs_algo(p, tri, sites, cfg.k, cfg.seed);
    } else if (cfg.algo == "di") {
        result = skeg::di_algo(p, tri, tree, assign, sites, tree.root, cfg.k, cfg.seed);
    } else if (cfg.algo == "planar") {
        result.disc = skeg::planar_2approx(sites, cfg.k);
        result.algorithm = skeg::Algo::planar;
        result.seed = cfg.seed;
        result.coveredCount = skeg::count_covered(p, tri, result.disc, sites);
    } else if (cfg.algo == "grid-oracle") {
        const skeg::OptBracket br = skeg::grid_oracle(p, sites, cfg.k, cfg.gridEps);
        bracket = br;
        label = "grid-oracle";
        result.disc = {br.bestCenter, br.rhoHi};
        result.algorithm = skeg::Algo::oracle;
        result.seed = cfg.seed;
        result.coveredCount = skeg::count_covered(p, tri, result.disc, sites);
    } else { // pair-oracle (flag values are pre-validated)
        label = "pair-oracle";
        result.disc = skeg::pair_candidate_oracle(p, tri, sites, cfg.k);
        result.algorithm = skeg::Algo::oracle;
        result.seed = cfg.seed;
        result.coveredCount = skeg::count_covered(p, tri, result.disc, sites);
    }
    timings.solveMs = ms_since(t1);
    log_info("result: algorithm=%s radius=%s covered=%d",
             label.empty() ? skeg::algo_name(result.algorithm) : label.c_str(),
             skeg::format_double(result.disc.radius).c_str(), result.coveredCount);

    const std::string payload = skeg::result_to_json(result, cfg.k, timings, label, bracket);
    std::cout << payload;
    if (!cfg.jsonPath.empty()) {
        std::ofstream out(cfg.jsonPath);
        if (!out) throw std::runtime_error("cannot write " + cfg.jsonPath);
        out << payload;
    }
    if (!cfg.svgPath.empty()) {
        const skeg::DecompTree* treeForSvg =
            result.algorithm == skeg::Algo::di ? &tree : nullptr;
        skeg::write_svg(cfg.svgPath, p, tri, sites, result.disc, treeForSvg);
        log_debug("svg written to %s", cfg.svgPath.c_str());
    }
    return 0;
}

struct GenConfig {
    std::string fixture;
    int spikes = 12;
    int m = 10;
    int n = 10;
    std::uint64_t seed = 0;
    std::string polygonPath;
    std::string outPath;
};

int gen_command(const GenConfig& cfg) {
    if (cfg.fixture == "star") {
        const skeg::Polygon star = skeg::generate_star_polygon(cfg.spikes);
        skeg::save_polygon_file(cfg.outPath, star.vertices);
        log_info("star: %d spikes -> %d vertices", cfg.spikes, star.size());
    } else if (cfg.fixture == "random-polygon") {
        const skeg::Polygon poly = skeg::random_simple_polygon(cfg.seed, cfg.m);
        skeg::save_polygon_file(cfg.outPath, poly.vertices);
        log_info("random polygon: m=%d seed=%llu", cfg.m,
                 static_cast<unsigned long long>(cfg.seed));
    } else { // random-sites
        if (cfg.polygonPath.empty()) {
            throw std::runtime_error("random-sites requires --polygon");
        }
        const skeg::Polygon poly = skeg::load_polygon_file(cfg.polygonPath);
        skeg::save_sites_file(cfg.outPath, skeg::random_sites(poly, cfg.seed, cfg.n));
        log_info("random sites: n=%d seed=%llu", cfg.n,
                 static_cast<unsigned long long>(cfg.seed));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-approximate smallest k-enclosing geodesic discs in simple polygons"};
    app.require_subcommand(1);

    RunConfig rc;
    CLI::App* run = app.add_subcommand("run", "solve one instance");
    run->add_option("--polygon", rc.polygonPath, "polygon JSON file")->required();
    run->add_option("--sites", rc.sitesPath, "sites JSON file")->required();
    run->add_option("-k,--k", rc.k, "number of sites to enclose")->required();
    run->add_option("--algo", rc.algo, "algorithm")
        ->check(CLI::IsMember({"auto", "rs", "di", "planar", "grid-oracle", "pair-oracle"}));
    run->add_option("--seed", rc.seed, "random seed");
    run->add_option("--svg", rc.svgPath, "write an SVG rendering here");
    run->add_option("--json", rc.jsonPath, "also write the result JSON here");
    run->add_option("--grid-eps", rc.gridEps, "grid spacing for grid-oracle")
        ->check(CLI::PositiveNumber);

    GenConfig gc;
    CLI::App* gen = app.add_subcommand("gen", "generate fixture files");
    gen->add_option("fixture", gc.fixture, "star | random-polygon | random-sites")
        ->required()
        ->check(CLI::IsMember({"star", "random-polygon", "random-sites"}));
    gen->add_option("--spikes", gc.spikes, "star spike count")->check(CLI::Range(3, 1000000));
    gen->add_option("--m", gc.m, "random polygon vertex count");
    gen->add_option("--n", gc.n, "random site count")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gc.seed, "random seed");
    gen->add_option("--polygon", gc.polygonPath, "polygon file (random-sites)");
    gen->add_option("--out", gc.outPath, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("SchemaViolation", e.what());
        return 2;
    }

    try {
        if (run->parsed()) return run_command(rc);
        return gen_command(gc);
    } catch (const skeg::SiteOutsidePolygon& e) {
        emit_error("SiteOutsidePolygon", e.what());
        return 3;
    } catch (const skeg::KTooLarge& e) {
        emit_error("KTooLarge", e.what());
        return 4;
    } catch (const skeg::EmptyGrid& e) {
        emit_error("EmptyGrid", e.what());
        return 2;
    } catch (const skeg::GeometryError& e) {
        emit_error("SchemaViolation", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        emit_error("SchemaViolation", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 1;
    }
}
