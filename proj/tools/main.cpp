#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heisgeo/estimator.hpp"
#include "heisgeo/json_io.hpp"
#include "heisgeo/metrics.hpp"
#include "heisgeo/planner.hpp"
#include "heisgeo/svg.hpp"
#include "heisgeo/threads.hpp"

namespace {

using heisgeo::json;

constexpr const char* kVersion = "0.1.0";

heisgeo::HPoint parse_point(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        try {
            v.push_back(std::stod(tok, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw CLI::ValidationError("point", "bad coordinate: " + tok);
    }
    if (v.size() != 3) throw CLI::ValidationError("point", "expected x,y,t: " + s);
    return {v[0], v[1], v[2]};
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("list", "bad number: " + tok);
        }
    }
    return v;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw heisgeo::invalid_parameter("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw heisgeo::invalid_parameter("cannot write " + path);
    out << content;
}

struct Emitter {
    std::string out_path, svg_path, csv_path;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void emit(const std::string& command, const json& params, const json& results,
              long long seed = 0) const {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        const json record = {{"schema", 1},        {"artifact", "heisgeo"},
                             {"version", kVersion}, {"command", command},
                             {"params", params},    {"seed", seed},
                             {"results", results},  {"wall_ms", ms}};
        if (out_path.empty())
            std::cout << record.dump(2) << "\n";
        else
            write_file(out_path, record.dump(2) + "\n");
    }
    void emit_svg(const std::vector<heisgeo::Box3>& boxes,
                  const std::vector<heisgeo::KoranyiBall>& balls,
                  const std::vector<heisgeo::Polyline3>& paths) const {
        if (!svg_path.empty()) write_file(svg_path, heisgeo::svg_plan_view(boxes, balls, paths));
    }
    void emit_csv(const heisgeo::Polyline3& poly) const {
        if (!csv_path.empty()) write_file(csv_path, heisgeo::polyline_csv(poly));
    }
};

} // namespace

int main(int argc, char** argv) {
    using namespace heisgeo;

    CLI::App app{"heisgeo - Heisenberg group geometry toolkit"};
    app.require_subcommand(1);

    Emitter em;
    app.add_option("--out", em.out_path, "write the result JSON to a file instead of stdout");
    app.add_option("--svg", em.svg_path, "dump the planar projection of the produced path/maze");
    app.add_option("--csv", em.csv_path, "dump the produced polyline as CSV");

    std::string p_str, q_str, obstacles_path, in_path, gauge_str = "euclidean", scales_str;
    double tol = 1e-8, alpha = 2.0, step = 0.1, margin = 0.0;
    int n = 1, levels = 1, n_max = 1, level = -1, samples = 1;
    long long seed = 0;
    MazeLayout layout;

    CLI::App* bb = app.add_subcommand("bb", "four-segment bang-bang path between two points");
    bb->fallthrough();
    bb->add_option("--p", p_str, "start point x,y,t")->required();
    bb->add_option("--q", q_str, "end point x,y,t")->required();
    bb->add_option("--samples", samples, "polyline samples per segment");

    CLI::App* dist = app.add_subcommand("dist", "Carnot-Caratheodory distance");
    dist->fallthrough();
    dist->add_option("--p", p_str)->required();
    dist->add_option("--q", q_str)->required();
    dist->add_option("--tol", tol, "relative tolerance");

    CLI::App* plan_cmd = app.add_subcommand("plan", "obstacle-avoiding horizontal path");
    plan_cmd->fallthrough();
    plan_cmd->add_option("--p", p_str)->required();
    plan_cmd->add_option("--q", q_str)->required();
    plan_cmd->add_option("--obstacles", obstacles_path, "obstacle set JSON")->required();
    plan_cmd->add_option("--seed", seed);
    plan_cmd->add_option("--margin", margin, "required clearance margin");

    CLI::App* maze = app.add_subcommand("maze", "recursive 24-box maze");
    maze->fallthrough();
    maze->require_subcommand(1);
    CLI::App* maze_build = maze->add_subcommand("build", "construct a maze");
    maze_build->fallthrough();
    maze_build->add_option("--n", n, "quasiconvexity index (box half-width 10n)");
    maze_build->add_option("--levels", levels, "recursion depth");
    maze_build->add_option("--tiers", layout.tiers);
    maze_build->add_option("--overlap", layout.overlap);
    maze_build->add_option("--t-fill", layout.t_fill);
    CLI::App* maze_certify = maze->add_subcommand("certify", "grid-certify the length bounds");
    maze_certify->fallthrough();
    maze_certify->add_option("--in", in_path, "maze JSON")->required();
    maze_certify->add_option("--step", step, "planar lattice step");

    CLI::App* assemble = app.add_subcommand("assemble", "assemble components toward the origin");
    assemble->fallthrough();
    assemble->add_option("--n-max", n_max, "number of components")->required();
    assemble->add_option("--levels", levels, "maze depth per component");

    CLI::App* dim = app.add_subcommand("dim", "box-counting dimension");
    dim->fallthrough();
    dim->add_option("--in", in_path, "maze JSON or {\"points\":[[x,y,t],...]} JSON")->required();
    dim->add_option("--gauge", gauge_str, "euclidean or koranyi");
    dim->add_option("--scales", scales_str, "comma-separated cell sizes")->required();
    dim->add_option("--level", level, "maze level (default: deepest)");

    CLI::App* dct = app.add_subcommand("dct", "dimension comparison bounds");
    dct->fallthrough();
    dct->add_option("--alpha", alpha, "Euclidean dimension in [0,3]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*bb) {
            const HPoint p = parse_point(p_str), q = parse_point(q_str);
            const BangBangPath path = bang_bang(p, q);
            const Polyline3 poly = as_polyline(path, std::max(1, samples));
            json results = to_json(path);
            results["pi_t_length"] = pi_t_length(poly);
            results["endpoint_gauge_error"] = koranyi_dist(path.end(), q);
            em.emit("bb", {{"p", to_json(p)}, {"q", to_json(q)}, {"samples", samples}}, results);
            em.emit_svg({}, {}, {poly});
            em.emit_csv(poly);
        } else if (*dist) {
            const HPoint p = parse_point(p_str), q = parse_point(q_str);
            const double d = cc_dist(p, q, tol);
            em.emit("dist", {{"p", to_json(p)}, {"q", to_json(q)}, {"tol", tol}},
                    {{"distance", d}, {"koranyi", koranyi_dist(p, q)}});
        } else if (*plan_cmd) {
            const HPoint p = parse_point(p_str), q = parse_point(q_str);
            const ObstacleSet A = obstacles_from_json(load_json(obstacles_path));
            PlanConfig cfg;
            cfg.seed = static_cast<uint64_t>(seed);
            cfg.margin = margin;
            const PlanResult r = plan(p, q, A, cfg);
            const Polyline3 poly = as_polyline(r.path, 1);
            json results = {{"path", to_json(r.path)},
                            {"total_cc_length", r.total_cc_length},
                            {"clearance_certificate", r.clearance_certificate},
                            {"tries_used", r.tries_used},
                            {"perturbed", r.perturbed},
                            {"obstacle_digest", json_digest(to_json(A))}};
            em.emit("plan",
                    {{"p", to_json(p)},
                     {"q", to_json(q)},
                     {"obstacles", obstacles_path},
                     {"margin", margin}},
                    results, seed);
            em.emit_svg(A.boxes, A.balls, {poly});
            em.emit_csv(poly);
        } else if (*maze_build) {
            const MazeTree tree = build_maze(n, levels, layout);
            em.emit("maze build",
                    {{"n", n}, {"levels", levels}, {"layout", to_json(tree.layout)}},
                    to_json(tree));
            em.emit_svg(tree.level_boxes[static_cast<size_t>(std::min(tree.levels, 1))], {}, {});
        } else if (*maze_certify) {
            const MazeTree tree = maze_from_json(load_json(in_path));
            const double nn = tree.n;
            GridSpec g;
            g.bounds = {-12.0 * nn, 12.0 * nn, -12.0 * nn, 12.0 * nn, -1.5, 1.5};
            g.hx = g.hy = step;
            g.ht = 0.25;
            // the box itself plus its level-1 refinement: the maze is nested
            // inside the box, so going around must stay the optimum
            ObstacleSet around_obstacles = maze_level_union(tree, 0);
            if (tree.levels >= 1) {
                const ObstacleSet lvl1 = maze_level_union(tree, 1);
                around_obstacles.boxes.insert(around_obstacles.boxes.end(),
                                              lvl1.boxes.begin(), lvl1.boxes.end());
            }
            const HPoint hplus{0, 0, 1}, hminus{0, 0, -1};

            PathEstimate around, interior;
            if (max_threads() >= 2) {
                auto fut = std::async(std::launch::async, [&] {
                    return grid_pi_distance(around_obstacles, hplus, hminus, g);
                });
                interior = interior_crossing_cost(tree, 0, step);
                around = fut.get();
            } else {
                around = grid_pi_distance(around_obstacles, hplus, hminus, g);
                interior = interior_crossing_cost(tree, 0, step);
            }

            const bool around_pass = around.reached && around.cost >= 20.0 * nn &&
                                     around.cost <= 20.0 * nn + 4.0 * step;
            const bool interior_pass = interior.reached && interior.cost >= 40.0 * nn;
            json results = {{"around", to_json(around, around_obstacles)},
                            {"interior", to_json(interior, around_obstacles)},
                            {"around_cost", around.reached ? json(around.cost) : json()},
                            {"interior_cost", interior.reached ? json(interior.cost) : json()},
                            {"around_pass", around_pass},
                            {"interior_pass", interior_pass},
                            {"pass", around_pass && interior_pass}};
            em.emit("maze certify", {{"in", in_path}, {"step", step}}, results);
            em.emit_svg(around_obstacles.boxes, {}, {around.polyline, interior.polyline});
            em.emit_csv(around.polyline);
        } else if (*assemble) {
            std::vector<MazeTree> trees;
            for (int i = 1; i <= n_max; ++i) trees.push_back(build_maze(i, levels, layout));
            const AssembledSet A = assemble_A(trees);
            em.emit("assemble", {{"n_max", n_max}, {"levels", levels}}, to_json(A));
            std::vector<KoranyiBall> balls;
            for (const auto& c : A.components) balls.push_back({c.center, c.radius});
            em.emit_svg({}, balls, {});
        } else if (*dim) {
            const json doc = load_json(in_path);
            const Gauge gauge = gauge_str == "koranyi" ? Gauge::Koranyi : Gauge::Euclidean;
            const std::vector<double> scales = parse_list(scales_str);
            DimEstimate est;
            if (doc.contains("points")) {
                std::vector<HPoint> pts;
                for (const json& e : doc["points"]) pts.push_back(hpoint_from_json(e));
                est = box_dimension(pts, gauge, scales);
            } else {
                const MazeTree tree = maze_from_json(doc);
                est = box_dimension(tree, level < 0 ? tree.levels : level, gauge, scales);
            }
            em.emit("dim",
                    {{"in", in_path}, {"gauge", gauge_str}, {"scales", scales},
                     {"level", level}},
                    to_json(est));
        } else if (*dct) {
            const auto [lo, hi] = dct_bounds(alpha);
            em.emit("dct", {{"alpha", alpha}}, {{"beta_minus", lo}, {"beta_plus", hi}});
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        json err = {{"schema", 1},
                    {"error",
                     {{"type",
                       dynamic_cast<const invalid_parameter*>(&e)    ? "invalid-parameter"
                       : dynamic_cast<const numeric_failure*>(&e)    ? "numeric-failure"
                       : dynamic_cast<const planning_failure*>(&e)   ? "planning-failure"
                       : dynamic_cast<const invalid_layout*>(&e)     ? "invalid-layout"
                       : dynamic_cast<const insufficient_data*>(&e)  ? "insufficient-data"
                                                                     : "error"},
                      {"message", e.what()}}}};
        if (const auto* pf = dynamic_cast<const planning_failure*>(&e))
            err["error"]["segment_index"] = pf->segment_index;
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"schema", 1}, {"error", {{"type", "error"}, {"message", e.what()}}}}
                         .dump(2)
                  << "\n";
        return 1;
    }
    return 0;
}
