#include "heisgeo/json_io.hpp"

#include <cstdio>

namespace heisgeo {

json to_json(const HPoint& p) { return json::array({p.x, p.y, p.t}); }

HPoint hpoint_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw invalid_parameter("json: point must be an [x,y,t] array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json to_json(const Box3& b) {
    return {{"x", {b.x0, b.x1}}, {"y", {b.y0, b.y1}}, {"t", {b.t0, b.t1}}};
}

Box3 box_from_json(const json& j) {
    Box3 b;
    b.x0 = j.at("x")[0].get<double>();
    b.x1 = j.at("x")[1].get<double>();
    b.y0 = j.at("y")[0].get<double>();
    b.y1 = j.at("y")[1].get<double>();
    b.t0 = j.at("t")[0].get<double>();
    b.t1 = j.at("t")[1].get<double>();
    return b;
}

json to_json(const ObstacleSet& A) {
    json boxes = json::array(), balls = json::array();
    for (const Box3& b : A.boxes) boxes.push_back(to_json(b));
    for (const KoranyiBall& b : A.balls)
        balls.push_back({{"center", to_json(b.center)}, {"radius", b.radius}});
    return {{"schema", 1}, {"boxes", boxes}, {"balls", balls}};
}

ObstacleSet obstacles_from_json(const json& j) {
    ObstacleSet A;
    for (const json& b : j.value("boxes", json::array())) A.boxes.push_back(box_from_json(b));
    for (const json& b : j.value("balls", json::array()))
        A.balls.push_back({hpoint_from_json(b.at("center")), b.at("radius").get<double>()});
    return A;
}

json to_json(const MazeLayout& L) {
    return {{"tiers", L.tiers},
            {"overlap", L.overlap},
            {"t_fill", L.t_fill},
            {"moat_frac", L.moat_frac},
            {"crack_frac", L.crack_frac}};
}

MazeLayout layout_from_json(const json& j) {
    MazeLayout L;
    L.tiers = j.value("tiers", L.tiers);
    L.overlap = j.value("overlap", L.overlap);
    L.t_fill = j.value("t_fill", L.t_fill);
    L.moat_frac = j.value("moat_frac", L.moat_frac);
    L.crack_frac = j.value("crack_frac", L.crack_frac);
    return L;
}

namespace {

// 1-based digits of a level-j box index in base 24.
json multi_index(int level, long index) {
    std::vector<long> digits(static_cast<size_t>(level));
    for (int d = level - 1; d >= 0; --d) {
        digits[static_cast<size_t>(d)] = index % 24 + 1;
        index /= 24;
    }
    return json(digits);
}

} // namespace

json to_json(const MazeTree& tree) {
    json boxes = json::array();
    for (int j = 0; j <= tree.levels; ++j) {
        const auto& lvl = tree.level_boxes[static_cast<size_t>(j)];
        for (size_t i = 0; i < lvl.size(); ++i) {
            json e = to_json(lvl[i]);
            e["index"] = multi_index(j, static_cast<long>(i));
            boxes.push_back(std::move(e));
        }
    }
    return {{"schema", 1},
            {"type", "maze"},
            {"n", tree.n},
            {"levels", tree.levels},
            {"layout", to_json(tree.layout)},
            {"generator", "switchback-corner-pocket"},
            {"max_diameter_ratio", tree.max_diameter_ratio},
            {"boxes", boxes}};
}

MazeTree maze_from_json(const json& j) {
    if (j.value("type", "") != "maze") throw invalid_parameter("json: not a maze document");
    MazeTree tree;
    tree.n = j.at("n").get<int>();
    tree.levels = j.at("levels").get<int>();
    tree.layout = layout_from_json(j.at("layout"));
    tree.max_diameter_ratio = j.value("max_diameter_ratio", 0.0);
    tree.level_boxes.assign(static_cast<size_t>(tree.levels) + 1, {});
    long expect = 1;
    for (int lvl = 0; lvl <= tree.levels; ++lvl) {
        tree.level_boxes[static_cast<size_t>(lvl)].reserve(static_cast<size_t>(expect));
        expect *= 24;
    }
    for (const json& e : j.at("boxes")) {
        const int lvl = static_cast<int>(e.at("index").size());
        if (lvl > tree.levels) throw invalid_parameter("json: maze box deeper than levels");
        tree.level_boxes[static_cast<size_t>(lvl)].push_back(box_from_json(e));
    }
    if (tree.level_boxes[0].size() != 1) throw invalid_parameter("json: maze needs one root");
    tree.root = tree.level_boxes[0][0];
    for (int lvl = 0; lvl <= tree.levels; ++lvl) {
        long want = 1;
        for (int d = 0; d < lvl; ++d) want *= 24;
        if (static_cast<long>(tree.level_boxes[static_cast<size_t>(lvl)].size()) != want)
            throw invalid_parameter("json: maze level has wrong box count");
    }
    return tree;
}

json to_json(const AssembledSet& A) {
    json comps = json::array();
    for (const AssembledComponent& c : A.components)
        comps.push_back({{"n", c.n},
                         {"center", to_json(c.center)},
                         {"radius", c.radius},
                         {"scale", c.scale},
                         {"maze", to_json(c.tree)}});
    return {{"schema", 1},
            {"type", "assembled"},
            {"includes_origin", A.includes_origin},
            {"components", comps}};
}

AssembledSet assembled_from_json(const json& j) {
    if (j.value("type", "") != "assembled")
        throw invalid_parameter("json: not an assembled-set document");
    AssembledSet A;
    A.includes_origin = j.at("includes_origin").get<bool>();
    for (const json& c : j.at("components")) {
        AssembledComponent comp;
        comp.n = c.at("n").get<int>();
        comp.center = hpoint_from_json(c.at("center"));
        comp.radius = c.at("radius").get<double>();
        comp.scale = c.at("scale").get<double>();
        comp.tree = maze_from_json(c.at("maze"));
        A.components.push_back(std::move(comp));
    }
    return A;
}

json to_json(const BangBangPath& path) {
    json segs = json::array();
    for (const AxisSegment& s : path.segments)
        segs.push_back({{"axis", s.axis == Axis::X ? "X" : "Y"},
                        {"start", to_json(s.start)},
                        {"displacement", s.displacement}});
    return {{"segments", segs},
            {"start", to_json(path.start())},
            {"end", to_json(path.end())},
            {"cc_length", cc_length(path)}};
}

json to_json(const Polyline3& poly) {
    json verts = json::array();
    for (const HPoint& v : poly.vertices) verts.push_back(to_json(v));
    return verts;
}

json to_json(const PathEstimate& est, const ObstacleSet& obstacles) {
    json out = {{"reached", est.reached},
                {"resolution", {{"hx", est.hx}, {"hy", est.hy}, {"ht", est.ht}}},
                {"nodes_expanded", est.nodes_expanded},
                {"obstacle_digest", json_digest(to_json(obstacles))}};
    if (est.reached) {
        out["cost"] = est.cost;
        out["polyline"] = to_json(est.polyline);
    } else {
        out["unreachable"] = true;
    }
    return out;
}

json to_json(const DimEstimate& est) {
    return {{"gauge", est.gauge == Gauge::Euclidean ? "euclidean" : "koranyi"},
            {"scales", est.scales},
            {"counts", est.counts},
            {"slope", est.slope}};
}

std::string json_digest(const json& j) {
    const std::string dump = j.dump();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace heisgeo
