#include "heisgeo/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace heisgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Lattice {
    double x0, y0, t0;
    double hx, hy, ht;
    int nx, ny, nt;

    double x(int i) const { return x0 + i * hx; }
    double y(int j) const { return y0 + j * hy; }
    double t(int k) const { return t0 + k * ht; }
    long column(int i, int j) const { return static_cast<long>(i) * ny + j; }
};

int axis_count(double lo, double hi, double h, const char* what) {
    if (!(h > 0.0)) throw invalid_parameter("grid: steps must be positive");
    const double span = hi - lo;
    const int n = static_cast<int>(std::llround(span / h)) + 1;
    if (n < 2) throw invalid_parameter(std::string("grid: too few nodes along ") + what);
    if (std::fabs(lo + (n - 1) * h - hi) > 1e-9 * std::max(1.0, std::fabs(hi)))
        throw invalid_parameter(std::string("grid: bounds not an integer number of steps along ") + what);
    return n;
}

int snap_index(double v, double lo, double h, const char* what) {
    const int i = static_cast<int>(std::llround((v - lo) / h));
    if (std::fabs(lo + i * h - v) > 1e-9 * std::max(1.0, std::fabs(v)))
        throw invalid_parameter(std::string("grid: query point not on a lattice node (") + what + ")");
    return i;
}

// Bounding box of the set of points within Koranyi distance r of the ball
// center (same twist accounting as obstacle inflation).
Box3 ball_bbox(const KoranyiBall& b) {
    const double r = b.radius;
    const double et = r * r + 2.0 * r * (std::fabs(b.center.x) + std::fabs(b.center.y) + r);
    return {b.center.x - r, b.center.x + r, b.center.y - r, b.center.y + r,
            b.center.t - et, b.center.t + et};
}

struct Run {
    long column;
    int klo, khi;
};

struct GridGraph {
    Lattice lat;
    std::vector<Run> runs;
    std::vector<long> col_offset; // runs of column c: [col_offset[c], col_offset[c+1])

    long run_at(long column, int k) const {
        for (long r = col_offset[column]; r < col_offset[column + 1]; ++r)
            if (runs[r].klo <= k && k <= runs[r].khi) return r;
        return -1;
    }
};

// Free-node / free-edge profile of one t-column against the obstacle set.
void column_profile(const ObstacleSet& A, const std::vector<Box3>& ball_boxes,
                    const Lattice& lat, int i, int j, std::vector<char>& node_free,
                    std::vector<char>& edge_free) {
    const double px = lat.x(i), py = lat.y(j);
    std::fill(node_free.begin(), node_free.end(), 1);
    std::fill(edge_free.begin(), edge_free.end(), 1);

    auto block_t_interval = [&](double blo, double bhi) {
        // nodes with t_k in [blo,bhi]; edges whose segment meets [blo,bhi]
        int klo = static_cast<int>(std::ceil((blo - lat.t0) / lat.ht - 1e-12));
        int khi = static_cast<int>(std::floor((bhi - lat.t0) / lat.ht + 1e-12));
        for (int k = std::max(0, klo); k <= std::min(lat.nt - 1, khi); ++k) node_free[k] = 0;
        int elo = static_cast<int>(std::ceil((blo - lat.t0) / lat.ht - 1e-12)) - 1;
        int ehi = static_cast<int>(std::floor((bhi - lat.t0) / lat.ht + 1e-12));
        for (int k = std::max(0, elo); k <= std::min(lat.nt - 2, ehi); ++k) edge_free[k] = 0;
    };

    for (const Box3& b : A.boxes) {
        if (px < b.x0 || px > b.x1 || py < b.y0 || py > b.y1) continue;
        block_t_interval(b.t0, b.t1);
    }
    for (size_t bi = 0; bi < A.balls.size(); ++bi) {
        const Box3& bb = ball_boxes[bi];
        if (px < bb.x0 || px > bb.x1 || py < bb.y0 || py > bb.y1) continue;
        ObstacleSet one;
        one.balls.push_back(A.balls[bi]);
        for (int k = 0; k < lat.nt; ++k)
            if (node_free[k] && A.balls[bi].contains({px, py, lat.t(k)})) node_free[k] = 0;
        for (int k = 0; k + 1 < lat.nt; ++k)
            if (edge_free[k] &&
                !coord_edge_clear(one, {px, py, lat.t(k)}, CoordAxis::T, lat.ht))
                edge_free[k] = 0;
    }
}

GridGraph build_graph(const ObstacleSet& A, const Lattice& lat) {
    GridGraph g;
    g.lat = lat;
    const long ncol = static_cast<long>(lat.nx) * lat.ny;
    g.col_offset.assign(ncol + 1, 0);

    std::vector<Box3> ball_boxes;
    ball_boxes.reserve(A.balls.size());
    for (const KoranyiBall& b : A.balls) ball_boxes.push_back(ball_bbox(b));

    std::vector<char> node_free(lat.nt), edge_free(std::max(0, lat.nt - 1));
    for (int i = 0; i < lat.nx; ++i) {
        for (int j = 0; j < lat.ny; ++j) {
            column_profile(A, ball_boxes, lat, i, j, node_free, edge_free);
            const long c = lat.column(i, j);
            int k = 0;
            while (k < lat.nt) {
                if (!node_free[k]) {
                    ++k;
                    continue;
                }
                int k2 = k;
                while (k2 + 1 < lat.nt && edge_free[k2] && node_free[k2 + 1]) ++k2;
                g.runs.push_back({c, k, k2});
                k = k2 + 1;
            }
            g.col_offset[c + 1] = static_cast<long>(g.runs.size());
        }
    }
    // col_offset built in column order only when traversal matches; fix up:
    for (long c = 0; c < ncol; ++c)
        if (g.col_offset[c + 1] == 0) g.col_offset[c + 1] = g.col_offset[c];
    return g;
}

// First free crossing level between two plan-adjacent columns within [klo,khi],
// or -1. The crossing edge is a straight segment at constant t.
int crossing_level(const ObstacleSet& A, const std::vector<Box3>& ball_boxes,
                   const Lattice& lat, int i, int j, bool xmove, int i2, int j2, int klo,
                   int khi) {
    const double ax = lat.x(i), ay = lat.y(j);
    const double bx = lat.x(i2), by = lat.y(j2);
    const double lox = std::min(ax, bx), hix = std::max(ax, bx);
    const double loy = std::min(ay, by), hiy = std::max(ay, by);

    for (int k = klo; k <= khi; ++k) {
        const double tk = lat.t(k);
        bool blocked = false;
        for (const Box3& b : A.boxes) {
            if (tk < b.t0 || tk > b.t1) continue;
            if (xmove) {
                if (ay >= b.y0 && ay <= b.y1 && hix >= b.x0 && lox <= b.x1) blocked = true;
            } else {
                if (ax >= b.x0 && ax <= b.x1 && hiy >= b.y0 && loy <= b.y1) blocked = true;
            }
            if (blocked) break;
        }
        if (!blocked && !A.balls.empty()) {
            for (size_t bi = 0; bi < A.balls.size() && !blocked; ++bi) {
                const Box3& bb = ball_boxes[bi];
                if (tk < bb.t0 || tk > bb.t1) continue;
                if (hix < bb.x0 || lox > bb.x1 || hiy < bb.y0 || loy > bb.y1) continue;
                ObstacleSet one;
                one.balls.push_back(A.balls[bi]);
                blocked = !coord_edge_clear(one, {ax, ay, tk},
                                            xmove ? CoordAxis::X : CoordAxis::Y,
                                            xmove ? bx - ax : by - ay);
            }
        }
        if (!blocked) return k;
    }
    return -1;
}

PathEstimate dijkstra(const ObstacleSet& A, const Lattice& lat, int pi, int pj, int pk,
                      int qi, int qj, int qk) {
    GridGraph g = build_graph(A, lat);
    std::vector<Box3> ball_boxes;
    for (const KoranyiBall& b : A.balls) ball_boxes.push_back(ball_bbox(b));

    PathEstimate out;
    out.hx = lat.hx;
    out.hy = lat.hy;
    out.ht = lat.ht;

    const long source = g.run_at(lat.column(pi, pj), pk);
    const long target = g.run_at(lat.column(qi, qj), qk);
    if (source < 0 || target < 0)
        throw invalid_parameter("grid: query endpoint lies inside an obstacle");

    const size_t nruns = g.runs.size();
    std::vector<double> dist(nruns, kInf);
    struct Pred {
        long run = -1;
        int k = -1;
    };
    std::vector<Pred> pred(nruns);
    using Item = std::pair<double, long>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});

    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};

    while (!heap.empty()) {
        const auto [d, r] = heap.top();
        heap.pop();
        if (d > dist[r]) continue;
        if (r == target) break;
        ++out.nodes_expanded;
        const Run run = g.runs[r];
        const int ri = static_cast<int>(run.column / lat.ny);
        const int rj = static_cast<int>(run.column % lat.ny);
        for (int dir = 0; dir < 4; ++dir) {
            const int i2 = ri + di[dir], j2 = rj + dj[dir];
            if (i2 < 0 || i2 >= lat.nx || j2 < 0 || j2 >= lat.ny) continue;
            const bool xmove = dj[dir] == 0;
            const double w = xmove ? std::fabs(lat.x(i2) - lat.x(ri))
                                   : std::fabs(lat.y(j2) - lat.y(rj));
            const long c2 = lat.column(i2, j2);
            for (long r2 = g.col_offset[c2]; r2 < g.col_offset[c2 + 1]; ++r2) {
                const int klo = std::max(run.klo, g.runs[r2].klo);
                const int khi = std::min(run.khi, g.runs[r2].khi);
                if (klo > khi) continue;
                if (dist[r] + w >= dist[r2]) continue;
                const int k = crossing_level(A, ball_boxes, lat, ri, rj, xmove, i2, j2, klo, khi);
                if (k < 0) continue;
                dist[r2] = dist[r] + w;
                pred[r2] = {r, k};
                heap.push({dist[r2], r2});
            }
        }
    }

    if (!std::isfinite(dist[target])) {
        out.reached = false;
        out.cost = kInf;
        return out;
    }

    // Walk predecessors back, then emit the lattice polyline forward.
    std::vector<std::pair<long, int>> hops; // (run, entry level)
    long r = target;
    while (r != source) {
        hops.push_back({r, pred[r].k});
        r = pred[r].run;
    }
    std::reverse(hops.begin(), hops.end());

    Polyline3 poly;
    int ci = pi, cj = pj, ck = pk;
    poly.vertices.push_back({lat.x(ci), lat.y(cj), lat.t(ck)});
    for (const auto& [run, k] : hops) {
        if (k != ck) poly.vertices.push_back({lat.x(ci), lat.y(cj), lat.t(k)});
        const int ni = static_cast<int>(g.runs[run].column / lat.ny);
        const int nj = static_cast<int>(g.runs[run].column % lat.ny);
        poly.vertices.push_back({lat.x(ni), lat.y(nj), lat.t(k)});
        ci = ni;
        cj = nj;
        ck = k;
    }
    if (ck != qk) poly.vertices.push_back({lat.x(qi), lat.y(qj), lat.t(qk)});

    out.reached = true;
    out.polyline = std::move(poly);
    out.cost = pi_t_length(out.polyline);
    if (std::fabs(out.cost - dist[target]) > 1e-6 * std::max(1.0, out.cost))
        throw numeric_failure("grid: reconstructed polyline cost " + std::to_string(out.cost) +
                              " disagrees with the relaxation total " +
                              std::to_string(dist[target]));
    return out;
}

} // namespace

PathEstimate grid_pi_distance(const ObstacleSet& A, const HPoint& p, const HPoint& q,
                              const GridSpec& g) {
    Lattice lat;
    lat.x0 = g.bounds.x0;
    lat.y0 = g.bounds.y0;
    lat.t0 = g.bounds.t0;
    lat.hx = g.hx;
    lat.hy = g.hy;
    lat.ht = g.ht;
    lat.nx = axis_count(g.bounds.x0, g.bounds.x1, g.hx, "x");
    lat.ny = axis_count(g.bounds.y0, g.bounds.y1, g.hy, "y");
    lat.nt = axis_count(g.bounds.t0, g.bounds.t1, g.ht, "t");

    const int pi = snap_index(p.x, lat.x0, lat.hx, "p.x");
    const int pj = snap_index(p.y, lat.y0, lat.hy, "p.y");
    const int pk = snap_index(p.t, lat.t0, lat.ht, "p.t");
    const int qi = snap_index(q.x, lat.x0, lat.hx, "q.x");
    const int qj = snap_index(q.y, lat.y0, lat.hy, "q.y");
    const int qk = snap_index(q.t, lat.t0, lat.ht, "q.t");
    if (pi < 0 || pi >= lat.nx || pj < 0 || pj >= lat.ny || pk < 0 || pk >= lat.nt ||
        qi < 0 || qi >= lat.nx || qj < 0 || qj >= lat.ny || qk < 0 || qk >= lat.nt)
        throw invalid_parameter("grid: query point outside the lattice bounds");

    return dijkstra(A, lat, pi, pj, pk, qi, qj, qk);
}

PathEstimate interior_crossing_cost(const MazeTree& tree, int level, double step,
                                    long box_index) {
    if (level < 0 || level > tree.levels)
        throw invalid_parameter("interior_crossing_cost: level out of range");
    if (!(step > 0.0)) throw invalid_parameter("interior_crossing_cost: step must be positive");
    const Box3 box = tree.box(level, box_index);

    ObstacleSet children;
    if (level < tree.levels) {
        const auto& next = tree.level_boxes[level + 1];
        for (long c = box_index * 24; c < box_index * 24 + 24; ++c)
            children.boxes.push_back(next[static_cast<size_t>(c)]);
    }

    const HPoint c = box.center();
    // plan nodes strictly inside the open rectangle
    const int ixm = static_cast<int>(std::floor((box.x1 - c.x) / step - 1e-9));
    const int iym = static_cast<int>(std::floor((box.y1 - c.y) / step - 1e-9));
    if (ixm < 1 || iym < 1)
        throw invalid_parameter("interior_crossing_cost: step too coarse for the box");

    Lattice lat;
    lat.hx = step;
    lat.hy = step;
    lat.nx = 2 * ixm + 1;
    lat.ny = 2 * iym + 1;
    lat.x0 = c.x - ixm * step;
    lat.y0 = c.y - iym * step;
    lat.nt = 11;
    lat.ht = (box.t1 - box.t0) / (lat.nt - 1);
    lat.t0 = box.t0;

    return dijkstra(children, lat, ixm, iym, lat.nt - 1, ixm, iym, 0);
}

// ---------------------------------------------------------------------------
// Box-counting dimension.

namespace {

void validate_scales(const std::vector<double>& scales) {
    if (scales.size() < 4)
        throw invalid_parameter("box_dimension: need at least 4 scales");
    double lo = kInf, hi = 0.0;
    for (double s : scales) {
        if (!(s > 0.0)) throw invalid_parameter("box_dimension: scales must be positive");
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (hi / lo < std::pow(10.0, 1.5) * (1.0 - 1e-12))
        throw invalid_parameter("box_dimension: scales must span at least 1.5 decades");
}

double ols_slope(const std::vector<double>& scales, const std::vector<double>& counts) {
    const size_t m = scales.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += std::log(1.0 / scales[i]);
        sy += std::log(counts[i]);
    }
    const double mx = sx / m, my = sy / m;
    double num = 0, den = 0;
    for (size_t i = 0; i < m; ++i) {
        const double dx = std::log(1.0 / scales[i]) - mx;
        num += dx * (std::log(counts[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

int64_t cell_of(double v, double d) { return static_cast<int64_t>(std::floor(v / d)); }

// Row-interval bitmap over plan cells, one per occupied t-cell.
struct PlanBitmap {
    int64_t ox, oy;
    int64_t nx, ny;
    std::vector<uint64_t> bits;

    void init(int64_t ox_, int64_t oy_, int64_t nx_, int64_t ny_) {
        ox = ox_;
        oy = oy_;
        nx = nx_;
        ny = ny_;
        bits.assign(static_cast<size_t>(((nx + 63) / 64) * ny), 0);
    }
    void fill_rows(int64_t x0, int64_t x1, int64_t y0, int64_t y1) {
        const int64_t words = (nx + 63) / 64;
        for (int64_t y = y0; y <= y1; ++y) {
            uint64_t* row = bits.data() + static_cast<size_t>((y - oy) * words);
            for (int64_t x = x0; x <= x1; ++x) {
                const int64_t c = x - ox;
                row[c >> 6] |= (1ULL << (c & 63));
            }
        }
    }
    long popcount() const {
        long acc = 0;
        for (uint64_t w : bits) acc += __builtin_popcountll(w);
        return acc;
    }
};

} // namespace

DimEstimate box_dimension(const std::vector<HPoint>& sample, Gauge gauge,
                          const std::vector<double>& scales) {
    validate_scales(scales);
    if (sample.empty()) throw insufficient_data("box_dimension: empty sample");

    DimEstimate out;
    out.gauge = gauge;
    out.scales = scales;

    std::vector<int64_t> cells;
    cells.reserve(sample.size());
    for (double d : scales) {
        const double dt = gauge == Gauge::Koranyi ? d * d : d;
        cells.clear();
        for (const HPoint& p : sample) {
            const int64_t ix = cell_of(p.x, d), iy = cell_of(p.y, d), it = cell_of(p.t, dt);
            // 21-bit biased packing per axis
            if (std::max({std::llabs(ix), std::llabs(iy), std::llabs(it)}) >= (1LL << 20))
                throw invalid_parameter(
                    "box_dimension: scale too fine for the sample's coordinate range");
            cells.push_back(((ix + (1LL << 20)) << 42) | ((iy + (1LL << 20)) << 21) |
                            (it + (1LL << 20)));
        }
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        out.counts.push_back(static_cast<double>(cells.size()));
    }

    double coarsest = kInf;
    size_t ci = 0;
    for (size_t i = 0; i < scales.size(); ++i)
        if (scales[i] > scales[ci]) ci = i;
    coarsest = out.counts[ci];
    if (coarsest < 4)
        throw insufficient_data("box_dimension: fewer than 4 occupied cells at the coarsest scale");

    out.slope = ols_slope(out.scales, out.counts);
    return out;
}

DimEstimate box_dimension(const MazeTree& tree, int level, Gauge gauge,
                          const std::vector<double>& scales) {
    validate_scales(scales);
    if (level < 0 || level > tree.levels)
        throw invalid_parameter("box_dimension: level out of range");
    const std::vector<Box3>& boxes = tree.level_boxes[level];

    DimEstimate out;
    out.gauge = gauge;
    out.scales = scales;

    for (double d : scales) {
        const double dt = gauge == Gauge::Koranyi ? d * d : d;
        const int64_t ox = cell_of(tree.root.x0, d) - 1;
        const int64_t oy = cell_of(tree.root.y0, d) - 1;
        const int64_t nx = cell_of(tree.root.x1, d) + 2 - ox;
        const int64_t ny = cell_of(tree.root.y1, d) + 2 - oy;

        // one plan bitmap per occupied t-cell; boxes can span several
        std::map<int64_t, PlanBitmap> layers;
        for (const Box3& b : boxes) {
            const int64_t klo = cell_of(b.t0, dt), khi = cell_of(b.t1, dt);
            for (int64_t k = klo; k <= khi; ++k) {
                PlanBitmap& bm = layers[k];
                if (bm.bits.empty()) bm.init(ox, oy, nx, ny);
                bm.fill_rows(cell_of(b.x0, d), cell_of(b.x1, d), cell_of(b.y0, d),
                             cell_of(b.y1, d));
            }
        }
        long total = 0;
        for (const auto& [k, bm] : layers) total += bm.popcount();
        out.counts.push_back(static_cast<double>(total));
    }

    size_t ci = 0;
    for (size_t i = 0; i < scales.size(); ++i)
        if (scales[i] > scales[ci]) ci = i;
    if (out.counts[ci] < 4)
        throw insufficient_data("box_dimension: fewer than 4 occupied cells at the coarsest scale");

    out.slope = ols_slope(out.scales, out.counts);
    return out;
}

std::pair<double, double> dct_bounds(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 3.0))
        throw invalid_parameter("dct_bounds: alpha must lie in [0,3]");
    return {std::max(alpha, 2.0 * alpha - 2.0), std::min(2.0 * alpha, alpha + 1.0)};
}

} // namespace heisgeo
