#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heisgeo/estimator.hpp"
#include "heisgeo/json_io.hpp"
#include "heisgeo/metrics.hpp"
#include "heisgeo/planner.hpp"

namespace py = pybind11;
using namespace heisgeo;

namespace {

HPoint as_point(const py::object& o) {
    if (py::isinstance<HPoint>(o)) return o.cast<HPoint>();
    const auto seq = o.cast<py::sequence>();
    if (seq.size() != 3) throw py::value_error("point needs 3 coordinates");
    return {seq[0].cast<double>(), seq[1].cast<double>(), seq[2].cast<double>()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Heisenberg group geometry: group algebra, cc-distances, bang-bang paths, "
              "obstacle-avoiding planning, box mazes and dimension estimation";

    py::register_exception<invalid_parameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<numeric_failure>(m, "NumericFailure", PyExc_ArithmeticError);
    py::register_exception<planning_failure>(m, "PlanningFailure", PyExc_RuntimeError);
    py::register_exception<invalid_layout>(m, "InvalidLayout", PyExc_ValueError);
    py::register_exception<insufficient_data>(m, "InsufficientData", PyExc_ValueError);

    py::class_<HPoint>(m, "HPoint")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("t"))
        .def_readwrite("x", &HPoint::x)
        .def_readwrite("y", &HPoint::y)
        .def_readwrite("t", &HPoint::t)
        .def("__iter__",
             [](const HPoint& p) {
                 return py::iter(py::make_tuple(p.x, p.y, p.t));
             })
        .def("__repr__", [](const HPoint& p) {
            return "HPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                   std::to_string(p.t) + ")";
        });

    m.def("mul", [](const py::object& p, const py::object& q) { return mul(as_point(p), as_point(q)); });
    m.def("inv", [](const py::object& p) { return inv(as_point(p)); });
    m.def("dilate", [](double r, const py::object& p) { return dilate(r, as_point(p)); });
    m.def("rotate", [](double th, const py::object& p) { return rotate(th, as_point(p)); });
    m.def("proj_x", [](const py::object& p) { return proj_x(as_point(p)); });
    m.def("proj_y", [](const py::object& p) { return proj_y(as_point(p)); });
    m.def("proj_t", [](const py::object& p) {
        const PlanarPoint pl = proj_t(as_point(p));
        return py::make_tuple(pl.x, pl.y);
    });
    m.def("koranyi_norm", [](const py::object& p) { return koranyi_norm(as_point(p)); });
    m.def("koranyi_dist",
          [](const py::object& p, const py::object& q) { return koranyi_dist(as_point(p), as_point(q)); });

    m.def("cc_dist_vertical",
          [](const py::object& p, double dt) { return cc_dist_vertical(as_point(p), dt); },
          py::arg("p"), py::arg("dt"));
    m.def("cc_dist",
          [](const py::object& p, const py::object& q, double tol) {
              return cc_dist(as_point(p), as_point(q), tol);
          },
          py::arg("p"), py::arg("q"), py::arg("tol") = 1e-8);

    py::class_<GeodesicArc>(m, "GeodesicArc")
        .def_readonly("start", &GeodesicArc::start)
        .def_readonly("end", &GeodesicArc::end)
        .def_readonly("rotation_parameter", &GeodesicArc::rotation_parameter)
        .def_readonly("samples", &GeodesicArc::samples)
        .def("length", &GeodesicArc::length);
    m.def("vertical_geodesic",
          [](const py::object& p, double dt, double theta, int n_samples) {
              return vertical_geodesic(as_point(p), dt, theta, n_samples);
          },
          py::arg("p"), py::arg("dt"), py::arg("theta") = 0.0, py::arg("n_samples") = 10000);

    py::enum_<Axis>(m, "Axis").value("X", Axis::X).value("Y", Axis::Y);
    py::class_<AxisSegment>(m, "AxisSegment")
        .def(py::init([](Axis a, const py::object& start, double disp) {
                 return AxisSegment{a, as_point(start), disp};
             }),
             py::arg("axis"), py::arg("start"), py::arg("displacement"))
        .def_readonly("axis", &AxisSegment::axis)
        .def_readonly("start", &AxisSegment::start)
        .def_readonly("displacement", &AxisSegment::displacement)
        .def("end", &AxisSegment::end)
        .def("at", &AxisSegment::at);
    py::class_<BangBangPath>(m, "BangBangPath")
        .def_readonly("segments", &BangBangPath::segments)
        .def("start", &BangBangPath::start)
        .def("end", &BangBangPath::end)
        .def("cc_length", [](const BangBangPath& p) { return cc_length(p); });

    m.def("bang_bang",
          [](const py::object& p, const py::object& q) { return bang_bang(as_point(p), as_point(q)); });
    m.def("cc_length", [](const BangBangPath& p) { return cc_length(p); });
    m.def("pi_t_length", [](const std::vector<py::object>& pts) {
        Polyline3 poly;
        for (const auto& o : pts) poly.vertices.push_back(as_point(o));
        return pi_t_length(poly);
    });
    m.def("as_polyline", [](const BangBangPath& p, int samples) {
        std::vector<py::tuple> out;
        for (const HPoint& v : as_polyline(p, samples).vertices)
            out.push_back(py::make_tuple(v.x, v.y, v.t));
        return out;
    }, py::arg("path"), py::arg("samples_per_segment") = 1);

    py::class_<Box3>(m, "Box3")
        .def(py::init<double, double, double, double, double, double>(), py::arg("x0"),
             py::arg("x1"), py::arg("y0"), py::arg("y1"), py::arg("t0"), py::arg("t1"))
        .def_readonly("x0", &Box3::x0)
        .def_readonly("x1", &Box3::x1)
        .def_readonly("y0", &Box3::y0)
        .def_readonly("y1", &Box3::y1)
        .def_readonly("t0", &Box3::t0)
        .def_readonly("t1", &Box3::t1)
        .def("contains", [](const Box3& b, const py::object& p) { return b.contains(as_point(p)); })
        .def("diameter", &Box3::diameter);
    py::class_<KoranyiBall>(m, "KoranyiBall")
        .def(py::init([](const py::object& c, double r) {
                 return KoranyiBall{as_point(c), r};
             }),
             py::arg("center"), py::arg("radius"))
        .def_readonly("center", &KoranyiBall::center)
        .def_readonly("radius", &KoranyiBall::radius);
    py::class_<ObstacleSet>(m, "ObstacleSet")
        .def(py::init<>())
        .def_readwrite("boxes", &ObstacleSet::boxes)
        .def_readwrite("balls", &ObstacleSet::balls)
        .def("contains", [](const ObstacleSet& A, const py::object& p) {
            return A.contains(as_point(p));
        })
        .def("empty", &ObstacleSet::empty);
    m.def("segment_clear", &segment_clear, py::arg("obstacles"), py::arg("segment"),
          py::arg("margin") = 0.0);
    m.def("clear_radius", [](const ObstacleSet& A, const py::object& p, double cap) {
        return clear_radius(A, as_point(p), cap);
    });

    py::class_<MazeLayout>(m, "MazeLayout")
        .def(py::init<>())
        .def_readwrite("tiers", &MazeLayout::tiers)
        .def_readwrite("overlap", &MazeLayout::overlap)
        .def_readwrite("t_fill", &MazeLayout::t_fill)
        .def_readwrite("moat_frac", &MazeLayout::moat_frac)
        .def_readwrite("crack_frac", &MazeLayout::crack_frac);
    py::class_<MazeTree>(m, "MazeTree")
        .def_readonly("n", &MazeTree::n)
        .def_readonly("levels", &MazeTree::levels)
        .def_readonly("root", &MazeTree::root)
        .def_readonly("layout", &MazeTree::layout)
        .def_readonly("max_diameter_ratio", &MazeTree::max_diameter_ratio)
        .def("count", &MazeTree::count)
        .def("box", &MazeTree::box, py::return_value_policy::copy)
        .def("to_json", [](const MazeTree& t) { return to_json(t).dump(); });
    m.def("build_maze", &build_maze, py::arg("n"), py::arg("levels"),
          py::arg("layout") = MazeLayout{});
    m.def("maze_level_union", &maze_level_union);
    m.def("maze_from_json", [](const std::string& s) { return maze_from_json(json::parse(s)); });

    py::class_<AssembledComponent>(m, "AssembledComponent")
        .def_readonly("n", &AssembledComponent::n)
        .def_readonly("center", &AssembledComponent::center)
        .def_readonly("radius", &AssembledComponent::radius)
        .def_readonly("scale", &AssembledComponent::scale);
    py::class_<AssembledSet>(m, "AssembledSet")
        .def_readonly("components", &AssembledSet::components)
        .def_readonly("includes_origin", &AssembledSet::includes_origin)
        .def("to_json", [](const AssembledSet& a) { return to_json(a).dump(); });
    m.def("assemble_A", &assemble_A);

    py::class_<PlanConfig>(m, "PlanConfig")
        .def(py::init<>())
        .def_readwrite("epsilon_policy", &PlanConfig::epsilon_policy)
        .def_readwrite("max_tries", &PlanConfig::max_tries)
        .def_readwrite("seed", &PlanConfig::seed)
        .def_readwrite("margin", &PlanConfig::margin);
    py::class_<PlanResult>(m, "PlanResult")
        .def_readonly("path", &PlanResult::path)
        .def_readonly("total_cc_length", &PlanResult::total_cc_length)
        .def_readonly("clearance_certificate", &PlanResult::clearance_certificate)
        .def_readonly("tries_used", &PlanResult::tries_used)
        .def_readonly("perturbed", &PlanResult::perturbed);
    m.def("plan",
          [](const py::object& p, const py::object& q, const ObstacleSet& A, const PlanConfig& cfg) {
              return plan(as_point(p), as_point(q), A, cfg);
          },
          py::arg("p"), py::arg("q"), py::arg("obstacles"), py::arg("config") = PlanConfig{});

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](const Box3& b, double hx, double hy, double ht) {
                 return GridSpec{b, hx, hy, ht};
             }),
             py::arg("bounds"), py::arg("hx"), py::arg("hy"), py::arg("ht"))
        .def_readwrite("bounds", &GridSpec::bounds)
        .def_readwrite("hx", &GridSpec::hx)
        .def_readwrite("hy", &GridSpec::hy)
        .def_readwrite("ht", &GridSpec::ht);
    py::class_<PathEstimate>(m, "PathEstimate")
        .def_readonly("reached", &PathEstimate::reached)
        .def_readonly("cost", &PathEstimate::cost)
        .def_readonly("nodes_expanded", &PathEstimate::nodes_expanded)
        .def_property_readonly("polyline", [](const PathEstimate& e) {
            std::vector<py::tuple> out;
            for (const HPoint& v : e.polyline.vertices)
                out.push_back(py::make_tuple(v.x, v.y, v.t));
            return out;
        });
    m.def("grid_pi_distance",
          [](const ObstacleSet& A, const py::object& p, const py::object& q, const GridSpec& g) {
              return grid_pi_distance(A, as_point(p), as_point(q), g);
          },
          py::arg("obstacles"), py::arg("p"), py::arg("q"), py::arg("grid"));
    m.def("interior_crossing_cost", &interior_crossing_cost, py::arg("tree"), py::arg("level"),
          py::arg("step"), py::arg("box_index") = 0);

    py::enum_<Gauge>(m, "Gauge")
        .value("Euclidean", Gauge::Euclidean)
        .value("Koranyi", Gauge::Koranyi);
    py::class_<DimEstimate>(m, "DimEstimate")
        .def_readonly("scales", &DimEstimate::scales)
        .def_readonly("counts", &DimEstimate::counts)
        .def_readonly("slope", &DimEstimate::slope);
    m.def("box_dimension",
          [](const std::vector<py::object>& pts, Gauge g, const std::vector<double>& scales) {
              std::vector<HPoint> sample;
              for (const auto& o : pts) sample.push_back(as_point(o));
              return box_dimension(sample, g, scales);
          },
          py::arg("sample"), py::arg("gauge"), py::arg("scales"));
    m.def("box_dimension_maze",
          [](const MazeTree& t, int level, Gauge g, const std::vector<double>& scales) {
              return box_dimension(t, level, g, scales);
          },
          py::arg("tree"), py::arg("level"), py::arg("gauge"), py::arg("scales"));
    m.def("dct_bounds", &dct_bounds, py::arg("alpha"));

    m.attr("__version__") = "0.1.0";
}
