// Python surface of the core library. Everything crosses the boundary in user
// coordinates; halves come back as floats ending in .5.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rguard/cli.hpp"
#include "rguard/decompose.hpp"
#include "rguard/error.hpp"
#include "rguard/guard.hpp"
#include "rguard/oracle.hpp"
#include "rguard/polygen.hpp"
#include "rguard/visibility.hpp"

namespace py = pybind11;
using namespace rguard;

namespace {

using UserPoint = std::pair<double, double>;

py::object user_value(Coord v, Coord denom) {
  if (v % denom == 0) return py::int_(v / denom);
  return py::float_(static_cast<double>(v) / static_cast<double>(denom));
}

py::tuple user_point(Point p, Coord denom = kScale) {
  return py::make_tuple(user_value(p.x, denom), user_value(p.y, denom));
}

py::dict user_rect(const AxisRect& r) {
  py::dict d;
  d["x_lo"] = user_value(r.lo.x, kScale);
  d["y_lo"] = user_value(r.lo.y, kScale);
  d["x_hi"] = user_value(r.hi.x, kScale);
  d["y_hi"] = user_value(r.hi.y, kScale);
  return d;
}

Coord to_half(double v) {
  const double d = v * kScale;
  if (!std::isfinite(d) || d != std::floor(d))
    throw py::value_error("coordinate " + std::to_string(v) + " is not a multiple of 0.5");
  return static_cast<Coord>(d);
}

std::vector<Point> to_half_points(const std::vector<UserPoint>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& [x, y] : pts) out.push_back({to_half(x), to_half(y)});
  return out;
}

Variant parse_variant(const std::string& name) {
  if (name == "basic") return Variant::Basic;
  if (name == "modified") return Variant::Modified;
  throw py::value_error("variant must be 'basic' or 'modified'");
}

py::dict report_dict(const GuardReport& r, const std::string& algorithm) {
  py::list regions;
  py::list points;
  for (const auto& reg : r.regions) regions.append(user_rect(reg.shape));
  for (const auto& p : r.points) points.append(user_point(p));
  py::dict d;
  d["m"] = r.m;
  d["regions"] = regions;
  d["points"] = points;
  d["hidden"] = r.hidden;
  d["algorithm"] = algorithm;
  d["clamps"] = r.clamps;
  return d;
}

py::list user_vertices(const OrthoPolygon& p) {
  py::list out;
  for (auto v : p.vertices()) out.append(user_point(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Guarding orthogonal polygons under rectangle visibility";

  static py::handle error_type =
      py::exception<Error>(m, "RGuardError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<OrthoPolygon>(m, "Polygon")
      .def_property_readonly("vertices", &user_vertices,
                             "Counterclockwise vertices in user coordinates")
      .def("__len__", &OrthoPolygon::size)
      .def("is_x_monotone", [](const OrthoPolygon& p) { return is_x_monotone(p); })
      .def("is_balanced", [](const OrthoPolygon& p) { return is_balanced(p); })
      .def("is_histogram", [](const OrthoPolygon& p) { return is_histogram(p); })
      .def("is_pyramid", [](const OrthoPolygon& p) { return is_pyramid(p); })
      .def("is_orthoconvex", [](const OrthoPolygon& p) { return is_orthoconvex(p); })
      .def("contains", [](const OrthoPolygon& p, UserPoint q) {
        return contains_point(p, {to_half(q.first), to_half(q.second)});
      });

  m.def(
      "validate",
      [](const std::vector<std::pair<Coord, Coord>>& vertices) {
        std::vector<Point> v;
        for (const auto& [x, y] : vertices) v.push_back({x, y});
        return validate(v);
      },
      py::arg("vertices"), "Validate integer vertices and return a counterclockwise polygon");

  m.def(
      "r_visible",
      [](const OrthoPolygon& p, UserPoint a, UserPoint b) {
        return r_visible({to_half(a.first), to_half(a.second)},
                         {to_half(b.first), to_half(b.second)}, p);
      },
      py::arg("polygon"), py::arg("p"), py::arg("q"));

  m.def(
      "slabs",
      [](const OrthoPolygon& p) {
        py::list out;
        for (const auto& s : vertical_decompose(p).slabs) {
          py::dict d = user_rect(s.rect());
          d["index"] = s.index;
          out.append(d);
        }
        return out;
      },
      py::arg("polygon"));

  m.def(
      "balanced_pieces",
      [](const OrthoPolygon& p, const std::string& variant) {
        const auto d = vertical_decompose(p);
        py::list out;
        for (const auto& piece : balanced_decompose(d, parse_variant(variant))) {
          py::dict j;
          j["first"] = piece.first;
          j["last"] = piece.last;
          j["align_y"] = user_value(piece.align_y, kScale);
          j["cut_slab"] = piece.cut_slab ? py::object(py::int_(*piece.cut_slab)) : py::none();
          out.append(j);
        }
        return out;
      },
      py::arg("polygon"), py::arg("variant") = "modified");

  m.def(
      "pyramids",
      [](const OrthoPolygon& h) {
        py::list out;
        for (const auto& pyr : pyramid_decompose(h)) {
          py::dict j;
          j["base_y"] = user_value(pyr.base.y(), kScale);
          j["basis"] = user_rect(pyr.basis_rect);
          j["kernel"] = user_rect(pyramid_kernel(pyr));
          j["vertices"] = user_vertices(pyr.boundary);
          out.append(j);
        }
        return out;
      },
      py::arg("histogram"));

  m.def(
      "guard",
      [](const OrthoPolygon& p, const std::string& variant) {
        const Variant v = parse_variant(variant);
        return report_dict(guard_monotone(p, v), "monotone-" + variant);
      },
      py::arg("polygon"), py::arg("variant") = "modified",
      "Guard an x-monotone polygon; returns a guard document as a dict");

  m.def(
      "hidden_guard",
      [](const OrthoPolygon& h) {
        return report_dict(hidden_guard_histogram(h), "hidden-histogram");
      },
      py::arg("histogram"), "Hidden guards of a histogram; returns a guard document as a dict");

  m.def(
      "verify_cover",
      [](const OrthoPolygon& p, const std::vector<UserPoint>& points) {
        const auto pts = to_half_points(points);
        return oracle::verify_cover(pts, p).covered;
      },
      py::arg("polygon"), py::arg("points"));

  m.def(
      "verify_hidden",
      [](const OrthoPolygon& p, const std::vector<UserPoint>& points) {
        const auto pts = to_half_points(points);
        return oracle::verify_hidden(pts, p).hidden;
      },
      py::arg("polygon"), py::arg("points"));

  m.def(
      "min_guards",
      [](const OrthoPolygon& p, bool hidden, std::size_t limit) {
        oracle::SearchOptions opts;
        opts.limit = limit;
        const auto res = hidden ? oracle::solve_min_hidden_guards(p, opts)
                                : oracle::solve_min_guards(p, opts);
        py::list guards;
        for (const auto& g : res.guards) guards.append(user_point(g, 2 * kScale));
        return py::make_tuple(res.count, guards);
      },
      py::arg("polygon"), py::arg("hidden") = false, py::arg("limit") = 16,
      "Exhaustive minimum guard count and one witness set");

  m.def(
      "generate",
      [](const std::string& family, std::size_t slabs, std::uint64_t seed, Coord min_height,
         Coord max_height) {
        auto f = parse_family(family);
        if (!f) throw py::value_error("unknown family " + family);
        py::list out;
        for (auto v : generate_vertices({*f, slabs, min_height, max_height, seed}))
          out.append(py::make_tuple(v.x, v.y));
        return out;
      },
      py::arg("family"), py::arg("slabs"), py::arg("seed"), py::arg("min_height") = 1,
      py::arg("max_height") = 8, "Seeded polygon generator; returns integer vertices");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in process; returns (exit code, stdout, stderr)");
}
