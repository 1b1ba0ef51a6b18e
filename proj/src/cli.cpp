#include "rguard/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rguard/decompose.hpp"
#include "rguard/error.hpp"
#include "rguard/oracle.hpp"
#include "rguard/polygen.hpp"
#include "rguard/visibility.hpp"

namespace rguard::cli {

namespace {

using Json = nlohmann::ordered_json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerifyFailed = 2;
constexpr int kUnsupported = 3;

// A fixed-point value `v / denom` as an integer when whole, else a double.
// denom is 2 or 4, so the double is exact.
Json number(Coord v, Coord denom) {
  if (v % denom == 0) return v / denom;
  return static_cast<double>(v) / static_cast<double>(denom);
}

Json half(Coord v) { return number(v, kScale); }

Json rect_json(const AxisRect& r) {
  return Json{{"x_lo", half(r.lo.x)}, {"y_lo", half(r.lo.y)}, {"x_hi", half(r.hi.x)},
              {"y_hi", half(r.hi.y)}};
}

Json edge_json(const HorizontalEdge& e) {
  return Json{{"x_lo", half(e.left.x)}, {"x_hi", half(e.right.x)}, {"y", half(e.y())}};
}

Json vertices_json(std::span<const Point> pts, Coord denom) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(Json::array({number(p.x, denom), number(p.y, denom)}));
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrthoPolygon load_polygon(const std::string& path) {
  const auto v = parse_polygon_document(read_file(path));
  return validate(v);
}

std::string variant_name(Variant v) { return v == Variant::Basic ? "basic" : "modified"; }

Json slabs_json(const VerticalDecomposition& d) {
  Json arr = Json::array();
  for (const auto& s : d.slabs) {
    Json j{{"index", s.index}};
    j.update(rect_json(s.rect()));
    arr.push_back(std::move(j));
  }
  return arr;
}

Coord to_half(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<Coord>() * kScale;
  if (!v.is_number_float()) throw std::invalid_argument(what + " is not a number");
  const double d = v.get<double>() * kScale;
  if (!std::isfinite(d) || d != std::floor(d))
    throw std::invalid_argument(what + " is not a multiple of 0.5");
  return static_cast<Coord>(d);
}

std::vector<AxisRect> parse_guard_regions(std::string_view text) {
  const Json doc = parse_json(text);
  std::vector<AxisRect> out;
  if (!doc.is_object() || !doc.contains("regions")) return out;
  for (const auto& r : doc["regions"]) {
    const std::string what = "region " + std::to_string(out.size());
    if (!r.is_object() || !r.contains("x_lo") || !r.contains("y_lo") || !r.contains("x_hi") ||
        !r.contains("y_hi"))
      throw std::invalid_argument(what + " needs x_lo, y_lo, x_hi, y_hi");
    out.push_back({{to_half(r["x_lo"], what), to_half(r["y_lo"], what)},
                   {to_half(r["x_hi"], what), to_half(r["y_hi"], what)}});
  }
  return out;
}

// SVG numbers in user units.
std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string render_svg(const OrthoPolygon& p, const std::vector<AxisRect>& regions,
                       const std::vector<Point>& points) {
  const AxisRect bb = p.bounding_box();
  const double margin = 1.0;
  const double x0 = to_user(bb.lo.x) - margin;
  const double top = to_user(bb.hi.y) + margin;
  const double w = to_user(bb.width()) + 2 * margin;
  const double h = to_user(bb.height()) + 2 * margin;
  auto sx = [&](Coord x) { return svg_num(to_user(x)); };
  // Screen y grows downward, so user y is measured down from the top margin.
  auto sy = [&](Coord y) { return svg_num(top - to_user(y)); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(x0) << " 0 "
    << svg_num(w) << ' ' << svg_num(h) << "\" width=\""
    << svg_num(w * 40) << "\" height=\"" << svg_num(h * 40) << "\">\n";
  s << "  <path d=\"";
  for (std::size_t i = 0; i < p.size(); ++i)
    s << (i == 0 ? "M" : " L") << sx(p.vertex(i).x) << ' ' << sy(p.vertex(i).y);
  s << " Z\" fill=\"#f2f2f2\" stroke=\"#000\" stroke-width=\"0.05\"/>\n";

  if (is_x_monotone(p)) {
    const auto d = vertical_decompose(p);
    for (std::size_t n = 2; n <= d.size(); ++n) {
      const Slab& a = d.slab(n - 1);
      const Slab& b = d.slab(n);
      s << "  <line x1=\"" << sx(b.x_left) << "\" y1=\"" << sy(std::max(a.y_low, b.y_low))
        << "\" x2=\"" << sx(b.x_left) << "\" y2=\"" << sy(std::min(a.y_high, b.y_high))
        << "\" stroke=\"#666\" stroke-width=\"0.03\" stroke-dasharray=\"0.2 0.1\"/>\n";
    }
  }
  for (const auto& r : regions) {
    s << "  <rect x=\"" << sx(r.lo.x) << "\" y=\"" << sy(r.hi.y) << "\" width=\""
      << svg_num(to_user(r.width())) << "\" height=\"" << svg_num(to_user(r.height()))
      << "\" fill=\"#1f77b4\" stroke=\"#1f77b4\" stroke-width=\"0.08\" opacity=\"0.4\"/>\n";
  }
  for (const auto& q : points) {
    s << "  <circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y)
      << "\" r=\"0.15\" fill=\"#d62728\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

std::string polygon_document(std::span<const Point> user_vertices) {
  return dump(Json{{"vertices", vertices_json(user_vertices, 1)}});
}

std::vector<Point> parse_polygon_document(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("polygon document needs a \"vertices\" array");
  std::vector<Point> v;
  for (const auto& pair : doc["vertices"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("vertex " + std::to_string(v.size()) +
                                  " is not an [x, y] integer pair");
    v.push_back({pair[0].get<Coord>(), pair[1].get<Coord>()});
  }
  return v;
}

std::string guard_document(const GuardReport& report, std::string_view algorithm) {
  Json regions = Json::array();
  for (const auto& r : report.regions) regions.push_back(rect_json(r.shape));
  return dump(Json{{"m", report.m},
                   {"regions", std::move(regions)},
                   {"points", vertices_json(report.points, kScale)},
                   {"hidden", report.hidden},
                   {"algorithm", algorithm},
                   {"clamps", report.clamps}});
}

std::vector<Point> parse_guard_points(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw std::invalid_argument("guard document needs a \"points\" array");
  std::vector<Point> pts;
  for (const auto& pair : doc["points"]) {
    const std::string what = "point " + std::to_string(pts.size());
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument(what + " is not an [x, y] pair");
    pts.push_back({to_half(pair[0], what), to_half(pair[1], what)});
  }
  return pts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guarding orthogonal polygons under rectangle visibility", "rguard"};
  app.require_subcommand(1);

  std::string input;
  std::string guards;
  std::string output;
  std::string mode = "slabs";
  std::string variant = "modified";
  std::string family = "monotone";
  bool hidden = false;
  std::size_t limit = 16;
  std::size_t slabs = 8;
  std::uint64_t seed = 0;
  Coord min_height = 1;
  Coord max_height = 8;

  const auto variants = CLI::IsMember({"basic", "modified"});

  auto* validate_cmd = app.add_subcommand("validate", "Validate a polygon and report its class");
  validate_cmd->add_option("--input", input, "Polygon document")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Emit a decomposition document");
  decompose_cmd->add_option("--input", input, "Polygon document")->required();
  decompose_cmd->add_option("--mode", mode, "slabs, balanced or pyramids")
      ->check(CLI::IsMember({"slabs", "balanced", "pyramids"}));
  decompose_cmd->add_option("--variant", variant, "basic or modified")->check(variants);

  auto* guard_cmd = app.add_subcommand("guard", "Minimum guards of an x-monotone polygon");
  guard_cmd->add_option("--input", input, "Polygon document")->required();
  guard_cmd->add_option("--variant", variant, "basic or modified")->check(variants);

  auto* hidden_cmd = app.add_subcommand("hidden", "Minimum hidden guards of a histogram");
  hidden_cmd->add_option("--input", input, "Polygon document")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a guard document with the oracle");
  verify_cmd->add_option("--input", input, "Polygon document")->required();
  verify_cmd->add_option("--guards", guards, "Guard document")->required();
  verify_cmd->add_flag("--hidden", hidden, "Also require pairwise invisibility");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum guard count");
  oracle_cmd->add_option("--input", input, "Polygon document")->required();
  oracle_cmd->add_flag("--hidden", hidden, "Minimum hidden guard set");
  oracle_cmd->add_option("--limit", limit, "Largest guard count tried");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a polygon document");
  gen_cmd->add_option("--family", family, "monotone, balanced, histogram or pyramid")
      ->check(CLI::IsMember({"monotone", "balanced", "histogram", "pyramid"}));
  gen_cmd->add_option("--slabs", slabs, "Number of slabs")->required();
  gen_cmd->add_option("--seed", seed, "Generator seed")->required();
  gen_cmd->add_option("--min-height", min_height, "Smallest slab height");
  gen_cmd->add_option("--max-height", max_height, "Largest slab height");

  auto* render_cmd = app.add_subcommand("render", "Draw a polygon and guards as SVG");
  render_cmd->add_option("--input", input, "Polygon document")->required();
  render_cmd->add_option("--guards", guards, "Guard document");
  render_cmd->add_option("--output", output, "SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*validate_cmd) {
      const auto p = load_polygon(input);
      out << dump(Json{{"valid", true},
                       {"n", p.size()},
                       {"x_monotone", is_x_monotone(p)},
                       {"balanced", is_balanced(p)},
                       {"histogram", is_histogram(p)},
                       {"pyramid", is_pyramid(p)},
                       {"orthoconvex", is_orthoconvex(p)}});
    } else if (*decompose_cmd) {
      const auto p = load_polygon(input);
      Json doc{{"mode", mode}};
      if (mode == "slabs") {
        doc["slabs"] = slabs_json(vertical_decompose(p));
      } else if (mode == "balanced") {
        const Variant v = variant == "basic" ? Variant::Basic : Variant::Modified;
        const auto d = vertical_decompose(p);
        Json pieces = Json::array();
        for (const auto& piece : balanced_decompose(d, v)) {
          pieces.push_back(Json{{"first", piece.first},
                                {"last", piece.last},
                                {"min_u", half(piece.min_u)},
                                {"max_l", half(piece.max_l)},
                                {"cut_slab", piece.cut_slab ? Json(*piece.cut_slab) : Json()},
                                {"align", edge_json(align_segment(d, piece))}});
        }
        doc["variant"] = variant_name(v);
        doc["pieces"] = std::move(pieces);
      } else {
        Json arr = Json::array();
        for (const auto& pyr : pyramid_decompose(p)) {
          arr.push_back(Json{{"base", edge_json(pyr.base)},
                             {"apex", edge_json(pyr.apex_tooth)},
                             {"basis", rect_json(pyr.basis_rect)},
                             {"kernel", rect_json(pyramid_kernel(pyr))},
                             {"vertices", vertices_json(pyr.boundary.vertices(), kScale)}});
        }
        doc["pyramids"] = std::move(arr);
      }
      out << dump(doc);
    } else if (*guard_cmd) {
      const auto p = load_polygon(input);
      const Variant v = variant == "basic" ? Variant::Basic : Variant::Modified;
      out << guard_document(guard_monotone(p, v), "monotone-" + variant_name(v));
    } else if (*hidden_cmd) {
      const auto p = load_polygon(input);
      out << guard_document(hidden_guard_histogram(p), "hidden-histogram");
    } else if (*verify_cmd) {
      const auto p = load_polygon(input);
      const auto pts = parse_guard_points(read_file(guards));
      const oracle::CellGrid grid(p);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!grid.contains(pts[i])) {
          err << "error: guard " << i << " lies outside the polygon\n";
          return kVerifyFailed;
        }
      }
      const auto cover = oracle::verify_cover(pts, grid);
      Json doc{{"covered", cover.covered}, {"uncovered", cover.uncovered.size()}};
      bool ok = cover.covered;
      if (hidden) {
        const auto h = oracle::verify_hidden(pts, grid);
        doc["hidden"] = h.hidden;
        if (h.offending)
          doc["offending"] = Json::array({h.offending->first, h.offending->second});
        ok = ok && h.hidden;
      }
      out << dump(doc);
      if (!ok) {
        err << "error: verification failed\n";
        return kVerifyFailed;
      }
    } else if (*oracle_cmd) {
      const auto p = load_polygon(input);
      oracle::SearchOptions opts;
      opts.limit = limit;
      const auto res =
          hidden ? oracle::solve_min_hidden_guards(p, opts) : oracle::solve_min_guards(p, opts);
      out << dump(Json{{"m", res.count},
                       {"hidden", hidden},
                       {"guards", vertices_json(res.guards, 2 * kScale)}});
    } else if (*gen_cmd) {
      GenSpec spec{*parse_family(family), slabs, min_height, max_height, seed};
      out << polygon_document(generate_vertices(spec));
    } else if (*render_cmd) {
      const auto p = load_polygon(input);
      std::vector<AxisRect> regions;
      std::vector<Point> pts;
      if (!guards.empty()) {
        const auto text = read_file(guards);
        regions = parse_guard_regions(text);
        pts = parse_guard_points(text);
      }
      std::ofstream f(output, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write " + output);
      f << render_svg(p, regions, pts);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_class_error(e.code()) ? kUnsupported : kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}

}  // namespace rguard::cli
