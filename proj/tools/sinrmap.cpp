// sinrmap: SINR reception maps, exact 1D diagrams, grid point location, and
// verification suites for non-uniform-power wireless networks.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "sinr/diagram1d.hpp"
#include "sinr/render.hpp"
#include "sinr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitInfeasible = 3;

sinr::Point parse_point(const std::string& text) {
  sinr::Point p;
  std::string cur;
  for (char printable : text + ",") {
    if (printable == ',') {
      if (!cur.empty()) p.coords.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += printable;
    }
  }
  if (p.coords.empty()) throw sinr::ModelError("empty point literal");
  return p;
}

sinr::Bounds2D parse_bounds(const std::string& text) {
  const sinr::Point v = parse_point(text);
  if (v.dim() != 4) throw sinr::ModelError("bounds must be x0,y0,x1,y1");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<int, int> parse_res(const std::string& text) {
  const auto xpos = text.find('x');
  if (xpos == std::string::npos) throw sinr::ModelError("resolution must be WxH");
  return {std::stoi(text.substr(0, xpos)), std::stoi(text.substr(xpos + 1))};
}

std::size_t station_index(const sinr::Network& net, const std::string& id) {
  for (std::size_t i = 0; i < net.size(); ++i)
    if (net.stations[i].id == id) return i;
  // allow bare indices too
  try {
    const std::size_t i = std::stoul(id);
    if (i < net.size()) return i;
  } catch (...) {
  }
  throw sinr::ModelError("unknown station: " + id);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sinr;
  CLI::App app{"SINR reception maps and point location for non-uniform power networks"};
  app.require_subcommand(1);

  std::string network_path, station_id = "0", point_text, bounds_text = "-5,-5,5,5";
  std::string res_text = "512x512", out_path = "out", format = "ppm", scheme_text = "C";
  std::string mode_text = "zones";
  double epsilon = 0.1, grid_step = 0.05;
  int trials = 0;
  uint64_t seed = 1;

  // eval
  auto* eval = app.add_subcommand("eval", "SINR of a station at a point");
  eval->add_option("--network", network_path)->required();
  eval->add_option("--station", station_id);
  eval->add_option("--point", point_text)->required();

  // map
  auto* map = app.add_subcommand("map", "render a reception map");
  map->add_option("--network", network_path)->required();
  map->add_option("--bounds", bounds_text);
  map->add_option("--res", res_text);
  map->add_option("--mode", mode_text)->check(CLI::IsMember({"zones", "sinr_heatmap", "qds_tags"}));
  map->add_option("--station", station_id);
  std::string map_qds_path, map_out = "map.ppm";
  map->add_option("--qds-file", map_qds_path, "QDS file for qds_tags mode");
  map->add_option("--out", map_out);
  map->add_option("--format", format)->check(CLI::IsMember({"ppm", "svg"}));

  // intervals
  auto* intervals = app.add_subcommand("intervals", "exact 1D reception intervals");
  intervals->add_option("--network", network_path)->required();
  intervals->add_option("--station", station_id);

  // count-cells
  auto* count = app.add_subcommand("count-cells", "count connected reception cells");
  count->add_option("--network", network_path)->required();
  std::string count_station = "";
  count->add_option("--station", count_station, "station id, or 'empty' for the no-reception zone");
  count->add_option("--bounds", bounds_text);
  count->add_option("--grid-step", grid_step);

  // qds build / query
  auto* qds = app.add_subcommand("qds", "grid point-location structure");
  qds->require_subcommand(1);
  auto* qds_build_cmd = qds->add_subcommand("build", "build and save a QDS");
  qds_build_cmd->add_option("--network", network_path)->required();
  qds_build_cmd->add_option("--station", station_id);
  qds_build_cmd->add_option("--scheme", scheme_text)
      ->check(CLI::IsMember({"A", "B", "C", "colinear"}));
  qds_build_cmd->add_option("--epsilon", epsilon);
  std::string qds_out = "map.sqds";
  double qds_extent = 0.0;
  qds_build_cmd->add_option("--out", qds_out);
  qds_build_cmd->add_option("--extent", qds_extent, "extent radius (required when N = 0)");
  auto* qds_query_cmd = qds->add_subcommand("query", "query a stored QDS");
  std::string qds_in;
  qds_query_cmd->add_option("--qds", qds_in)->required();
  qds_query_cmd->add_option("--point", point_text)->required();

  // construct
  auto* construct = app.add_subcommand("construct", "paper constructions");
  construct->require_subcommand(1);
  auto* c_two = construct->add_subcommand("two-station", "closed-form 2-station diagram");
  c_two->add_option("--network", network_path)->required();
  c_two->add_option("--station", station_id);
  auto* c_omega = construct->add_subcommand("omega-n", "n+1 cells from 4n+1 stations");
  int omega_n = 3;
  std::string omega_out;
  c_omega->add_option("--n", omega_n)->required();
  c_omega->add_option("--out", omega_out, "write the constructed network JSON here");
  auto* c_wires = construct->add_subcommand("wires", "log(P1) cells from concentric wires");
  int wires_rho = 3;
  double wires_p1 = 2048.0, wires_noise = 1.0;
  c_wires->add_option("--rho", wires_rho)->required();
  c_wires->add_option("--p1", wires_p1)->required();
  c_wires->add_option("--noise", wires_noise);

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("suite", suite)->required();
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      const Network net = load_network_file(network_path);
      const std::size_t i = station_index(net, station_id);
      const Point p = parse_point(point_text);
      const double v = sinr::sinr(net, i, p);
      const bool heard = is_heard(net, i, p);
      std::printf("%.17g, heard: %s\n", v, heard ? "true" : "false");
      return kExitOk;
    }

    if (*map) {
      RenderSpec spec;
      spec.bounds = parse_bounds(bounds_text);
      const auto [w, h] = parse_res(res_text);
      spec.width = w;
      spec.height = h;
      if (mode_text == "zones") spec.mode = RenderSpec::Mode::Zones;
      if (mode_text == "sinr_heatmap") spec.mode = RenderSpec::Mode::SinrHeatmap;
      if (mode_text == "qds_tags") spec.mode = RenderSpec::Mode::QdsTags;
      if (spec.mode == RenderSpec::Mode::QdsTags) {
        if (map_qds_path.empty()) throw ModelError("qds_tags mode requires --qds-file");
        const QDS q = qds_load(map_qds_path);
        const Image img = render_qds(q, spec);
        if (format == "ppm")
          write_ppm(img, map_out);
        else {
          std::ofstream svg_out(map_out);
          svg_out << image_svg(img, spec.bounds);
        }
      } else {
        const Network net = load_network_file(network_path);
        if (spec.mode == RenderSpec::Mode::SinrHeatmap)
          spec.station = station_index(net, station_id);
        render_to_file(net, spec, map_out, format);
      }
      std::printf("wrote %s\n", map_out.c_str());
      return kExitOk;
    }

    if (*intervals) {
      const Network net = load_network_file(network_path);
      const std::size_t i = station_index(net, station_id);
      const IntervalSet set = reception_intervals(net, i);
      std::cout << intervals_to_json(set).dump(2) << "\n";
      return kExitOk;
    }

    if (*count) {
      const Network net = load_network_file(network_path);
      if (net.dim == 1 && count_station.empty()) {
        const CellCounts counts = count_cells_1d(net);
        nlohmann::json j{{"total", counts.total}, {"per_station", counts.per_station},
                         {"bound_2n_minus_1", 2 * net.size() - 1}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      std::optional<std::size_t> target;
      if (count_station != "empty" && !count_station.empty())
        target = station_index(net, count_station);
      const CellCount2D res =
          count_cells_2d_auto(net, target, grid_step, parse_bounds(bounds_text));
      nlohmann::json j{{"components", res.components},
                       {"grid_step", res.grid_step},
                       {"plus_cells", res.plus_cells},
                       {"ambiguous_cells", res.ambiguous_cells},
                       {"milnor_thom_reference", res.milnor_thom_reference}};
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*qds_build_cmd) {
      const Network net = load_network_file(network_path);
      const std::size_t i = station_index(net, station_id);
      QdsConfig cfg;
      if (qds_extent > 0.0) cfg.extent_radius = qds_extent;
      const QDS q = qds_build(net, i, *scheme_from_name(scheme_text), epsilon, cfg);
      qds_save(q, qds_out);
      std::printf("wrote %s (%ux%u cells, gamma %.6g)\n", qds_out.c_str(), q.width, q.height,
                  q.gamma);
      return kExitOk;
    }

    if (*qds_query_cmd) {
      const QDS q = qds_load(qds_in);
      const Point p = parse_point(point_text);
      std::printf("%s\n", tag_name(q.query(p[0], p[1])));
      return kExitOk;
    }

    if (*c_two) {
      const Network net = load_network_file(network_path);
      const TwoStationConfig cfg = two_station_config(net, station_index(net, station_id),
                                                      net.noise == 0.0);
      nlohmann::json j;
      j["tau"] = cfg.tau;
      j["approximate"] = cfg.approximate;
      switch (cfg.kind) {
        case TwoStationConfig::Kind::Halfplane:
          j["kind"] = "halfplane";
          j["canonical_offset"] = cfg.halfplane_offset;
          break;
        case TwoStationConfig::Kind::Disk:
          j["kind"] = "disk";
          j["center"] = cfg.center.coords;
          j["radius"] = cfg.radius;
          break;
        default:
          j["kind"] = "disk_complement";
          j["center"] = cfg.center.coords;
          j["radius"] = cfg.radius;
          break;
      }
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*c_omega) {
      const OmegaN c = construct_omega_n(omega_n);
      nlohmann::json j = c.report();
      if (c.feasible) {
        const double extent = c.R + 2.0;
        const CellCount2D cells = count_cells_2d_auto(
            c.net, 0, 0.05, Bounds2D{-extent, -extent, extent, extent}, 6);
        j["flood_fill_cells"] = cells.components;
        if (!omega_out.empty()) {
          save_network_file(c.net, omega_out);
          j["network_file"] = omega_out;
        }
      }
      std::cout << j.dump(2) << "\n";
      if (!c.feasible) return kExitInfeasible;
      return (c.r1_pass && c.r2_pass) ? kExitOk : kExitVerifyFail;
    }

    if (*c_wires) {
      const LogWires c = construct_log_wires(wires_rho, wires_p1, wires_noise);
      nlohmann::json j = c.report();
      if (c.feasible)
        j["axis_scan_cells"] =
            wire_axis_cell_scan(c.net, 3.0 * std::pow(4.0, wires_rho), 200000);
      std::cout << j.dump(2) << "\n";
      if (!c.feasible) return kExitInfeasible;
      return c.pass ? kExitOk : kExitVerifyFail;
    }

    if (*verify) {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
        return kExitUsage;
      }
      const int default_trials[] = {200, 200, 100, 100, 1200, 1000, 40, 6};
      int t = trials;
      if (t <= 0) {
        for (std::size_t k = 0; k < names.size(); ++k)
          if (names[k] == suite) t = default_trials[k];
      }
      const SuiteResult res = run_suite(suite, seed, t);
      std::printf("[%s] %s: %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                  res.detail.c_str());
      std::cout << res.report.dump(2) << "\n";
      return res.pass ? kExitOk : kExitVerifyFail;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
