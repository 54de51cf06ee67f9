#include "sinr/render.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sinr {

namespace {

struct Rgb {
  uint8_t r, g, b;
};

// station palette, cycled
constexpr Rgb kPalette[] = {
    {31, 119, 180}, {255, 127, 14}, {44, 160, 44},  {214, 39, 40},  {148, 103, 189},
    {140, 86, 75},  {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207},
};

Rgb station_color(std::size_t i) { return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

double px_to_x(const RenderSpec& s, int ix) {
  return s.bounds.x0 + (s.bounds.x1 - s.bounds.x0) * (ix + 0.5) / s.width;
}

double px_to_y(const RenderSpec& s, int iy) {
  // row 0 at the top = max y
  return s.bounds.y1 - (s.bounds.y1 - s.bounds.y0) * (iy + 0.5) / s.height;
}

void check_spec(const RenderSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) throw ModelError("resolution must be positive");
  if (!(spec.bounds.x1 > spec.bounds.x0) || !(spec.bounds.y1 > spec.bounds.y0))
    throw ModelError("degenerate render bounds");
}

}  // namespace

Image render_zones(const Network& net, const RenderSpec& spec) {
  check_spec(spec);
  Image img{spec.width, spec.height, std::vector<uint8_t>(3u * spec.width * spec.height, 255)};
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      const Point p({px_to_x(spec, ix), px_to_y(spec, iy)});
      const ReceptionTag tag = heard_station(net, p);
      if (tag.silent()) continue;
      const Rgb c = station_color(*tag.station);
      uint8_t* px = img.at(ix, iy);
      px[0] = c.r;
      px[1] = c.g;
      px[2] = c.b;
    }
  }
  return img;
}

Image render_heatmap(const Network& net, const RenderSpec& spec) {
  check_spec(spec);
  if (spec.station >= net.size()) throw ModelError("station index out of range");
  Image img{spec.width, spec.height, std::vector<uint8_t>(3u * spec.width * spec.height, 0)};
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      const Point p({px_to_x(spec, ix), px_to_y(spec, iy)});
      double v = 0.0;
      bool at_station = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at_station = true;
      if (!at_station) v = sinr(net, spec.station, p);
      // log-scale ramp centered on beta: t in [0,1] over +-3 decades
      const double t =
          std::clamp(0.5 + std::log10(std::max(v, 1e-30) / net.beta) / 6.0, 0.0, 1.0);
      uint8_t* px = img.at(ix, iy);
      px[0] = static_cast<uint8_t>(255.0 * t);
      px[1] = static_cast<uint8_t>(64.0 + 128.0 * t);
      px[2] = static_cast<uint8_t>(255.0 * (1.0 - t));
    }
  }
  return img;
}

Image render_qds(const QDS& qds, const RenderSpec& spec) {
  check_spec(spec);
  Image img{spec.width, spec.height, std::vector<uint8_t>(3u * spec.width * spec.height, 255)};
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      uint8_t* px = img.at(ix, iy);
      switch (qds.query(px_to_x(spec, ix), px_to_y(spec, iy))) {
        case CellTag::Plus:
          px[0] = 46, px[1] = 160, px[2] = 67;
          break;
        case CellTag::Minus:
          px[0] = 220, px[1] = 50, px[2] = 47;
          break;
        default:
          px[0] = 255, px[1] = 200, px[2] = 40;
          break;
      }
    }
  }
  return img;
}

void write_ppm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError("cannot write image file: " + path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.rgb.data()),
            static_cast<std::streamsize>(img.rgb.size()));
}

std::string image_svg(const Image& img, const Bounds2D& bounds) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << img.width << "\" height=\""
      << img.height << "\" viewBox=\"0 0 " << img.width << " " << img.height << "\" data-bounds=\""
      << bounds.x0 << "," << bounds.y0 << "," << bounds.x1 << "," << bounds.y1 << "\">\n";
  // run-length rectangles per row
  const Image& im = img;
  for (int y = 0; y < im.height; ++y) {
    int x = 0;
    while (x < im.width) {
      const uint8_t* px = &im.rgb[3 * (static_cast<std::size_t>(y) * im.width + x)];
      int run = 1;
      while (x + run < im.width) {
        const uint8_t* q = &im.rgb[3 * (static_cast<std::size_t>(y) * im.width + x + run)];
        if (q[0] != px[0] || q[1] != px[1] || q[2] != px[2]) break;
        ++run;
      }
      if (!(px[0] == 255 && px[1] == 255 && px[2] == 255)) {
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << run
            << "\" height=\"1\" fill=\"rgb(" << int(px[0]) << "," << int(px[1]) << ","
            << int(px[2]) << ")\"/>\n";
      }
      x += run;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

// marching-squares segments of sinr(i, .) = beta on the pixel grid
static void contour_station(const Network& net, const RenderSpec& spec, std::size_t i,
                            std::ostringstream& svg) {
  const int w = spec.width, h = spec.height;
  std::vector<double> f(static_cast<std::size_t>(w) * h);
  for (int iy = 0; iy < h; ++iy)
    for (int ix = 0; ix < w; ++ix) {
      const Point p({px_to_x(spec, ix), px_to_y(spec, iy)});
      bool at_station = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at_station = true;
      f[static_cast<std::size_t>(iy) * w + ix] =
          at_station ? (i < net.size() && net.pos(i) == p ? 1e30 : -1e30)
                     : sinr(net, i, p) - net.beta;
    }
  const Rgb c = station_color(i);
  svg << "<g stroke=\"rgb(" << int(c.r) << "," << int(c.g) << "," << int(c.b)
      << ")\" stroke-width=\"1\" fill=\"none\">\n";
  const auto lerp = [](double a, double b) { return a / (a - b); };
  for (int iy = 0; iy + 1 < h; ++iy) {
    for (int ix = 0; ix + 1 < w; ++ix) {
      const double v00 = f[static_cast<std::size_t>(iy) * w + ix];
      const double v10 = f[static_cast<std::size_t>(iy) * w + ix + 1];
      const double v01 = f[static_cast<std::size_t>(iy + 1) * w + ix];
      const double v11 = f[static_cast<std::size_t>(iy + 1) * w + ix + 1];
      struct Pt {
        double x, y;
      };
      Pt pts[4];
      int np = 0;
      if ((v00 >= 0) != (v10 >= 0)) pts[np++] = {ix + lerp(v00, v10), double(iy)};
      if ((v01 >= 0) != (v11 >= 0)) pts[np++] = {ix + lerp(v01, v11), double(iy + 1)};
      if ((v00 >= 0) != (v01 >= 0)) pts[np++] = {double(ix), iy + lerp(v00, v01)};
      if ((v10 >= 0) != (v11 >= 0)) pts[np++] = {double(ix + 1), iy + lerp(v10, v11)};
      if (np >= 2)
        svg << "<line x1=\"" << pts[0].x << "\" y1=\"" << pts[0].y << "\" x2=\"" << pts[1].x
            << "\" y2=\"" << pts[1].y << "\"/>\n";
      if (np == 4)
        svg << "<line x1=\"" << pts[2].x << "\" y1=\"" << pts[2].y << "\" x2=\"" << pts[3].x
            << "\" y2=\"" << pts[3].y << "\"/>\n";
    }
  }
  svg << "</g>\n";
}

std::string zones_svg(const Network& net, const RenderSpec& spec) {
  check_spec(spec);
  if (static_cast<long>(spec.width) * spec.height <= 256 * 256)
    return image_svg(render_zones(net, spec), spec.bounds);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" data-approximate=\"true\">\n";
  for (std::size_t i = 0; i < net.size(); ++i) contour_station(net, spec, i, svg);
  svg << "</svg>\n";
  return svg.str();
}

void render_to_file(const Network& net, const RenderSpec& spec, const std::string& path,
                    const std::string& format) {
  if (format == "ppm") {
    Image img;
    switch (spec.mode) {
      case RenderSpec::Mode::Zones: img = render_zones(net, spec); break;
      case RenderSpec::Mode::SinrHeatmap: img = render_heatmap(net, spec); break;
      default: throw ModelError("qds_tags mode needs a QDS file; use `qds build` + map");
    }
    write_ppm(img, path);
    return;
  }
  if (format == "svg") {
    std::string body;
    if (spec.mode == RenderSpec::Mode::Zones)
      body = zones_svg(net, spec);
    else if (spec.mode == RenderSpec::Mode::SinrHeatmap)
      body = image_svg(render_heatmap(net, spec), spec.bounds);
    else
      throw ModelError("qds_tags mode needs a QDS file; use `qds build` + map");
    std::ofstream out(path);
    if (!out) throw ModelError("cannot write image file: " + path);
    out << body;
    return;
  }
  throw ModelError("unknown image format: " + format);
}

}  // namespace sinr
