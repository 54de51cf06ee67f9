#pragma once

#include <string>

#include "sinr/geometry.hpp"

namespace sinr {

struct RenderSpec {
  enum class Mode { Zones, SinrHeatmap, QdsTags };

  Bounds2D bounds{-5.0, -5.0, 5.0, 5.0};
  int width = 512, height = 512;
  Mode mode = Mode::Zones;
  std::size_t station = 0;  // heatmap subject
};

struct Image {
  int width = 0, height = 0;
  std::vector<uint8_t> rgb;  // 3 bytes per pixel, row 0 at the top

  uint8_t* at(int x, int y) { return &rgb[3 * (static_cast<std::size_t>(y) * width + x)]; }
};

// Deterministic pixel-center classification; station k gets palette color k,
// the empty zone is white.
Image render_zones(const Network& net, const RenderSpec& spec);
Image render_heatmap(const Network& net, const RenderSpec& spec);
Image render_qds(const QDS& qds, const RenderSpec& spec);

void write_ppm(const Image& img, const std::string& path);

// Per-pixel rectangles up to 256x256; above that, marching-squares contours
// of each station's SINR = beta level set (marked approximate in the output).
std::string zones_svg(const Network& net, const RenderSpec& spec);
std::string image_svg(const Image& img, const Bounds2D& bounds);

void render_to_file(const Network& net, const RenderSpec& spec, const std::string& path,
                    const std::string& format);

}  // namespace sinr
