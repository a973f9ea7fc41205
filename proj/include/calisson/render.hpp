#pragma once

#include <string>

#include "calisson/tiling.hpp"

namespace calisson {

struct RenderStyle {
  enum class Format { Ascii, Svg };
  Format format = Format::Ascii;
  int scale = 24;  // SVG pixels per lattice unit
  bool show_heights = false;
  bool show_colors = false;
};

// Throws Error for a non-positive scale; show_heights needs a tiling of a
// simply connected region.
std::string render_region(const Region& region, const RenderStyle& style);
std::string render_tiling(const Tiling& tiling, const RenderStyle& style);

}  // namespace calisson
