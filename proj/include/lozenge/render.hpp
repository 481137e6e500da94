// Text renderings of regions: a character lattice, SVG, and TRIREGION.
#pragma once

#include "lozenge/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lozenge {

enum class RenderFormat { Ascii, Svg, Triregion };

// Throws std::invalid_argument for anything but "ascii", "svg", "triregion".
RenderFormat parse_render_format(const std::string& name);

// One header line, then one line per row from the top: 'A' for an up cell,
// 'V' for a down cell, lowercase for cells of half-weighted positions, '.'
// for lattice positions outside the region.
std::string render_ascii(const Region& r);

// Unit triangles with side 20, half-weighted positions shaded by ovals,
// and the lozenges of the tiling outlined when one is given.
std::string render_svg(const Region& r, const std::optional<std::vector<LozengePos>>& tiling = {});

// Throws std::invalid_argument if the tiling does not tile r.
std::string render(const Region& r, RenderFormat f,
                   const std::optional<std::vector<LozengePos>>& tiling = {});

}  // namespace lozenge
