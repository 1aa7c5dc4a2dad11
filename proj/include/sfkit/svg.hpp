#pragma once

#include <string>

#include "sfkit/complexpack.hpp"

namespace sfkit {

struct SvgOptions {
    bool dots = true;      // mark tangency points
    bool annotate = false; // t_j / r_j text labels
    double width = 640;    // output pixel width
};

/// Deterministic SVG of a normalized flower: petal circles as <circle>, half
/// planes as clipped <rect>, tangency points as dotted <circle class="dot">.
/// The viewbox is the content bounds with a 10% margin; identical input gives
/// byte-identical output.
std::string render_svg(const NormalizedFlower& fl, const SvgOptions& opts = {});

/// Deterministic SVG of a whole-complex layout (vertex circles).
std::string render_svg(const PackingLayout& layout, const SvgOptions& opts = {});

}  // namespace sfkit
