#pragma once

#include "folded_overlays.hpp"

#include <stdexcept>
#include <string>

namespace hp {

class RenderTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SvgOptions {
    int cell = 24;          // pixels per lattice unit
    int max_extent = 160;   // lattice units per axis before refusing
    bool region = true;
    bool columns = true;    // shade vertical strips by column type
    bool red_paths = true;  // ξ image of a folded survivor
};

std::string render_overlay_svg(const FoldedOverlay& o, const SvgOptions& opt = {});
std::string render_tuple_svg(const PathTuple& t, int K, const SvgOptions& opt = {});

}  // namespace hp
