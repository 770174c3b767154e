#pragma once

#include "codes_signs.hpp"
#include "folded_overlays.hpp"
#include "overlay_graph.hpp"

#include <set>
#include <vector>

namespace hp {

// Places the reflected rhs picture on top of the lhs overlay: rhs paths are
// stripped of their enforced runs, mirrored in y = x and translated so that
// their initial points become the green initial points (t, -t).  The rhs
// terminals then sit on the lhs forbidden line ("white points").
struct XiFrame {
    Instance lhs;
    Instance rhs;
    int dx = 0;
    int dy = 0;
    std::set<Point> white;

    static XiFrame of(const Instance& any_side);
    Point to_lhs(Point rhs_point) const { return {rhs_point.y + dx, rhs_point.x + dy}; }
    Point to_rhs(Point lhs_point) const { return {lhs_point.y - dy, lhs_point.x - dx}; }
};

// Green paths of the ξ image, drawn in the lhs frame.
std::vector<std::vector<Point>> xi_red_paths(const FoldedOverlay& o);

// Folded survivor -> rhs survivor (in its own frame).  Throws NonStripFace
// when the overlay fails the structure checks.
PathTuple xi_forward(const FoldedOverlay& o);

class AmbiguousInverse : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// rhs survivor -> folded survivor.  The overlay is recovered as the unique
// blue/green split of (rhs edges) + (vertical edges of the region's terminal
// columns) that matches the terminal colours implied by the rhs code.
FoldedOverlay xi_inverse(const PathTuple& rhs_survivor, const Instance& rhs);

// Number of ones left of every zero, in order.
std::vector<int> ones_before_zeros(const std::vector<std::uint8_t>& code);

// rhs code of the ξ image: zeros exactly at the retained counts, `length`
// bits.  Its complement is the code read in the reflected picture.
Code01 code_transform(const std::vector<std::uint8_t>& lhs_code, std::size_t length);
// Same, with the length fixed by the rhs instance; rejects codes that break
// the colour pattern of folded survivors.
Code01 code_transform(const std::vector<std::uint8_t>& full_lhs_code, const Instance& lhs);
Code01 complement(const Code01& c);

// Inverse of code_transform on full codes: rebuilds the lhs colours from the
// zero positions of an rhs code.
std::vector<std::uint8_t> lhs_code_from_rhs(const Code01& reflected, const Instance& lhs);

int xi_sign_factor(const Instance& inst);  // (-1)^binom(m+k-1+[even], 2)

}  // namespace hp
