#pragma once

#include "folded_overlays.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hp {

// Trapezoid bounded by the forbidden line, the line through the blue
// initial points, the diagonal and the last terminal column.
struct EssentialRegion {
    int K = 1;
    int blue_line = 0;  // x + y >= blue_line
    int x_max = 0;

    static EssentialRegion of(const Instance& lhs);
    bool contains(Point p) const {
        return p.y >= p.x - K && p.x + p.y >= blue_line && p.y <= p.x && p.x <= x_max;
    }
    int lower(int x) const { return std::max(x - K, blue_line - x); }
    bool on_forbidden(Point p) const { return p.y == p.x - K; }
    bool on_blue_line(Point p) const { return p.x + p.y == blue_line; }
    std::vector<Point> lattice_points(int z = std::numeric_limits<int>::min()) const;
};

enum ColourMask : std::uint8_t { mask_blue = 1, mask_green = 2 };
inline std::uint8_t mask_of(Colour c) { return c == Colour::blue ? mask_blue : mask_green; }

enum class EdgeKind : std::uint8_t { lattice, slanted, cut };

struct GraphEdge {
    Point a;  // a < b lexicographically
    Point b;
    std::uint8_t colours = 0;
    EdgeKind kind = EdgeKind::lattice;

    bool horizontal() const { return kind == EdgeKind::lattice && a.y == b.y; }
    bool vertical() const { return kind == EdgeKind::lattice && a.x == b.x; }
    bool unicoloured() const { return colours == mask_blue || colours == mask_green; }
};

struct OverlayGraph {
    EssentialRegion region;
    int level = std::numeric_limits<int>::min();  // vertices below it removed
    std::set<Point> two_faced;
    std::vector<GraphEdge> edges;
    std::map<Point, std::vector<int>> incident;  // vertex -> edge ids

    int degree(Point p) const;
    std::optional<int> find_edge(Point a, Point b) const;
    int loose_ends() const;
};

// Merges double edges, keeps what lies in the essential region (and on or
// above `level`), then closes loose ends along the boundary lines.
OverlayGraph build_graph(const FoldedOverlay& o);
OverlayGraph build_level_graph(const FoldedOverlay& o, int level);

struct FaceStep {
    int edge;
    Point from;
    Point to;
    bool black() const { return to.x > from.x || (to.x == from.x && to.y > from.y); }
};

struct Face {
    std::vector<FaceStep> boundary;  // counterclockwise
    long long twice_area = 0;
};

std::vector<Face> finite_faces(const OverlayGraph& g);

enum class StripType : std::uint8_t { BB, BG, GB, GG };
const char* to_string(StripType t);

struct VerticalStrip {
    int face = -1;
    int left_x = 0;
    int left_lo = 0, left_hi = 0;    // left side y-range
    int right_lo = 0, right_hi = 0;  // right side y-range
    int bottom = 0, top = 0;         // y-range of the whole face
    StripType type = StripType::BB;
};

struct StripIssue {
    int face = -1;
    std::string what;
};

struct Column {
    std::vector<int> strips;  // indices into StripDecomposition::strips, left to right
    StripType type = StripType::BB;
};

struct StripDecomposition {
    std::vector<VerticalStrip> strips;
    std::vector<Column> columns;  // in row order
};

class NonStripFace : public std::runtime_error {
public:
    NonStripFace(const std::string& what, Face face) : std::runtime_error(what), face(std::move(face)) {}
    Face face;
};

// Classifies one face; nullopt plus an issue when it is not a vertical strip
// with uniformly coloured sides.
std::optional<VerticalStrip> as_vertical_strip(const OverlayGraph& g, const Face& f, int id, StripIssue* issue = nullptr);

struct StructureReport {
    int faces = 0;
    int strips = 0;
    std::vector<StripIssue> issues;
    int descending_pairs = 0;
    int descending_mixed = 0;       // descending pair of different types
    int ascending_pairs = 0;
    int ascending_bad_types = 0;    // violates the BB/GB -> BB/BG, BG/GG -> GB/GG rule
    int irregular_pairs = 0;        // adjacent but neither ascending nor descending
    int columns = 0;
    bool row = false;               // columns chain by ascending adjacency
    int gb_not_followed_by_bg = 0;
    int bb_right_of_gb = 0;
    int free_kinks_above = 0;
    int free_kinks_on_line = 0;
    bool corollary = false;
    bool ok() const;
};

StructureReport analyse_structure(const FoldedOverlay& o);
StripDecomposition decompose_strips(const FoldedOverlay& o);

struct FreeKink {
    Point middle;
    Colour colour;
};
std::vector<FreeKink> detect_free_kinks(const OverlayGraph& g);

struct Configurations {
    int isolated_vertices = 0;
    int bicoloured_horizontal = 0;
    int uncrossed_double_steps = 0;
    bool any() const { return isolated_vertices || bicoloured_horizontal || uncrossed_double_steps; }
};
Configurations find_configurations(const OverlayGraph& g);

// Terminal colours after the first green one never show two blues in a row.
bool corollary_pattern(const std::vector<std::uint8_t>& code);

struct LemmaChainResult {
    int levels = 0;
    int premise_levels = 0;  // levels z whose graph at z+1 has no free kink above the forbidden line
    int violations = 0;
};
LemmaChainResult check_lemma_chain(const FoldedOverlay& o);

}  // namespace hp
