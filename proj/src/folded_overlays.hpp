#pragma once

#include "codes_signs.hpp"
#include "exact_arith.hpp"
#include "lattice_paths.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace hp {

enum class Colour : std::uint8_t { blue = 0, green = 1 };
inline Colour flip(Colour c) { return c == Colour::blue ? Colour::green : Colour::blue; }
const char* to_string(Colour c);

struct Edge {
    Point from;
    Point to;
    auto operator<=>(const Edge&) const = default;
};

struct ColouredPath {
    Colour colour = Colour::blue;
    std::vector<Point> pts;
    int terminal() const { return pts.back().x; }
    auto operator<=>(const ColouredPath&) const = default;
};

// Paths that stay weakly below the diagonal keep their place (blue), paths
// above it are mirrored into y <= x (green).  Enforced runs and two-faced
// paths are stripped; paths are kept sorted by (colour, start).
struct FoldedOverlay {
    Instance inst;
    std::vector<ColouredPath> paths;

    void normalize();
    std::set<std::pair<Edge, Colour>> edges() const;
    std::set<Point> vertices(Colour c) const;
    std::set<Point> bicoloured_points() const;
    std::map<int, Colour> terminal_colours() const;  // non-two-faced terminals
    std::vector<std::uint8_t> code() const;           // blue 0, green 1, ascending terminals
    bool operator==(const FoldedOverlay& o) const { return paths == o.paths; }
};

FoldedOverlay fold(const PathTuple& s, const Instance& inst);
PathTuple unfold(const FoldedOverlay& o);
int overlay_sign(const FoldedOverlay& o);

// Mirror of the whole tuple in y = x; the forbidden line becomes y = x + K.
PathTuple reflect_tuple(const PathTuple& s);
PathTuple reflect_rhs(const PathTuple& s, const Instance& inst);

struct ConnectionStep {
    Edge edge;
    Colour colour;
    bool reversed;
};

struct BicolouredConnection {
    Point start;
    Point end;
    Colour start_colour;
    Colour end_colour;
    std::vector<ConnectionStep> steps;
};

class TraversalCycle : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

BicolouredConnection trace_connection(const FoldedOverlay& o, int terminal);
bool is_involutive(const FoldedOverlay& o, const BicolouredConnection& c);
std::optional<BicolouredConnection> find_involutive_connection(const FoldedOverlay& o);
FoldedOverlay swap_colours(const FoldedOverlay& o, const BicolouredConnection& c);
FoldedOverlay psi(const FoldedOverlay& o);

struct FoldedSurvivor {
    FoldedOverlay overlay;
    int sign = 1;
};

std::vector<FoldedSurvivor> folded_survivors(const Instance& inst, const Budget& budget = {});

}  // namespace hp
