#include "overlay_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace hp {

EssentialRegion EssentialRegion::of(const Instance& lhs) {
    if (lhs.side != Side::lhs) throw std::invalid_argument("the essential region is defined for the lhs");
    return {lhs.K(), static_cast<int>(-2L * lhs.M() - lhs.K() + 2), lhs.N() - 1};
}

std::vector<Point> EssentialRegion::lattice_points(int z) const {
    std::vector<Point> out;
    for (int x = std::min(0, blue_line / 2) - K; x <= x_max; ++x)
        for (int y = std::max(lower(x), z); y <= x; ++y) out.push_back({x, y});
    return out;
}

int OverlayGraph::degree(Point p) const {
    const auto it = incident.find(p);
    return it == incident.end() ? 0 : static_cast<int>(it->second.size());
}

std::optional<int> OverlayGraph::find_edge(Point a, Point b) const {
    if (b < a) std::swap(a, b);
    const auto it = incident.find(a);
    if (it == incident.end()) return std::nullopt;
    for (int e : it->second)
        if (edges[e].a == a && edges[e].b == b) return e;
    return std::nullopt;
}

int OverlayGraph::loose_ends() const {
    int n = 0;
    for (auto& [p, ids] : incident) n += ids.size() == 1;
    return n;
}

namespace {

void add_edge(OverlayGraph& g, Point a, Point b, std::uint8_t colours, EdgeKind kind) {
    if (b < a) std::swap(a, b);
    if (auto e = g.find_edge(a, b)) {
        g.edges[*e].colours |= colours;
        return;
    }
    const int id = static_cast<int>(g.edges.size());
    g.edges.push_back({a, b, colours, kind});
    g.incident[a].push_back(id);
    g.incident[b].push_back(id);
}

std::uint8_t lattice_colours_at(const OverlayGraph& g, Point p) {
    const auto it = g.incident.find(p);
    if (it == g.incident.end()) return 0;
    for (int e : it->second)
        if (g.edges[e].kind == EdgeKind::lattice && g.edges[e].unicoloured()) return g.edges[e].colours;
    for (int e : it->second)
        if (g.edges[e].kind == EdgeKind::lattice) return g.edges[e].colours;
    return 0;
}

// Joins loose ends that are neighbours along one boundary line.  `step` is
// the lattice offset between neighbours on that line.
template <class OnLine, class Colouring>
void close_line(OverlayGraph& g, const std::vector<Point>& loose, Point step, EdgeKind kind, OnLine on_line,
                Colouring colour_of) {
    std::set<Point> ends;
    for (Point p : loose)
        if (on_line(p)) ends.insert(p);
    for (Point p : ends) {
        const Point q{p.x + step.x, p.y + step.y};
        if (ends.count(q) && !g.find_edge(p, q)) add_edge(g, p, q, colour_of(p), kind);
    }
}

OverlayGraph build(const FoldedOverlay& o, int level, bool cut) {
    OverlayGraph g;
    g.region = EssentialRegion::of(o.inst);
    g.level = level;
    for (const auto& e : enforced_points(o.inst.K(), o.inst.M(), o.inst.N()))
        if (e.two_faced) g.two_faced.insert(e.point);
    auto inside = [&](Point p) { return g.region.contains(p) && p.y >= level; };
    for (auto& [e, c] : o.edges())
        if (inside(e.from) && inside(e.to)) add_edge(g, e.from, e.to, mask_of(c), EdgeKind::lattice);

    std::vector<Point> loose;
    for (auto& [p, ids] : g.incident)
        if (ids.size() == 1) loose.push_back(p);
    const EssentialRegion& r = g.region;
    close_line(g, loose, {1, 1}, EdgeKind::slanted, [](Point p) { return p.x == p.y; },
               [&](Point p) { return lattice_colours_at(g, p); });
    close_line(g, loose, {1, -1}, EdgeKind::slanted, [&](Point p) { return r.on_blue_line(p); },
               [](Point) { return std::uint8_t{mask_green}; });
    close_line(g, loose, {1, 1}, EdgeKind::slanted, [&](Point p) { return r.on_forbidden(p); },
               [](Point) { return std::uint8_t{mask_blue}; });
    if (cut)
        close_line(g, loose, {1, 0}, EdgeKind::cut, [&](Point p) { return p.y == level; },
                   [&](Point p) { return lattice_colours_at(g, p); });
    return g;
}

// Counterclockwise index of a unit or diagonal direction.
int direction_index(Point d) {
    static const std::array<Point, 8> dirs{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
    for (int i = 0; i < 8; ++i)
        if (dirs[i] == d) return i;
    throw std::logic_error("edge is not a unit lattice or diagonal step");
}

Point other_end(const GraphEdge& e, Point p) { return e.a == p ? e.b : e.a; }

}  // namespace

OverlayGraph build_graph(const FoldedOverlay& o) { return build(o, std::numeric_limits<int>::min(), false); }

OverlayGraph build_level_graph(const FoldedOverlay& o, int level) { return build(o, level, true); }

std::vector<Face> finite_faces(const OverlayGraph& g) {
    // rotation system: neighbours of every vertex by counterclockwise direction
    std::map<Point, std::array<int, 8>> rot;
    for (auto& [p, ids] : g.incident) {
        auto& slots = rot[p];
        slots.fill(-1);
        for (int e : ids) {
            const Point q = other_end(g.edges[e], p);
            slots[direction_index({q.x - p.x, q.y - p.y})] = e;
        }
    }
    std::set<std::pair<int, bool>> used;  // (edge, traversed a->b)
    std::vector<Face> out;
    for (int start = 0; start < static_cast<int>(g.edges.size()); ++start) {
        for (bool forward : {true, false}) {
            if (used.count({start, forward})) continue;
            Face f;
            int e = start;
            bool fw = forward;
            while (used.insert({e, fw}).second) {
                const Point from = fw ? g.edges[e].a : g.edges[e].b;
                const Point to = fw ? g.edges[e].b : g.edges[e].a;
                f.boundary.push_back({e, from, to});
                f.twice_area += static_cast<long long>(from.x) * to.y - static_cast<long long>(to.x) * from.y;
                // first edge clockwise from the way back
                const auto& slots = rot.at(to);
                const int back = direction_index({from.x - to.x, from.y - to.y});
                int next = -1;
                for (int s = 1; s <= 8 && next < 0; ++s) next = slots[(back - s + 8) % 8];
                e = next;
                fw = g.edges[e].a == to;
            }
            if (f.twice_area > 0) out.push_back(std::move(f));
        }
    }
    return out;
}

const char* to_string(StripType t) {
    switch (t) {
        case StripType::BB: return "BB";
        case StripType::BG: return "BG";
        case StripType::GB: return "GB";
        case StripType::GG: return "GG";
    }
    return "?";
}

namespace {

struct SideInfo {
    std::vector<const FaceStep*> verticals;
    const FaceStep* bend = nullptr;
    int non_vertical = 0;
};

// Colour of a side: the colour shared by all of its vertical edges, or the
// bend when the side has no vertical edge or every edge is bicoloured.
// Returns 0 when the side is not uniform.
std::uint8_t side_colour(const OverlayGraph& g, const SideInfo& s, std::string& why) {
    std::uint8_t common = mask_blue | mask_green;
    for (auto* v : s.verticals) common &= g.edges[v->edge].colours;
    if (common == 0) {
        why = "side changes colour";
        return 0;
    }
    if (common == (mask_blue | mask_green)) common = g.edges[s.bend->edge].colours;
    if (common != mask_blue && common != mask_green) {
        why = "side colour is undetermined";
        return 0;
    }
    return common;
}

void side_range(const SideInfo& s, int& lo, int& hi) {
    if (s.verticals.empty()) {
        lo = hi = s.bend->from.y;
        return;
    }
    lo = std::numeric_limits<int>::max();
    hi = std::numeric_limits<int>::min();
    for (auto* v : s.verticals) {
        lo = std::min({lo, v->from.y, v->to.y});
        hi = std::max({hi, v->from.y, v->to.y});
    }
}

}  // namespace

std::optional<VerticalStrip> as_vertical_strip(const OverlayGraph& g, const Face& f, int id, StripIssue* issue) {
    auto fail = [&](std::string what) -> std::optional<VerticalStrip> {
        if (issue) *issue = {id, std::move(what)};
        return std::nullopt;
    };
    const auto& b = f.boundary;
    int switches = 0;
    for (std::size_t i = 0; i < b.size(); ++i) switches += b[i].black() != b[(i + 1) % b.size()].black();
    if (switches != 2) return fail("boundary is not one black and one red segment");
    SideInfo right, left;
    for (const auto& s : b) {
        SideInfo& side = s.black() ? right : left;
        if (g.edges[s.edge].vertical()) {
            side.verticals.push_back(&s);
        } else {
            ++side.non_vertical;
            side.bend = &s;
        }
    }
    if (right.non_vertical != 1 || left.non_vertical != 1) return fail("a side has more than one horizontal or slanted step");
    VerticalStrip v;
    v.face = id;
    int min_x = std::numeric_limits<int>::max(), max_x = std::numeric_limits<int>::min();
    v.bottom = std::numeric_limits<int>::max();
    v.top = std::numeric_limits<int>::min();
    for (const auto& s : b) {
        min_x = std::min(min_x, s.from.x);
        max_x = std::max(max_x, s.from.x);
        v.bottom = std::min(v.bottom, s.from.y);
        v.top = std::max(v.top, s.from.y);
    }
    if (max_x != min_x + 1) return fail("face is wider than one column");
    v.left_x = min_x;
    std::string why;
    const auto lc = side_colour(g, left, why);
    if (!lc) return fail("left side: " + why);
    const auto rc = side_colour(g, right, why);
    if (!rc) return fail("right side: " + why);
    side_range(left, v.left_lo, v.left_hi);
    side_range(right, v.right_lo, v.right_hi);
    const bool lg = lc == mask_green, rg = rc == mask_green;
    v.type = lg ? (rg ? StripType::GG : StripType::GB) : (rg ? StripType::BG : StripType::BB);
    return v;
}

std::vector<FreeKink> detect_free_kinks(const OverlayGraph& g) {
    std::vector<FreeKink> out;
    for (auto& [p, ids] : g.incident) {
        if (ids.size() != 2) continue;
        const GraphEdge& e0 = g.edges[ids[0]];
        const GraphEdge& e1 = g.edges[ids[1]];
        if (!e0.unicoloured() || e0.colours != e1.colours) continue;
        const GraphEdge* h = e0.horizontal() ? &e0 : e1.horizontal() ? &e1 : nullptr;
        const GraphEdge* v = e0.vertical() ? &e0 : e1.vertical() ? &e1 : nullptr;
        // arrives from the left, leaves upwards
        if (h && v && h->b == p && v->a == p)
            out.push_back({p, e0.colours == mask_blue ? Colour::blue : Colour::green});
    }
    return out;
}

Configurations find_configurations(const OverlayGraph& g) {
    Configurations c;
    for (Point p : g.region.lattice_points(g.level)) {
        if (g.two_faced.count(p) || p.y == g.level) continue;
        bool lattice = false;
        if (auto it = g.incident.find(p); it != g.incident.end())
            for (int e : it->second) lattice |= g.edges[e].kind == EdgeKind::lattice;
        c.isolated_vertices += !lattice;
    }
    for (const auto& e : g.edges)
        if (e.horizontal() && e.colours == (mask_blue | mask_green)) ++c.bicoloured_horizontal;
    for (auto& [p, ids] : g.incident) {
        if (ids.size() != 2) continue;
        const GraphEdge& e0 = g.edges[ids[0]];
        const GraphEdge& e1 = g.edges[ids[1]];
        if (e0.horizontal() && e1.horizontal() && e0.unicoloured() && e0.colours == e1.colours) ++c.uncrossed_double_steps;
    }
    return c;
}

bool corollary_pattern(const std::vector<std::uint8_t>& code) {
    bool seen_green = false;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (seen_green && i > 0 && code[i] == 0 && code[i - 1] == 0) return false;
        seen_green |= code[i] == 1;
    }
    return true;
}

namespace {

enum class Adjacency { none, ascending, descending, irregular };

// Strips in neighbouring columns are adjacent when the right side of the
// left one meets the left side of the right one.  Sides that only touch in
// a point count for a strip hanging below its left neighbour.
Adjacency adjacency(const VerticalStrip& l, const VerticalStrip& r) {
    if (r.left_x != l.left_x + 1) return Adjacency::none;
    if (l.right_lo == l.right_hi || r.left_lo == r.left_hi) return Adjacency::none;
    const int overlap = std::min(l.right_hi, r.left_hi) - std::max(l.right_lo, r.left_lo);
    if (overlap < 0) return Adjacency::none;
    if (r.top < l.top) return Adjacency::descending;
    if (overlap == 0) return Adjacency::none;
    return Adjacency::ascending;
}

bool left_is_green(StripType t) { return t == StripType::GB || t == StripType::GG; }
bool right_is_green(StripType t) { return t == StripType::BG || t == StripType::GG; }

struct Analysis {
    StructureReport report;
    StripDecomposition decomposition;
    std::optional<Face> first_bad_face;
};

Analysis analyse(const FoldedOverlay& o) {
    Analysis an;
    StructureReport& rep = an.report;
    const OverlayGraph g = build_graph(o);
    const auto faces = finite_faces(g);
    rep.faces = static_cast<int>(faces.size());
    auto& strips = an.decomposition.strips;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        StripIssue issue;
        if (auto s = as_vertical_strip(g, faces[i], static_cast<int>(i), &issue)) {
            strips.push_back(*s);
        } else {
            rep.issues.push_back(issue);
            if (!an.first_bad_face) an.first_bad_face = faces[i];
        }
    }
    rep.strips = static_cast<int>(strips.size());

    const int n = static_cast<int>(strips.size());
    std::vector<int> down_next(n, -1), down_prev(n, -1);
    std::vector<std::pair<int, int>> ascending;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            switch (adjacency(strips[i], strips[j])) {
                case Adjacency::descending:
                    ++rep.descending_pairs;
                    if (strips[i].type != strips[j].type) ++rep.descending_mixed;
                    if (down_next[i] >= 0 || down_prev[j] >= 0) ++rep.irregular_pairs;
                    down_next[i] = j;
                    down_prev[j] = i;
                    break;
                case Adjacency::ascending: {
                    ++rep.ascending_pairs;
                    ascending.emplace_back(i, j);
                    if (right_is_green(strips[i].type) != left_is_green(strips[j].type)) ++rep.ascending_bad_types;
                    break;
                }
                case Adjacency::irregular: ++rep.irregular_pairs; break;
                case Adjacency::none: break;
            }
        }

    std::vector<int> column_of(n, -1);
    auto& columns = an.decomposition.columns;
    for (int i = 0; i < n; ++i) {
        if (down_prev[i] >= 0) continue;
        Column c;
        c.type = strips[i].type;
        for (int j = i; j >= 0 && column_of[j] < 0; j = down_next[j]) {
            column_of[j] = static_cast<int>(columns.size());
            c.strips.push_back(j);
        }
        columns.push_back(std::move(c));
    }
    rep.columns = static_cast<int>(columns.size());

    // the row: columns chained by ascending adjacency, left to right
    const int nc = rep.columns;
    std::vector<std::set<int>> succ(nc), pred(nc);
    for (auto [i, j] : ascending)
        if (column_of[i] >= 0 && column_of[j] >= 0 && column_of[i] != column_of[j]) {
            succ[column_of[i]].insert(column_of[j]);
            pred[column_of[j]].insert(column_of[i]);
        }
    rep.row = true;
    int heads = 0, head = -1;
    for (int c = 0; c < nc; ++c) {
        if (succ[c].size() > 1 || pred[c].size() > 1) rep.row = false;
        if (pred[c].empty()) {
            ++heads;
            head = c;
        }
    }
    if (nc > 0 && heads != 1) rep.row = false;
    if (rep.row && nc > 0) {
        std::vector<Column> ordered;
        std::vector<bool> seen(nc, false);
        for (int c = head; c >= 0 && !seen[c]; c = succ[c].empty() ? -1 : *succ[c].begin()) {
            seen[c] = true;
            ordered.push_back(columns[c]);
        }
        if (static_cast<int>(ordered.size()) != nc) rep.row = false;
        else columns = std::move(ordered);
    }
    if (rep.row) {
        bool gb_seen = false;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].type == StripType::GB && c + 1 < columns.size() && columns[c + 1].type != StripType::BG)
                ++rep.gb_not_followed_by_bg;
            if (gb_seen && columns[c].type == StripType::BB) ++rep.bb_right_of_gb;
            gb_seen |= columns[c].type == StripType::GB;
        }
    }
    for (const auto& k : detect_free_kinks(g)) {
        if (g.region.on_forbidden(k.middle)) ++rep.free_kinks_on_line;
        else ++rep.free_kinks_above;
    }
    rep.corollary = corollary_pattern(o.code());
    return an;
}

}  // namespace

bool StructureReport::ok() const {
    return issues.empty() && descending_mixed == 0 && ascending_bad_types == 0 && irregular_pairs == 0 && row &&
           gb_not_followed_by_bg == 0 && bb_right_of_gb == 0 && free_kinks_above == 0 && corollary;
}

StructureReport analyse_structure(const FoldedOverlay& o) { return analyse(o).report; }

StripDecomposition decompose_strips(const FoldedOverlay& o) {
    auto an = analyse(o);
    const auto& r = an.report;
    if (an.first_bad_face) throw NonStripFace("face " + std::to_string(r.issues.front().face) + ": " + r.issues.front().what, *an.first_bad_face);
    if (!r.ok()) {
        std::string why = r.free_kinks_above      ? "free kink strictly above the forbidden line"
                          : r.descending_mixed    ? "column mixes strip types"
                          : r.ascending_bad_types ? "ascending neighbours disagree on their shared side"
                          : !r.row                ? "columns do not form a single row"
                          : r.irregular_pairs     ? "irregular strip adjacency"
                                                  : "column order violates the colour rules";
        throw NonStripFace(why, Face{});
    }
    return std::move(an.decomposition);
}

LemmaChainResult check_lemma_chain(const FoldedOverlay& o) {
    LemmaChainResult res;
    const EssentialRegion r = EssentialRegion::of(o.inst);
    int lowest = std::numeric_limits<int>::max();
    for (Point p : r.lattice_points()) lowest = std::min(lowest, p.y);
    if (lowest == std::numeric_limits<int>::max()) return res;
    auto no_kink_above = [&](const OverlayGraph& g) {
        for (const auto& k : detect_free_kinks(g))
            if (!g.region.on_forbidden(k.middle)) return false;
        return true;
    };
    OverlayGraph upper = build_level_graph(o, r.x_max + 1);
    for (int z = r.x_max; z >= lowest; --z) {
        OverlayGraph g = build_level_graph(o, z);
        ++res.levels;
        if (no_kink_above(upper)) {
            ++res.premise_levels;
            bool bad = find_configurations(g).any();
            const auto faces = finite_faces(g);
            for (std::size_t i = 0; !bad && i < faces.size(); ++i) bad = !as_vertical_strip(g, faces[i], static_cast<int>(i));
            res.violations += bad;
        }
        upper = std::move(g);
    }
    return res;
}

}  // namespace hp
