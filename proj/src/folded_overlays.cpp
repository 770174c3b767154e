#include "folded_overlays.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace hp {

const char* to_string(Colour c) { return c == Colour::blue ? "blue" : "green"; }

namespace {

Point mirror(Point p) { return {p.y, p.x}; }

std::vector<Point> vertical_run(Point from, Point to) {
    std::vector<Point> out;
    for (int y = from.y; y <= to.y; ++y) out.push_back({from.x, y});
    return out;
}

}  // namespace

void FoldedOverlay::normalize() {
    std::sort(paths.begin(), paths.end(), [](const ColouredPath& a, const ColouredPath& b) {
        return std::tie(a.colour, a.pts.front()) < std::tie(b.colour, b.pts.front());
    });
}

std::set<std::pair<Edge, Colour>> FoldedOverlay::edges() const {
    std::set<std::pair<Edge, Colour>> out;
    for (const auto& p : paths)
        for (std::size_t i = 1; i < p.pts.size(); ++i) out.insert({Edge{p.pts[i - 1], p.pts[i]}, p.colour});
    return out;
}

std::set<Point> FoldedOverlay::vertices(Colour c) const {
    std::set<Point> out;
    for (const auto& p : paths)
        if (p.colour == c) out.insert(p.pts.begin(), p.pts.end());
    return out;
}

std::set<Point> FoldedOverlay::bicoloured_points() const {
    const auto b = vertices(Colour::blue), g = vertices(Colour::green);
    std::set<Point> out;
    std::set_intersection(b.begin(), b.end(), g.begin(), g.end(), std::inserter(out, out.end()));
    return out;
}

std::map<int, Colour> FoldedOverlay::terminal_colours() const {
    std::map<int, Colour> out;
    for (const auto& p : paths) out[p.terminal()] = p.colour;
    return out;
}

std::vector<std::uint8_t> FoldedOverlay::code() const {
    std::vector<std::uint8_t> out;
    for (auto& [j, c] : terminal_colours()) out.push_back(c == Colour::green ? 1 : 0);
    return out;
}

FoldedOverlay fold(const PathTuple& s, const Instance& inst) {
    if (inst.side != Side::lhs) throw std::invalid_argument("fold expects an lhs instance");
    check_survivor(s, inst.K(), inst.M(), inst.N());
    const auto enf = enforced_points(inst.K(), inst.M(), inst.N());
    FoldedOverlay o{inst, {}};
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        const auto pts = s.paths[i].points();
        const auto at = std::find(pts.begin(), pts.end(), enf[i].point);
        if (at == pts.end()) throw NotSurvivor("path " + std::to_string(i) + " misses its enforced point");
        if (enf[i].two_faced) continue;
        std::vector<Point> rest(at, pts.end());
        const bool above = std::any_of(rest.begin(), rest.end(), [](Point p) { return p.y > p.x; });
        const bool below = std::any_of(rest.begin(), rest.end(), [](Point p) { return p.y < p.x; });
        if (above && below) throw NotSurvivor("path " + std::to_string(i) + " crosses the diagonal");
        if (above) {
            std::transform(rest.begin(), rest.end(), rest.begin(), mirror);
            o.paths.push_back({Colour::green, rest});
        } else {
            o.paths.push_back({Colour::blue, rest});
        }
    }
    o.normalize();
    return o;
}

PathTuple unfold(const FoldedOverlay& o) {
    const Instance& inst = o.inst;
    const int N = inst.N(), K = inst.K();
    const auto enf = enforced_points(K, inst.M(), N);
    PathTuple t;
    t.paths.resize(N);
    t.perm.assign(N, -1);
    std::map<Point, int> by_enforced;
    for (int i = 0; i < N; ++i) {
        if (enf[i].two_faced) {
            t.paths[i] = Path::from_points(vertical_run(initial_point(i, K, inst.M()), enf[i].point));
            t.perm[i] = enf[i].point.x;
        } else {
            by_enforced[enf[i].point] = i;
        }
    }
    for (const auto& p : o.paths) {
        std::vector<Point> pts = p.pts;
        if (p.colour == Colour::green) std::transform(pts.begin(), pts.end(), pts.begin(), mirror);
        const auto it = by_enforced.find(pts.front());
        if (it == by_enforced.end()) throw std::invalid_argument("overlay path starts at no enforced point: " + to_string(pts.front()));
        const int i = it->second;
        auto full = vertical_run(initial_point(i, K, inst.M()), pts.front());
        full.insert(full.end(), pts.begin() + 1, pts.end());
        t.paths[i] = Path::from_points(full);
        t.perm[i] = full.back().x;
    }
    if (std::find(t.perm.begin(), t.perm.end(), -1) != t.perm.end())
        throw std::invalid_argument("overlay does not provide a path for every initial point");
    t.sign = permutation_sign(t.perm);
    return t;
}

int overlay_sign(const FoldedOverlay& o) { return unfold(o).sign; }

PathTuple reflect_tuple(const PathTuple& s) {
    PathTuple r = s;
    for (auto& p : r.paths) {
        p.start = mirror(p.start);
        for (auto& st : p.steps) st = (st == Step::right) ? Step::up : Step::right;
    }
    return r;
}

PathTuple reflect_rhs(const PathTuple& s, const Instance& inst) {
    if (inst.side != Side::rhs) throw std::invalid_argument("reflect_rhs expects an rhs instance");
    check_survivor(s, inst.K(), inst.M(), inst.N());
    return reflect_tuple(s);
}

namespace {

struct Adjacency {
    std::map<std::pair<Colour, Point>, Point> out, in;

    explicit Adjacency(const FoldedOverlay& o) {
        for (const auto& p : o.paths)
            for (std::size_t i = 1; i < p.pts.size(); ++i) {
                out[{p.colour, p.pts[i - 1]}] = p.pts[i];
                in[{p.colour, p.pts[i]}] = p.pts[i - 1];
            }
    }
};

const ColouredPath* path_ending_at(const FoldedOverlay& o, Point p) {
    for (const auto& q : o.paths)
        if (q.pts.back() == p) return &q;
    return nullptr;
}

}  // namespace

BicolouredConnection trace_connection(const FoldedOverlay& o, int terminal) {
    const Point b = terminal_point(terminal);
    const ColouredPath* own = path_ending_at(o, b);
    if (!own) throw std::invalid_argument("no path ends at terminal " + std::to_string(terminal));
    const Adjacency adj(o);
    const auto bic = o.bicoloured_points();
    BicolouredConnection c{b, b, own->colour, own->colour, {}};
    Colour col = own->colour;
    bool reversed = true;
    Point p = b;
    std::set<std::pair<Edge, Colour>> seen;
    while (true) {
        const auto& table = reversed ? adj.in : adj.out;
        const auto it = table.find({col, p});
        if (it == table.end()) break;
        const Point q = it->second;
        const Edge e = reversed ? Edge{q, p} : Edge{p, q};
        if (!seen.insert({e, col}).second) throw TraversalCycle("bicoloured traversal revisits an edge at " + to_string(q));
        c.steps.push_back({e, col, reversed});
        p = q;
        if (bic.count(p)) {
            col = flip(col);
            reversed = !reversed;
        }
    }
    c.end = p;
    const ColouredPath* other = path_ending_at(o, p);
    c.end_colour = other ? other->colour : col;
    return c;
}

bool is_involutive(const FoldedOverlay& o, const BicolouredConnection& c) {
    if (c.end.x != c.end.y || c.end == c.start || !path_ending_at(o, c.end)) return false;
    const int K = o.inst.K();
    for (const auto& s : c.steps)
        if (s.colour == Colour::green && (!avoids(s.edge.from, K) || !avoids(s.edge.to, K))) return false;
    return true;
}

std::optional<BicolouredConnection> find_involutive_connection(const FoldedOverlay& o) {
    std::vector<int> terms;
    for (const auto& p : o.paths) terms.push_back(p.terminal());
    std::sort(terms.rbegin(), terms.rend());
    for (int j : terms) {
        auto c = trace_connection(o, j);
        if (is_involutive(o, c)) return c;
    }
    return std::nullopt;
}

FoldedOverlay swap_colours(const FoldedOverlay& o, const BicolouredConnection& c) {
    std::map<Colour, std::set<Edge>> edges;
    std::map<Colour, std::vector<Point>> starts;
    for (const auto& p : o.paths) {
        starts[p.colour].push_back(p.pts.front());
        for (std::size_t i = 1; i < p.pts.size(); ++i) edges[p.colour].insert(Edge{p.pts[i - 1], p.pts[i]});
    }
    for (const auto& s : c.steps) {
        if (!edges[s.colour].erase(s.edge)) throw std::logic_error("connection edge missing from overlay");
        edges[flip(s.colour)].insert(s.edge);
    }
    FoldedOverlay r{o.inst, {}};
    for (Colour col : {Colour::blue, Colour::green}) {
        std::map<Point, Point> next;
        for (const Edge& e : edges[col])
            if (!next.emplace(e.from, e.to).second)
                throw std::logic_error("colour swap produced a branching " + std::string(to_string(col)) + " path");
        for (Point s : starts[col]) {
            ColouredPath p{col, {s}};
            for (auto it = next.find(s); it != next.end(); it = next.find(p.pts.back())) p.pts.push_back(it->second);
            r.paths.push_back(std::move(p));
        }
    }
    r.normalize();
    return r;
}

FoldedOverlay psi(const FoldedOverlay& o) {
    auto c = find_involutive_connection(o);
    return c ? swap_colours(o, *c) : o;
}

std::vector<FoldedSurvivor> folded_survivors(const Instance& inst, const Budget& budget) {
    if (inst.side != Side::lhs) throw std::invalid_argument("folded survivors live on the lhs");
    std::vector<FoldedSurvivor> out;
    for (const auto& s : survivors(inst.K(), inst.M(), inst.N(), budget)) {
        auto o = fold(s, inst);
        if (!find_involutive_connection(o)) out.push_back({std::move(o), s.sign});
    }
    return out;
}

}  // namespace hp
