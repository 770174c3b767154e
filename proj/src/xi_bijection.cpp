#include "xi_bijection.hpp"

#include <algorithm>
#include <map>

namespace hp {

XiFrame XiFrame::of(const Instance& any_side) {
    XiFrame f;
    f.lhs = any_side.side == Side::lhs ? any_side : any_side.other_side();
    f.rhs = f.lhs.other_side();
    const auto enf = enforced_points(f.rhs.K(), f.rhs.M(), f.rhs.N());
    if (enf.empty()) return f;
    Point lowest{enf.front().point.y, enf.front().point.x};
    for (const auto& e : enf) lowest = std::min(lowest, Point{e.point.y, e.point.x});
    f.dx = 1 - lowest.x;
    f.dy = -1 - lowest.y;
    for (int j = 0; j < f.rhs.N(); ++j) f.white.insert(f.to_lhs(terminal_point(j)));
    return f;
}

std::vector<std::vector<Point>> xi_red_paths(const FoldedOverlay& o) {
    const XiFrame frame = XiFrame::of(o.inst);
    std::map<Point, std::set<Point>> next;
    for (auto& [e, c] : o.edges()) next[e.from].insert(e.to);
    std::vector<std::vector<Point>> out;
    for (const auto& p : o.paths) {
        if (p.colour != Colour::green) continue;
        std::vector<Point> walk{p.pts.front()};
        while (!frame.white.count(walk.back())) {
            const auto it = next.find(walk.back());
            if (it == next.end()) throw std::logic_error("red path stops before the forbidden line at " + to_string(walk.back()));
            const Point q = walk.back();
            walk.push_back(it->second.count({q.x + 1, q.y}) ? Point{q.x + 1, q.y} : Point{q.x, q.y + 1});
        }
        out.push_back(std::move(walk));
    }
    return out;
}

PathTuple xi_forward(const FoldedOverlay& o) {
    decompose_strips(o);
    const XiFrame frame = XiFrame::of(o.inst);
    const Instance& rhs = frame.rhs;
    const int N = rhs.N();
    const auto enf = enforced_points(rhs.K(), rhs.M(), N);
    std::map<Point, int> by_enforced;
    for (int i = 0; i < N; ++i) by_enforced[enf[i].point] = i;

    PathTuple t;
    t.paths.resize(N);
    t.perm.assign(N, -1);
    for (const auto& red : xi_red_paths(o)) {
        std::vector<Point> pts;
        for (Point p : red) pts.push_back(frame.to_rhs(p));
        const auto it = by_enforced.find(pts.front());
        if (it == by_enforced.end()) throw std::logic_error("red path starts off the rhs enforced points");
        const int i = it->second;
        std::vector<Point> full;
        const Point a = initial_point(i, rhs.K(), rhs.M());
        for (int y = a.y; y < pts.front().y; ++y) full.push_back({a.x, y});
        full.insert(full.end(), pts.begin(), pts.end());
        t.paths[i] = Path::from_points(full);
        t.perm[i] = full.back().x;
    }
    if (std::count(t.perm.begin(), t.perm.end(), -1))
        throw std::logic_error("ξ image does not cover every rhs initial point");
    t.sign = permutation_sign(t.perm);
    check_survivor(t, rhs.K(), rhs.M(), N);
    return t;
}

namespace {

struct Split {
    struct Start {
        Colour colour;
        Point point;
    };
    std::vector<Start> starts;
    std::map<int, Colour> terminal_colour;
    std::map<Point, std::vector<Point>> next;
    std::set<Edge> all;

    std::vector<std::vector<Point>> chosen;
    std::vector<std::vector<Point>> found;
    int solutions = 0;
    std::map<Colour, std::set<Point>> used;
    std::set<int> ends;

    void paths_from(std::vector<Point>& p, Colour c, std::vector<std::vector<Point>>& out) {
        const Point q = p.back();
        if (q.x == q.y) {
            const auto it = terminal_colour.find(q.x);
            if (it != terminal_colour.end() && it->second == c && !ends.count(q.x)) out.push_back(p);
        }
        const auto it = next.find(q);
        if (it == next.end()) return;
        for (Point v : it->second) {
            if (used[c].count(v)) continue;
            p.push_back(v);
            paths_from(p, c, out);
            p.pop_back();
        }
    }

    void search(std::size_t i) {
        if (solutions > 1) return;
        if (i == starts.size()) {
            std::set<Edge> covered;
            for (const auto& p : chosen)
                for (std::size_t s = 1; s < p.size(); ++s) covered.insert(Edge{p[s - 1], p[s]});
            if (covered == all) {
                if (++solutions == 1) found = chosen;
            }
            return;
        }
        const auto [c, s] = starts[i];
        if (used[c].count(s)) return;
        std::vector<std::vector<Point>> options;
        std::vector<Point> p{s};
        paths_from(p, c, options);
        for (const auto& path : options) {
            used[c].insert(path.begin(), path.end());
            ends.insert(path.back().x);
            chosen.push_back(path);
            search(i + 1);
            chosen.pop_back();
            ends.erase(path.back().x);
            for (Point q : path) used[c].erase(q);
        }
    }
};

}  // namespace

FoldedOverlay xi_inverse(const PathTuple& s, const Instance& rhs_inst) {
    if (rhs_inst.side != Side::rhs) throw std::invalid_argument("xi_inverse expects an rhs instance");
    check_survivor(s, rhs_inst.K(), rhs_inst.M(), rhs_inst.N());
    const XiFrame frame = XiFrame::of(rhs_inst);
    const Instance& lhs = frame.lhs;
    const auto rhs_enf = enforced_points(rhs_inst.K(), rhs_inst.M(), rhs_inst.N());

    Split split;
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        const auto pts = s.paths[i].points();
        const auto at = std::find(pts.begin(), pts.end(), rhs_enf[i].point);
        for (auto it = at; it != pts.end() && std::next(it) != pts.end(); ++it)
            split.all.insert(Edge{frame.to_lhs(*it), frame.to_lhs(*std::next(it))});
    }
    const EssentialRegion region = EssentialRegion::of(lhs);
    const auto cls = classify_points(lhs);
    const int first_free = static_cast<int>(cls.two_faced.size());
    for (int x = first_free; x <= region.x_max; ++x)
        for (int y = region.lower(x); y < x; ++y) split.all.insert(Edge{{x, y}, {x, y + 1}});
    for (const Edge& e : split.all) split.next[e.from].push_back(e.to);

    for (const auto& e : cls.enforced) {
        if (e.two_faced) continue;
        if (e.point.y <= e.point.x) split.starts.push_back({Colour::blue, e.point});
        else split.starts.push_back({Colour::green, {e.point.y, e.point.x}});
    }
    const auto colours = lhs_code_from_rhs(code_of_survivor(s, rhs_inst), lhs);
    std::vector<int> free_terminals;
    std::set<int> fixed;
    for (Point p : cls.two_faced) fixed.insert(p.x);
    for (int j = 0; j < lhs.N(); ++j)
        if (!fixed.count(j)) free_terminals.push_back(j);
    if (colours.size() != free_terminals.size()) throw std::logic_error("lhs code does not fit the free terminals");
    for (std::size_t q = 0; q < colours.size(); ++q)
        split.terminal_colour[free_terminals[q]] = colours[q] ? Colour::green : Colour::blue;

    split.search(0);
    if (split.solutions == 0) throw std::logic_error("no folded overlay maps to this rhs survivor");
    if (split.solutions > 1) throw AmbiguousInverse("several folded overlays map to this rhs survivor");
    FoldedOverlay o{lhs, {}};
    for (std::size_t i = 0; i < split.starts.size(); ++i) o.paths.push_back({split.starts[i].colour, split.found[i]});
    o.normalize();
    return o;
}

std::vector<int> ones_before_zeros(const std::vector<std::uint8_t>& code) {
    std::vector<int> z;
    int ones = 0;
    for (auto b : code) {
        if (b) ++ones;
        else z.push_back(ones);
    }
    return z;
}

Code01 code_transform(const std::vector<std::uint8_t>& lhs_code, std::size_t length) {
    Code01 c;
    c.bits.assign(length, 1);
    for (int z : ones_before_zeros(lhs_code)) {
        if (z == 0) continue;
        if (static_cast<std::size_t>(z) > length) throw std::invalid_argument("code does not fit the requested length");
        c.bits[z - 1] = 0;
    }
    return c;
}

namespace {

std::size_t rhs_code_length(const Instance& rhs) {
    const auto cls = classify_points(rhs);
    const int free = rhs.N() - static_cast<int>(cls.two_faced.size());
    return free > 0 ? free - 1 : 0;
}

}  // namespace

Code01 code_transform(const std::vector<std::uint8_t>& full_lhs_code, const Instance& lhs) {
    if (!corollary_pattern(full_lhs_code)) throw std::invalid_argument("two consecutive blue terminals after a green one");
    return code_transform(full_lhs_code, rhs_code_length(lhs.side == Side::lhs ? lhs.other_side() : lhs));
}

Code01 complement(const Code01& c) {
    Code01 r = c;
    for (auto& b : r.bits) b = !b;
    return r;
}

std::vector<std::uint8_t> lhs_code_from_rhs(const Code01& reflected, const Instance& lhs) {
    const auto cls = classify_points(lhs);
    const int free = lhs.N() - static_cast<int>(cls.two_faced.size());
    const int zeros = cls.below_diagonal;
    const int ones = free - zeros;
    std::set<int> retained;
    for (int z : reflected.zero_positions()) retained.insert(z);
    if (static_cast<int>(retained.size()) > zeros) throw std::invalid_argument("rhs code has too many zeros for this instance");
    std::vector<std::uint8_t> out(zeros - retained.size(), 0);
    for (int o = 1; o <= ones; ++o) {
        out.push_back(1);
        if (retained.count(o)) out.push_back(0);
    }
    if (static_cast<int>(out.size()) != free) throw std::invalid_argument("rhs code does not fit the lhs instance");
    return out;
}

int xi_sign_factor(const Instance& inst) { return sign_power(binom2(inst.m + inst.k - 1 + inst.even())); }

}  // namespace hp
