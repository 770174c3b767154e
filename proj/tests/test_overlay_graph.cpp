#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overlay_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

using namespace hp;

namespace {

struct Sample {
    FoldedOverlay overlay;
    bool fixed;
};

std::vector<Sample> overlays_of_grid() {
    std::vector<Sample> out;
    for (Parity p : {Parity::even, Parity::odd})
        for (int k = 1; k <= 2; ++k)
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n) {
                    const Instance i = Instance::make(k, m, n, p, Side::lhs);
                    for (const auto& s : survivors(i.K(), i.M(), i.N())) {
                        FoldedOverlay o = fold(s, i);
                        const bool fixed = !find_involutive_connection(o);
                        out.push_back({std::move(o), fixed});
                    }
                }
    return out;
}

const std::vector<Sample>& samples() {
    static const std::vector<Sample> s = overlays_of_grid();
    return s;
}

// Vertices, edges and connected components, counted independently of the
// face walk; Euler's formula then predicts the number of bounded faces.
long long euler_bounded_faces(const OverlayGraph& g) {
    std::map<Point, Point> parent;
    std::function<Point(Point)> find = [&](Point p) {
        auto it = parent.find(p);
        if (it == parent.end()) return parent[p] = p;
        if (it->second == p) return p;
        return it->second = find(it->second);
    };
    for (const auto& e : g.edges) {
        const Point a = find(e.a), b = find(e.b);
        if (!(a == b)) parent[a] = b;
    }
    long long components = 0;
    for (auto& [p, q] : parent) components += find(p) == p;
    return static_cast<long long>(g.edges.size()) - static_cast<long long>(parent.size()) + components;
}

}  // namespace

TEST_CASE("essential region") {
    const auto r = EssentialRegion::of(Instance::make(2, 1, 1, Parity::even, Side::lhs));  // K=4, M=-2, N=4
    CHECK(r.K == 4);
    CHECK(r.blue_line == 2);
    CHECK(r.x_max == 3);
    CHECK(r.contains({1, 1}));
    CHECK(r.contains({3, -1}));
    CHECK_FALSE(r.contains({3, -2}));
    CHECK_FALSE(r.contains({0, 1}));
    CHECK_FALSE(r.contains({4, 4}));
    CHECK(r.on_forbidden({5, 1}));
    CHECK(r.on_blue_line({2, 0}));
    CHECK_THROWS_AS(EssentialRegion::of(Instance::make(2, 1, 1, Parity::even, Side::rhs)), std::invalid_argument);
}

TEST_CASE("closed graphs: boundary loose ends, slanted colours, Euler count") {
    int slanted = 0;
    for (const auto& s : samples()) {
        const OverlayGraph g = build_graph(s.overlay);
        // A loose end survives closure only on a boundary line and only when
        // no other loose end sits next to it on that line.
        for (const auto& [p, ids] : g.incident) {
            if (g.degree(p) != 1) continue;
            const bool diagonal = p.x == p.y, blue = g.region.on_blue_line(p), forbidden = g.region.on_forbidden(p);
            CHECK((diagonal || blue || forbidden));
            auto loose = [&](Point q) { return g.incident.count(q) && g.degree(q) == 1; };
            if (diagonal) CHECK_FALSE((loose({p.x + 1, p.y + 1}) || loose({p.x - 1, p.y - 1})));
            if (blue) CHECK_FALSE((loose({p.x + 1, p.y - 1}) || loose({p.x - 1, p.y + 1})));
            if (forbidden) CHECK_FALSE((loose({p.x + 1, p.y + 1}) || loose({p.x - 1, p.y - 1})));
        }
        for (const auto& e : g.edges) {
            CHECK(g.region.contains(e.a));
            CHECK(g.region.contains(e.b));
            if (e.kind != EdgeKind::slanted) continue;
            ++slanted;
            if (g.region.on_blue_line(e.a) && g.region.on_blue_line(e.b)) CHECK(e.colours == mask_green);
            else if (g.region.on_forbidden(e.a) && g.region.on_forbidden(e.b)) CHECK(e.colours == mask_blue);
            else CHECK((e.a.x == e.a.y && e.b.x == e.b.y));
        }
        const auto faces = finite_faces(g);
        CHECK(static_cast<long long>(faces.size()) == euler_bounded_faces(g));
        for (const auto& f : faces) CHECK(f.twice_area > 0);
    }
    CHECK(slanted > 0);
}

TEST_CASE("characterisation: structure holds exactly on folded survivors") {
    int fixed = 0, free_kink_witnesses = 0;
    for (const auto& s : samples()) {
        const StructureReport rep = analyse_structure(s.overlay);
        CHECK(rep.ok() == s.fixed);
        if (!s.fixed) {
            free_kink_witnesses += rep.free_kinks_above > 0;
            continue;
        }
        ++fixed;
        CHECK(rep.issues.empty());
        CHECK(rep.strips == rep.faces);
        CHECK(rep.free_kinks_above == 0);
        CHECK(rep.descending_mixed == 0);
        CHECK(rep.ascending_bad_types == 0);
        CHECK(rep.gb_not_followed_by_bg == 0);
        CHECK(rep.bb_right_of_gb == 0);
        CHECK(rep.row);
        CHECK(rep.corollary);
        const OverlayGraph g = build_graph(s.overlay);
        for (const auto& k : detect_free_kinks(g)) CHECK(g.region.on_forbidden(k.middle));
    }
    CHECK(fixed > 0);
    CHECK(free_kink_witnesses > 0);
}

TEST_CASE("strip decomposition of folded survivors") {
    for (const auto& s : samples()) {
        if (!s.fixed) continue;
        const StripDecomposition d = decompose_strips(s.overlay);
        std::vector<int> used(d.strips.size(), 0);
        for (std::size_t c = 0; c < d.columns.size(); ++c) {
            const Column& col = d.columns[c];
            REQUIRE_FALSE(col.strips.empty());
            for (int id : col.strips) {
                ++used[id];
                CHECK(d.strips[id].type == col.type);
            }
            for (std::size_t q = 1; q < col.strips.size(); ++q) {
                const auto& a = d.strips[col.strips[q - 1]];
                const auto& b = d.strips[col.strips[q]];
                CHECK(b.left_x == a.left_x + 1);
                CHECK(b.top < a.top);
            }
            if (col.type == StripType::GB) {
                REQUIRE(c + 1 < d.columns.size());
                CHECK(d.columns[c + 1].type == StripType::BG);
            }
        }
        CHECK(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
        if (s.overlay.bicoloured_points().empty())
            for (const auto& col : d.columns) CHECK(col.type != StripType::GB);
    }
}

TEST_CASE("non-survivors are refused by the decomposition") {
    int refused = 0;
    for (const auto& s : samples()) {
        if (s.fixed) continue;
        try {
            decompose_strips(s.overlay);
        } catch (const NonStripFace&) {
            ++refused;
        }
    }
    CHECK(refused > 0);
}

TEST_CASE("lemma chain on every folded survivor") {
    for (const auto& s : samples()) {
        if (!s.fixed) continue;
        const auto r = check_lemma_chain(s.overlay);
        CHECK((r.levels > 0 || build_graph(s.overlay).edges.empty()));
        CHECK(r.violations == 0);
    }
}

TEST_CASE("corollary colour pattern") {
    using B = std::vector<std::uint8_t>;
    CHECK(corollary_pattern(B{}));
    CHECK(corollary_pattern(B{0, 0, 0, 1, 1}));
    CHECK(corollary_pattern(B{0, 1, 1, 0, 1, 0, 1}));
    CHECK(corollary_pattern(B{0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1}));
    CHECK_FALSE(corollary_pattern(B{1, 0, 0}));
    CHECK_FALSE(corollary_pattern(B{0, 1, 0, 1, 0, 0, 1}));
}

TEST_CASE("strip types print") {
    CHECK(std::string(to_string(StripType::BB)) == "BB");
    CHECK(std::string(to_string(StripType::GB)) == "GB");
}
