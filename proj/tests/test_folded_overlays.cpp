#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codes_signs.hpp"
#include "folded_overlays.hpp"
#include "oracles.hpp"
#include "overlay_graph.hpp"

#include <map>
#include <set>

using namespace hp;

namespace {

std::vector<Instance> small_lhs_grid() {
    std::vector<Instance> out;
    for (Parity p : {Parity::even, Parity::odd})
        for (int k = 1; k <= 2; ++k)
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n) out.push_back(Instance::make(k, m, n, p, Side::lhs));
    return out;
}

std::set<std::pair<Point, Point>> endpoint_pairs(const FoldedOverlay& o) {
    std::set<std::pair<Point, Point>> out;
    for (const auto& p : o.paths) {
        const auto c = trace_connection(o, p.terminal());
        out.insert(std::minmax(c.start, c.end));
    }
    return out;
}

}  // namespace

TEST_CASE("fold keeps paths below the diagonal blue") {
    const Instance i = Instance::make(1, 1, 1, Parity::even, Side::lhs);
    for (const auto& s : survivors(i.K(), i.M(), i.N())) {
        bool above = false;
        for (const auto& p : s.paths)
            for (Point q : p.points()) above |= q.y > q.x;
        if (above) continue;
        for (const auto& p : fold(s, i).paths) CHECK(p.colour == Colour::blue);
    }
}

TEST_CASE("odd k=3, m=2, n=2 folds into the lower half-plane") {
    const Instance i = Instance::make(3, 2, 2, Parity::odd, Side::lhs);
    CHECK(i.K() == 5);
    CHECK(i.M() == -3);
    CHECK(i.N() == 6);
    int checked = 0;
    for (const auto& s : survivors(i.K(), i.M(), i.N())) {
        const FoldedOverlay o = fold(s, i);
        for (const auto& [e, c] : o.edges()) {
            CHECK(e.from.y <= e.from.x);
            CHECK(e.to.y <= e.to.x);
            if (c == Colour::blue) CHECK((avoids(e.from, i.K()) && avoids(e.to, i.K())));
        }
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("rhs reflection") {
    const Instance r = Instance::make(3, 2, 2, Parity::odd, Side::rhs);
    CHECK(r.K() == 5);
    CHECK(r.M() == 0);
    CHECK(r.N() == 2);
    for (const auto& s : survivors(r.K(), r.M(), r.N())) {
        const PathTuple t = reflect_rhs(s, r);
        CHECK(t.sign == s.sign);
        for (const auto& p : t.paths)
            for (Point q : p.points()) CHECK(q.y < q.x + r.K());
        const PathTuple back = reflect_tuple(t);
        CHECK(back.paths == s.paths);
    }
    const Instance empty = Instance::make(2, 1, 0, Parity::even, Side::rhs);
    const auto none = survivors(empty.K(), empty.M(), empty.N());
    REQUIRE(none.size() == 1);
    CHECK(reflect_rhs(none[0], empty).paths.empty());
    CHECK_THROWS_AS(reflect_rhs(none[0], Instance::make(2, 1, 0, Parity::even, Side::lhs)), std::invalid_argument);
}

TEST_CASE("overlay invariants, ψ and fold roundtrip on the grid") {
    for (const Instance& i : small_lhs_grid()) {
        INFO(to_string(i.parity) << " k=" << i.k << " m=" << i.m << " n=" << i.n);
        const auto region = EssentialRegion::of(i);
        Int fixed_sum = 0;
        std::set<std::vector<ColouredPath>> images;
        const auto surv = survivors(i.K(), i.M(), i.N());
        for (const auto& s : surv) {
            const FoldedOverlay o = fold(s, i);
            images.insert(o.paths);

            const PathTuple back = unfold(o);
            CHECK(back.paths == s.paths);
            CHECK(back.perm == s.perm);
            CHECK(overlay_sign(o) == s.sign);

            // monochromatic paths never share a point
            for (Colour c : {Colour::blue, Colour::green}) {
                std::map<Point, int> seen;
                for (std::size_t q = 0; q < o.paths.size(); ++q)
                    if (o.paths[q].colour == c)
                        for (Point p : o.paths[q].pts) {
                            auto [it, fresh] = seen.emplace(p, int(q));
                            CHECK((fresh || it->second == int(q)));
                        }
            }
            for (Point p : o.bicoloured_points()) CHECK(region.contains(p));

            for (const auto& p : o.paths) {
                const auto c = trace_connection(o, p.terminal());
                std::set<std::pair<Edge, Colour>> once;
                for (const auto& st : c.steps) CHECK(once.insert({st.edge, st.colour}).second);
                if (o.bicoloured_points().empty()) {
                    CHECK(c.end == p.pts.front());
                    CHECK(c.steps.size() + 1 == p.pts.size());
                }
            }

            const auto conn = find_involutive_connection(o);
            const FoldedOverlay q = psi(o);
            CHECK(psi(q) == o);
            if (!conn) {
                CHECK(q == o);
                fixed_sum += s.sign;
                CHECK(corollary_pattern(o.code()));
            } else {
                CHECK(conn->start_colour != conn->end_colour);
                CHECK_FALSE(q == o);
                CHECK(overlay_sign(q) == -s.sign);
                CHECK(endpoint_pairs(q) == endpoint_pairs(o));
            }
        }
        CHECK(images.size() == surv.size());
        CHECK(fixed_sum == oracle::hankel_cofactor(i.K(), i.M(), i.N()));
    }
}

TEST_CASE("folded survivors and their weighted count") {
    for (const Instance& i : small_lhs_grid()) {
        const auto fs = folded_survivors(i);
        Int total = 0;
        for (const auto& f : fs) {
            total += f.sign;
            CHECK(psi(f.overlay) == f.overlay);
        }
        CHECK(total == hankel_det(i.K(), i.M(), i.N()));
    }
    CHECK_THROWS_AS(folded_survivors(Instance::make(1, 1, 1, Parity::even, Side::rhs)), std::invalid_argument);
}

TEST_CASE("k=1 survivors are translations of the base configuration") {
    for (Parity p : {Parity::even, Parity::odd})
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const Instance i = Instance::make(1, m, n, p, Side::lhs);
                const auto fs = folded_survivors(i);
                const Instance r = i.other_side();
                CHECK(fs.size() == survivors(i.K(), i.M(), i.N()).size());
                CHECK(fs.size() == survivors(r.K(), r.M(), r.N()).size());
            }
}

TEST_CASE("fold rejects non-survivors") {
    const Instance i = Instance::make(1, 1, 2, Parity::even, Side::lhs);
    bool done = false;
    for_each_tuple(i.K(), i.M(), i.N(), {}, [&](const PathTuple& t) {
        if (done || !oracle::any_shared_point(t)) return;
        CHECK_THROWS_AS(fold(t, i), NotSurvivor);
        done = true;
    });
    CHECK(done);
}
