#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codes_signs.hpp"
#include "oracles.hpp"

#include <map>
#include <random>

using namespace hp;

namespace {

std::vector<Instance> grid_instances(int k_max, int m_max, int n_max) {
    std::vector<Instance> out;
    for (Parity p : {Parity::even, Parity::odd})
        for (Side s : {Side::lhs, Side::rhs})
            for (int k = 1; k <= k_max; ++k)
                for (int m = 1; m <= m_max; ++m)
                    for (int n = 0; n <= n_max; ++n) out.push_back(Instance::make(k, m, n, p, s));
    return out;
}

std::vector<PathTuple> survivors_of(const Instance& i) {
    Budget b;
    b.tuples = 200000;
    return survivors(i.K(), i.M(), i.N(), b);
}

}  // namespace

TEST_CASE("two-faced points") {
    const auto even = classify_points(Instance::make(2, 4, 1, Parity::even, Side::lhs));
    CHECK(even.two_faced.size() == 5);
    for (Point p : even.two_faced) CHECK(p.x == p.y);
    for (int m = 1; m <= 5; ++m) {
        CHECK(classify_points(Instance::make(2, m, 1, Parity::odd, Side::rhs)).two_faced.empty());
        CHECK(classify_points(Instance::make(3, m, 2, Parity::odd, Side::lhs)).two_faced.size() == std::size_t(m));
    }
}

TEST_CASE("classification invariants on the grid") {
    for (const Instance& i : grid_instances(4, 4, 4)) {
        INFO(to_string(i.parity) << " " << to_string(i.side) << " k=" << i.k << " m=" << i.m << " n=" << i.n);
        const auto c = classify_points(i);
        CHECK(c.below_diagonal == std::min(i.k - 1, i.N()));
        CHECK(c.two_delta == 2 * i.m + (i.parity == Parity::odd));
        if (i.side == Side::lhs) {
            CHECK(c.two_faced.size() == std::size_t(i.m + i.even()));
            CHECK(c.above_diagonal == i.n);
            const long twice = 2 * (-i.M() + 1) - i.K();  // floor((2(1-M) - K) / 2) + 1, twice > 0 here
            const long formula = twice / 2 + 1;
            CHECK(static_cast<long>(c.two_faced.size()) == formula);
        } else {
            CHECK(c.two_faced.empty());
        }
    }
}

TEST_CASE("enforced subpermutation") {
    const auto c = classify_points(Instance::make(2, 1, 1, Parity::even, Side::lhs));  // K=4, M=-2, N=4
    CHECK(c.enforced_subpermutation == std::vector<std::pair<int, int>>{{1, 1}, {2, 0}});

    for (const Instance& i : grid_instances(3, 3, 2)) {
        if (i.side != Side::lhs) continue;
        const auto cls = classify_points(i);
        const int t = i.m + i.even();
        REQUIRE(cls.enforced_subpermutation.size() == std::size_t(t));
        for (int q = 0; q < t; ++q) {
            CHECK(cls.enforced_subpermutation[q].first == i.k - 1 + q);
            CHECK(cls.enforced_subpermutation[q].second == t - 1 - q);
        }
        for (const auto& s : survivors_of(i))
            for (auto [from, to] : cls.enforced_subpermutation) CHECK(s.perm[from] == to);
    }
}

TEST_CASE("inversions against the pair count") {
    CHECK(inversions(Code01::parse("10011001")) == 8);
    CHECK(oracle::bit_inversions(Code01::parse("10011001").bits) == 8);
    CHECK(inversions(Code01::parse("1111")) == 0);
    CHECK(inversions(Code01::parse("000")) == 0);
    CHECK(inversions(Code01::parse("10")) == 1);

    std::mt19937 rng(20240607);
    for (int trial = 0; trial < 10000; ++trial) {
        Code01 c;
        const int len = std::uniform_int_distribution<int>(0, 20)(rng);
        for (int i = 0; i < len; ++i) c.bits.push_back(static_cast<std::uint8_t>(rng() & 1));
        REQUIRE(inversions(c) == oracle::bit_inversions(c.bits));
    }
    CHECK_THROWS_AS(Code01::parse("012"), std::invalid_argument);
}

TEST_CASE("rhs sign from zero positions") {
    const auto c = Code01::parse("10011001");
    long sum = 0;
    for (int z : c.zero_positions()) sum += z;
    CHECK(sum == 18);
    CHECK(sign_rhs(c) == 1);
    CHECK(sign_rhs(Code01::parse("111")) == 1);
    for (int l = 0; l <= 6; ++l) {
        const Code01 base = Code01::parse(std::string(l, '0') + "111");
        CHECK(sign_rhs(base) == sign_power(binom2(l + 1)));
    }
}

TEST_CASE("swap parity") {
    auto check = [](const std::string& s, std::size_t i, std::size_t j, int want) {
        const Code01 c = Code01::parse(s);
        Code01 d = c;
        std::swap(d.bits[i - 1], d.bits[j - 1]);
        CHECK(swap_parity(c, i, j) == want);
        CHECK(sign_rhs(d) * sign_rhs(c) == want);
    };
    check("10", 1, 2, -1);
    check("100", 1, 3, 1);
    check("1010", 1, 4, -1);
    CHECK_THROWS_AS(swap_parity(Code01::parse("11"), 1, 2), std::invalid_argument);
}

TEST_CASE("single all-empty survivor for k=1, n=0") {
    const Instance i = Instance::make(1, 3, 0, Parity::odd, Side::lhs);
    const auto s = survivors_of(i);
    REQUIRE(s.size() == 1);
    CHECK(s[0].sign == -1);
    for (const auto& p : s[0].paths) CHECK(p.steps.empty());
    CHECK(code_of_survivor(s[0], i).size() == 0);
    CHECK(sign_lhs(code_of_survivor(s[0], i), i) == -1);
}

TEST_CASE("base lhs code") {
    for (const Instance& i : grid_instances(3, 3, 3)) {
        if (i.side != Side::lhs) continue;
        const int free = i.N() - static_cast<int>(classify_points(i).two_faced.size());
        if (free < 1) continue;
        // k-1 zeros then n ones, first bit omitted.
        std::string full = std::string(i.k - 1, '0') + std::string(i.n, '1');
        if (static_cast<int>(full.size()) != free) continue;
        const Code01 c = Code01::parse(full.substr(1));
        CHECK(sign_lhs(c, i) == sign_power(binom2(i.m + i.even() + i.k - 1)));
    }
}

TEST_CASE("signs and injectivity on every survivor of the grid") {
    int instances = 0;
    for (const Instance& i : grid_instances(3, 3, 3)) {
        std::vector<PathTuple> surv;
        try {
            surv = survivors_of(i);
        } catch (const BudgetExceeded&) {
            continue;
        }
        ++instances;
        std::map<std::string, std::vector<int>> seen;
        for (const auto& s : surv) {
            INFO(to_string(i.parity) << " " << to_string(i.side) << " k=" << i.k << " m=" << i.m << " n=" << i.n);
            const Code01 c = code_of_survivor(s, i);
            const int truth = oracle::sign_by_cycles(s.perm);
            CHECK(s.sign == truth);
            if (i.side == Side::rhs) CHECK(sign_rhs(c) == truth);
            else CHECK(sign_lhs(c, i) == truth);
            CHECK(permutation_from_code(full_code(s, i), i) == s.perm);
            auto [it, fresh] = seen.emplace(c.str(), s.perm);
            if (!fresh) CHECK(it->second == s.perm);
        }
    }
    CHECK(instances >= 100);
}

TEST_CASE("non-survivors are rejected") {
    const Instance i = Instance::make(1, 1, 2, Parity::even, Side::lhs);
    bool rejected = false;
    for_each_tuple(i.K(), i.M(), i.N(), {}, [&](const PathTuple& t) {
        if (!oracle::any_shared_point(t) || rejected) return;
        CHECK_THROWS_AS(code_of_survivor(t, i), NotSurvivor);
        CHECK_FALSE(is_survivor(t, i.K(), i.M(), i.N()));
        rejected = true;
    });
    CHECK(rejected);
}
