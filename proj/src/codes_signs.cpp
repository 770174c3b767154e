#include "codes_signs.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace hp {

std::vector<EnforcedPoint> enforced_points(int K, long M, int N) {
    std::vector<EnforcedPoint> out;
    out.reserve(N);
    long run = 0;
    for (int i = 0; i < N; ++i) {
        const Point a = initial_point(i, K, M);
        run = (i == 0) ? 1 : run + 2;
        if (a.x >= 0 && a.x <= N - 1 && a.y <= a.x && a.x <= a.y + run) {
            run = a.x - a.y;
            out.push_back({{a.x, a.x}, true});
        } else {
            out.push_back({{a.x, static_cast<int>(a.y + run)}, false});
        }
    }
    return out;
}

PointClassification classify_points(const Instance& inst) {
    PointClassification c;
    c.enforced = enforced_points(inst.K(), inst.M(), inst.N());
    for (std::size_t i = 0; i < c.enforced.size(); ++i) {
        const auto& e = c.enforced[i];
        if (e.two_faced) {
            c.two_faced.push_back(e.point);
            c.enforced_subpermutation.emplace_back(static_cast<int>(i), e.point.x);
        } else if (e.point.y < e.point.x) {
            ++c.below_diagonal;
        } else if (e.point.y > e.point.x) {
            ++c.above_diagonal;
        } else {
            ++c.on_diagonal;
        }
    }
    c.two_delta = 2 * inst.m + (inst.parity == Parity::odd ? 1 : 0);
    return c;
}

void check_survivor(const PathTuple& t, int K, long M, int N) {
    if (static_cast<int>(t.paths.size()) != N || static_cast<int>(t.perm.size()) != N)
        throw NotSurvivor("tuple has the wrong number of paths");
    std::vector<int> sorted = t.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < N; ++j)
        if (sorted[j] != j) throw NotSurvivor("terminal assignment is not a permutation");
    std::set<Point> seen;
    for (int i = 0; i < N; ++i) {
        const Path& p = t.paths[i];
        if (p.start != initial_point(i, K, M)) throw NotSurvivor("path " + std::to_string(i) + " does not start at its initial point");
        if (p.end() != terminal_point(t.perm[i])) throw NotSurvivor("path " + std::to_string(i) + " does not end at its terminal point");
        for (Point q : p.points()) {
            if (!avoids(q, K)) throw NotSurvivor("path " + std::to_string(i) + " touches the forbidden line at " + to_string(q));
            if (!seen.insert(q).second) throw NotSurvivor("paths intersect at " + to_string(q));
        }
    }
    if (t.sign != permutation_sign(t.perm)) throw NotSurvivor("sign does not match the permutation");
}

bool is_survivor(const PathTuple& t, int K, long M, int N) {
    try {
        check_survivor(t, K, M, N);
        return true;
    } catch (const NotSurvivor&) {
        return false;
    }
}

std::vector<int> Code01::zero_positions() const {
    std::vector<int> z;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == 0) z.push_back(static_cast<int>(i + 1));
    return z;
}

std::string Code01::str() const {
    std::string s;
    for (auto b : bits) s += b ? '1' : '0';
    return s;
}

Code01 Code01::parse(const std::string& s) {
    Code01 c;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("01-code may only contain 0 and 1: " + s);
        c.bits.push_back(ch == '1');
    }
    return c;
}

std::vector<std::uint8_t> full_code(const PathTuple& s, const Instance& inst) {
    check_survivor(s, inst.K(), inst.M(), inst.N());
    const auto enf = enforced_points(inst.K(), inst.M(), inst.N());
    std::vector<std::pair<int, std::uint8_t>> byterm;
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        if (enf[i].two_faced) continue;
        const Path& p = s.paths[i];
        const std::uint8_t bit = (!p.steps.empty() && p.steps.back() == Step::right) ? 1 : 0;
        byterm.emplace_back(s.perm[i], bit);
    }
    std::sort(byterm.begin(), byterm.end());
    std::vector<std::uint8_t> out;
    for (auto& [j, b] : byterm) out.push_back(b);
    return out;
}

Code01 code_of_survivor(const PathTuple& s, const Instance& inst) {
    auto full = full_code(s, inst);
    Code01 c;
    if (!full.empty()) c.bits.assign(full.begin() + 1, full.end());
    return c;
}

std::vector<std::uint8_t> complete_code(const Code01& c, const Instance& inst) {
    const auto cls = classify_points(inst);
    const int free = inst.N() - static_cast<int>(cls.two_faced.size());
    if (free == 0) {
        if (c.size() != 0) throw std::invalid_argument("instance has no code positions");
        return {};
    }
    if (static_cast<int>(c.size()) != free - 1)
        throw std::invalid_argument("code length " + std::to_string(c.size()) + " does not fit the instance (" +
                                    std::to_string(free - 1) + ")");
    const auto zeros = static_cast<int>(c.zero_positions().size());
    std::vector<std::uint8_t> full;
    full.push_back(zeros < cls.below_diagonal ? 0 : 1);
    full.insert(full.end(), c.bits.begin(), c.bits.end());
    return full;
}

std::vector<int> permutation_from_code(const std::vector<std::uint8_t>& full, const Instance& inst) {
    const int N = inst.N();
    const auto enf = enforced_points(inst.K(), inst.M(), N);
    std::vector<int> pi(N, -1);
    std::vector<int> free, terminals;
    std::vector<bool> fixed_terminal(N, false);
    for (int i = 0; i < N; ++i) {
        if (enf[i].two_faced) {
            pi[i] = enf[i].point.x;
            fixed_terminal[enf[i].point.x] = true;
        } else {
            free.push_back(i);
        }
    }
    for (int j = 0; j < N; ++j)
        if (!fixed_terminal[j]) terminals.push_back(j);
    if (full.size() != terminals.size())
        throw std::invalid_argument("code length does not match the free terminal points");
    std::vector<int> zeros, ones;
    for (std::size_t q = 0; q < full.size(); ++q) (full[q] ? ones : zeros).push_back(terminals[q]);
    const std::size_t z = zeros.size();
    for (std::size_t q = 0; q < z; ++q) pi[free[z - 1 - q]] = zeros[q];
    for (std::size_t q = 0; q < ones.size(); ++q) pi[free[z + q]] = ones[q];
    return pi;
}

long long inversions(const Code01& c) {
    long long inv = 0, i = 0;
    for (int z : c.zero_positions()) inv += z - (++i);
    return inv;
}

int sign_rhs(const Code01& c) {
    long long s = 0;
    for (int z : c.zero_positions()) s += z;
    return sign_power(s);
}

int sign_lhs(const Code01& c, const Instance& inst) {
    return permutation_sign(permutation_from_code(complete_code(c, inst), inst));
}

int swap_parity(const Code01& c, std::size_t i, std::size_t j) {
    if (c.at(i) == c.at(j)) throw std::invalid_argument("swap_parity needs two different bits");
    return sign_power(static_cast<long long>(i > j ? i - j : j - i));
}

long long lhs_exponent_short(const Code01& c, const Instance& inst) {
    return binom2(inst.m + inst.even()) + inversions(c);
}

long long lhs_exponent_long(const Code01& c, const Instance& inst) {
    return binom2(inst.m + inst.k - 1 + inst.even()) + inversions(c);
}

long long lhs_exponent_long_full(const Code01& c, const Instance& inst) {
    Code01 full{complete_code(c, inst)};
    return binom2(inst.m + inst.k - 1 + inst.even()) + inversions(full);
}

}  // namespace hp
