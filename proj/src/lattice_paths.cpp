#include "lattice_paths.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

namespace hp {

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

Point Path::end() const {
    Point p = start;
    for (Step s : steps) (s == Step::right ? p.x : p.y) += 1;
    return p;
}

std::vector<Point> Path::points() const {
    std::vector<Point> out;
    out.reserve(steps.size() + 1);
    Point p = start;
    out.push_back(p);
    for (Step s : steps) {
        (s == Step::right ? p.x : p.y) += 1;
        out.push_back(p);
    }
    return out;
}

Path Path::from_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("path needs at least one point");
    Path p{pts.front(), {}};
    p.steps.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Point d{pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y};
        if (d == Point{1, 0})
            p.steps.push_back(Step::right);
        else if (d == Point{0, 1})
            p.steps.push_back(Step::up);
        else
            throw std::invalid_argument("non-unit step " + to_string(pts[i - 1]) + "->" + to_string(pts[i]));
    }
    return p;
}

Point initial_point(int i, int K, long M) {
    const int x = static_cast<int>(-i - M);
    return {x, x - K + 1};
}

Point terminal_point(int j) { return {j, j}; }

Int count_avoiding_paths(Point a, Point b, int K) {
    if (K <= 0) throw std::invalid_argument("K must be >= 1");
    const long dx = b.x - a.x, dy = b.y - a.y;
    if (dx < 0 || dy < 0 || !avoids(a, K) || !avoids(b, K)) return 0;
    // Paths touching the line are in bijection with paths from the mirror
    // image of a.
    const Point r{a.y + K, a.x - K};
    const long rx = b.x - r.x, ry = b.y - r.y;
    Int touching = (rx >= 0 && ry >= 0) ? binomial(rx + ry, rx) : Int(0);
    return binomial(dx + dy, dx) - touching;
}

namespace {

void extend(Point cur, Point b, int K, std::vector<Step>& steps, Point start, std::vector<Path>& out) {
    if (cur == b) {
        out.push_back(Path{start, steps});
        return;
    }
    if (cur.x < b.x) {
        Point n{cur.x + 1, cur.y};
        if (avoids(n, K)) {
            steps.push_back(Step::right);
            extend(n, b, K, steps, start, out);
            steps.pop_back();
        }
    }
    if (cur.y < b.y) {
        steps.push_back(Step::up);
        extend({cur.x, cur.y + 1}, b, K, steps, start, out);
        steps.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_avoiding_paths(Point a, Point b, int K, const Budget& budget) {
    std::vector<Path> out;
    const long dx = b.x - a.x, dy = b.y - a.y;
    if (dx < 0 || dy < 0 || !avoids(a, K) || !avoids(b, K)) return out;
    if (binomial(dx + dy, dx) > Int(std::to_string(budget.paths_per_pair)))
        throw BudgetExceeded("instance too large for enumeration: " + to_string(a) + "->" + to_string(b));
    std::vector<Step> steps;
    extend(a, b, K, steps, a, out);
    return out;
}

long long inversion_count(const std::vector<int>& perm) {
    long long inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

int permutation_sign(const std::vector<int>& perm) { return sign_power(inversion_count(perm)); }

Int tuple_count(int K, long M, int N) {
    if (N == 0) return 1;
    std::vector<Int> c(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) c[i * N + j] = count_avoiding_paths(initial_point(i, K, M), terminal_point(j), K);
    // dp over the set of terminals already used by paths 0..popcount-1
    std::vector<Int> dp(std::size_t{1} << N);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0) continue;
        const int i = std::popcount(mask);
        if (i == N) continue;
        for (int j = 0; j < N; ++j)
            if (!(mask & (std::size_t{1} << j))) dp[mask | (std::size_t{1} << j)] += dp[mask] * c[i * N + j];
    }
    return dp.back();
}

void for_each_tuple(int K, long M, int N, const Budget& budget,
                    const std::function<void(const PathTuple&)>& visit) {
    if (tuple_count(K, M, N) > Int(std::to_string(budget.tuples)))
        throw BudgetExceeded("instance too large for enumeration: K=" + std::to_string(K) +
                             " M=" + std::to_string(M) + " N=" + std::to_string(N));
    std::vector<std::vector<Path>> pair(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            pair[i * N + j] = enumerate_avoiding_paths(initial_point(i, K, M), terminal_point(j), K, budget);

    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    PathTuple t;
    t.paths.resize(N);
    do {
        bool empty = false;
        for (int i = 0; i < N; ++i) empty = empty || pair[i * N + perm[i]].empty();
        if (empty) continue;
        t.perm = perm;
        t.sign = permutation_sign(perm);
        std::vector<std::size_t> idx(N, 0);
        while (true) {
            for (int i = 0; i < N; ++i) t.paths[i] = pair[i * N + perm[i]][idx[i]];
            visit(t);
            int i = N - 1;
            while (i >= 0 && ++idx[i] == pair[i * N + perm[i]].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::optional<Intersection> max_intersection(const PathTuple& t) {
    std::vector<std::pair<Point, int>> all;
    for (std::size_t i = 0; i < t.paths.size(); ++i)
        for (Point p : t.paths[i].points()) all.emplace_back(p, static_cast<int>(i));
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t s = 0; s < all.size();) {
        std::size_t e = s;
        while (e < all.size() && all[e].first == all[s].first) ++e;
        if (e - s >= 2) {
            std::vector<int> through;
            for (std::size_t q = s; q < e; ++q) through.push_back(all[q].second);
            // the two paths with the largest terminal indices
            std::sort(through.begin(), through.end(),
                      [&](int a, int b) { return t.perm[a] > t.perm[b]; });
            return Intersection{all[s].first, std::min(through[0], through[1]), std::max(through[0], through[1])};
        }
        s = e;
    }
    return std::nullopt;
}

PathTuple lgv_involution(const PathTuple& t) {
    auto hit = max_intersection(t);
    if (!hit) return t;
    PathTuple out = t;
    Path& a = out.paths[hit->first];
    Path& b = out.paths[hit->second];
    const auto cut = [&](const Path& p) {
        return static_cast<std::size_t>(hit->point.x - p.start.x + hit->point.y - p.start.y);
    };
    const std::size_t ca = cut(a), cb = cut(b);
    std::vector<Step> ta(a.steps.begin() + ca, a.steps.end());
    std::vector<Step> tb(b.steps.begin() + cb, b.steps.end());
    a.steps.resize(ca);
    a.steps.insert(a.steps.end(), tb.begin(), tb.end());
    b.steps.resize(cb);
    b.steps.insert(b.steps.end(), ta.begin(), ta.end());
    std::swap(out.perm[hit->first], out.perm[hit->second]);
    out.sign = -t.sign;
    return out;
}

namespace {

struct SurvivorSearch {
    int K;
    long M;
    int N;
    std::uint64_t cap;
    std::set<Point> used;
    std::vector<bool> taken;
    PathTuple cur;
    std::vector<PathTuple> out;

    void paths_to(int i, Point p, Point b, std::vector<Point>& trail) {
        if (p == b) {
            int j = b.x;
            taken[j] = true;
            cur.paths[i] = Path::from_points(trail);
            cur.perm[i] = j;
            for (Point q : trail) used.insert(q);
            place(i + 1);
            for (Point q : trail) used.erase(q);
            taken[j] = false;
            return;
        }
        const Point next[2] = {{p.x + 1, p.y}, {p.x, p.y + 1}};
        for (Point q : next) {
            if (q.x > b.x || q.y > b.y || !avoids(q, K) || used.count(q)) continue;
            trail.push_back(q);
            paths_to(i, q, b, trail);
            trail.pop_back();
        }
    }

    void place(int i) {
        if (i == N) {
            cur.sign = permutation_sign(cur.perm);
            out.push_back(cur);
            if (out.size() > cap) throw BudgetExceeded("too many survivors for the configured budget");
            return;
        }
        const Point a = initial_point(i, K, M);
        if (!avoids(a, K) || used.count(a)) return;
        for (int j = 0; j < N; ++j) {
            if (taken[j]) continue;
            std::vector<Point> trail{a};
            paths_to(i, a, terminal_point(j), trail);
        }
    }
};

}  // namespace

std::vector<PathTuple> survivors(int K, long M, int N, const Budget& budget) {
    if (K <= 0) throw std::invalid_argument("K must be >= 1");
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    SurvivorSearch s{K, M, N, budget.tuples, {}, std::vector<bool>(N, false), {}, {}};
    s.cur.paths.resize(N);
    s.cur.perm.resize(N);
    s.place(0);
    std::sort(s.out.begin(), s.out.end(), [](const PathTuple& a, const PathTuple& b) {
        return std::tie(a.perm, a.paths) < std::tie(b.perm, b.paths);
    });
    return s.out;
}

Int signed_sum(const std::vector<PathTuple>& ts) {
    Int s = 0;
    for (const auto& t : ts) s += t.sign;
    return s;
}

}  // namespace hp
