#pragma once

// Slow, obviously-correct reference computations.  Nothing here calls the
// library's own algorithms for the quantity being checked.

#include "lattice_paths.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using hp::Int;
using hp::Point;

// Catalan numbers from the recurrence c_{n+1} = sum c_i c_{n-i}.
inline std::vector<Int> catalan(int count) {
    std::vector<Int> c(count, 0);
    if (count) c[0] = 1;
    for (int n = 1; n < count; ++n)
        for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
    return c;
}

// K-fold convolution power of the Catalan sequence, by repeated convolution.
inline Int convolution_power(int K, long p) {
    if (p < 0) return 0;
    const auto c = catalan(static_cast<int>(p) + 1);
    std::vector<Int> acc(p + 1, 0);
    acc[0] = 1;
    for (int r = 0; r < K; ++r) {
        std::vector<Int> next(p + 1, 0);
        for (long i = 0; i <= p; ++i)
            for (long j = 0; i + j <= p; ++j) next[i + j] += acc[i] * c[j];
        acc = std::move(next);
    }
    return acc[p];
}

// Pascal's triangle for n >= 0, falling-factorial product otherwise.
inline Int binomial(long n, long r) {
    if (r < 0) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < r; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

inline Int cofactor_det(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        const Int term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : Int(-term);
    }
    return det;
}

inline Int hankel_cofactor(int K, long M, int N) {
    std::vector<std::vector<Int>> a(N, std::vector<Int>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a[i][j] = convolution_power(K, i + j + M);
    return cofactor_det(a);
}

// Every up/right path from a to b, as point lists, that never touches y = x - K.
inline std::vector<std::vector<Point>> all_paths(Point a, Point b, int K) {
    std::vector<std::vector<Point>> out;
    if (b.x < a.x || b.y < a.y) return out;
    std::vector<Point> cur{a};
    std::function<void(Point)> walk = [&](Point p) {
        if (p.y == p.x - K) return;
        if (p.x == b.x && p.y == b.y) {
            out.push_back(cur);
            return;
        }
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
            if (q.x > b.x || q.y > b.y) continue;
            cur.push_back(q);
            walk(q);
            cur.pop_back();
        }
    };
    walk(a);
    return out;
}

inline int sign_by_cycles(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 ? -1 : 1;
}

inline long long pair_inversions(const std::vector<int>& v) {
    long long n = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) n += v[i] > v[j];
    return n;
}

// Pairs (one, zero) with the one strictly left of the zero.
inline long long bit_inversions(const std::vector<std::uint8_t>& bits) {
    long long n = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        for (std::size_t j = i + 1; j < bits.size(); ++j) n += bits[i] == 1 && bits[j] == 0;
    return n;
}

// True iff two paths of the tuple share a lattice point.
inline bool any_shared_point(const hp::PathTuple& t) {
    std::map<Point, int> seen;
    for (std::size_t i = 0; i < t.paths.size(); ++i)
        for (Point p : t.paths[i].points())
            if (!seen.emplace(p, static_cast<int>(i)).second) return true;
    return false;
}

}  // namespace oracle
