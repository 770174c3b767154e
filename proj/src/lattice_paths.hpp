#pragma once

#include "exact_arith.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hp {

// Lexicographic order (x first, then y) is the order used for the maximal
// intersection point.
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

std::string to_string(Point p);

enum class Step : std::uint8_t { right = 0, up = 1 };

struct Path {
    Point start;
    std::vector<Step> steps;

    Point end() const;
    std::vector<Point> points() const;
    static Path from_points(const std::vector<Point>& pts);
    auto operator<=>(const Path&) const = default;
};

struct PathTuple {
    std::vector<Path> paths;
    std::vector<int> perm;  // path i runs from A_i to B_{perm[i]}
    int sign = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::uint64_t paths_per_pair = 1'000'000;
    std::uint64_t tuples = 10'000'000;
};

Point initial_point(int i, int K, long M);
Point terminal_point(int j);

// True iff p lies strictly above the forbidden line y = x - K.
inline bool avoids(Point p, int K) { return p.y > p.x - K; }

Int count_avoiding_paths(Point a, Point b, int K);
std::vector<Path> enumerate_avoiding_paths(Point a, Point b, int K, const Budget& budget = {});

int permutation_sign(const std::vector<int>& perm);
long long inversion_count(const std::vector<int>& perm);

// Exact number of N-tuples over all permutations (the permanent of the
// pair-count matrix); used to decide whether full enumeration fits a budget.
Int tuple_count(int K, long M, int N);

// Streams every tuple in the order: permutation lexicographic, then per-path
// lexicographic.  Throws BudgetExceeded before producing anything when the
// instance is larger than budget.tuples.
void for_each_tuple(int K, long M, int N, const Budget& budget,
                    const std::function<void(const PathTuple&)>& visit);

struct Intersection {
    Point point;
    int first = 0;   // path indices meeting at point
    int second = 0;
};

std::optional<Intersection> max_intersection(const PathTuple& t);
PathTuple lgv_involution(const PathTuple& t);

// Nonintersecting tuples, sorted by (permutation, paths).
std::vector<PathTuple> survivors(int K, long M, int N, const Budget& budget = {});

Int signed_sum(const std::vector<PathTuple>& ts);

}  // namespace hp
