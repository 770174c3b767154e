#pragma once

#include "exact_arith.hpp"
#include "lattice_paths.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hp {

class NotSurvivor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EnforcedPoint {
    Point point;
    bool two_faced = false;
};

// End of the forced vertical run of every initial point.  The run from A_0
// has length one, every later run is two longer than the previous one, and
// a run that meets a terminal point on the diagonal stops there.
std::vector<EnforcedPoint> enforced_points(int K, long M, int N);

struct PointClassification {
    std::vector<EnforcedPoint> enforced;
    std::vector<Point> two_faced;
    int below_diagonal = 0;
    int above_diagonal = 0;
    int on_diagonal = 0;  // on the diagonal without being a terminal point
    std::vector<std::pair<int, int>> enforced_subpermutation;  // (i, j)
    int two_delta = 0;  // doubled distance of the projections: 2m + [odd]
};

PointClassification classify_points(const Instance& inst);

// Throws NotSurvivor with a reason when t is not a nonintersecting,
// forbidden-line avoiding tuple of the instance.
void check_survivor(const PathTuple& t, int K, long M, int N);
bool is_survivor(const PathTuple& t, int K, long M, int N);

// 1-indexed 01-code; bits[0] belongs to position 1.
struct Code01 {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    int at(std::size_t pos) const { return bits.at(pos - 1); }
    std::vector<int> zero_positions() const;
    std::string str() const;
    static Code01 parse(const std::string& s);
    bool operator==(const Code01&) const = default;
};

// Bits for every terminal that is not two-faced, in increasing order,
// 1 = reached from the left.  A zero-length path contributes 0.
std::vector<std::uint8_t> full_code(const PathTuple& s, const Instance& inst);

// The short code: full_code without its first entry.
Code01 code_of_survivor(const PathTuple& s, const Instance& inst);

// Restores the omitted first bit from the number of zeros a code of this
// instance carries.
std::vector<std::uint8_t> complete_code(const Code01& c, const Instance& inst);

// Rebuilds the permutation of a survivor from its full code: two-faced
// indices are fixed, the first #zeros remaining indices go to the zero
// terminals in reverse order, the rest to the one terminals in order.
std::vector<int> permutation_from_code(const std::vector<std::uint8_t>& full, const Instance& inst);

long long inversions(const Code01& c);
int sign_rhs(const Code01& c);
int sign_lhs(const Code01& c, const Instance& inst);
int swap_parity(const Code01& c, std::size_t i, std::size_t j);

// The two closed forms for the lhs inversion count; whichever agrees with
// sign_lhs is reported by the harness.
long long lhs_exponent_short(const Code01& c, const Instance& inst);  // binom(m+[even],2) + inv(c)
long long lhs_exponent_long(const Code01& c, const Instance& inst);   // binom(m+k-1+[even],2) + inv(c)
long long lhs_exponent_long_full(const Code01& c, const Instance& inst);  // same, inv of the full code

}  // namespace hp
