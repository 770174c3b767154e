#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <vector>

namespace hp {

using Int = mpz_class;
using Rational = mpq_class;

enum class Parity { even, odd };
enum class Side { lhs, rhs };

const char* to_string(Parity p);
const char* to_string(Side s);

// Parameter bundle of one side of a Hankel identity.  K, M, N follow from
// (k, m, n, parity, side); k, m >= 1 and n >= 0 are enforced by make().
struct Instance {
    int k = 1;
    int m = 1;
    int n = 0;
    Parity parity = Parity::even;
    Side side = Side::lhs;

    static Instance make(int k, int m, int n, Parity parity, Side side);

    int K() const { return parity == Parity::even ? 2 * k : 2 * k - 1; }
    int M() const;
    int N() const;
    int even() const { return parity == Parity::even ? 1 : 0; }
    Instance other_side() const;
};

// Generalized binomial n(n-1)...(n-r+1)/r!, zero for r < 0.
Int binomial(long n, long r);

Int catalan_convolution(int K, long p);

// The difference form and the two quotient forms of C_{K,p}, evaluated
// independently as rationals.
std::array<Rational, 3> catalan_convolution_forms(int K, long p);

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
    static Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

Matrix hankel_matrix(int K, long M, int N);

// Fraction-free (Bareiss) elimination with row pivoting; det of 0x0 is 1.
Int determinant(Matrix a);

Int hankel_det(int K, long M, int N);

// (-1)^e as +1/-1 for any integer e.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

long long binom2(long long a);

}  // namespace hp
