#include "exact_arith.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hp {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
const char* to_string(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

Instance Instance::make(int k, int m, int n, Parity parity, Side side) {
    if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
    if (m < 1) throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
    if (n < 0) throw std::invalid_argument("n must be >= 0, got " + std::to_string(n));
    return Instance{k, m, n, parity, side};
}

int Instance::M() const {
    if (side == Side::rhs) return 1 - k + m;
    return parity == Parity::even ? 1 - k - m : 2 - k - m;
}

int Instance::N() const {
    if (side == Side::rhs) return n;
    return parity == Parity::even ? n + m + k : n + m + k - 1;
}

Instance Instance::other_side() const {
    Instance o = *this;
    o.side = side == Side::lhs ? Side::rhs : Side::lhs;
    return o;
}

Int binomial(long n, long r) {
    if (r < 0) return 0;
    Int top = n;
    Int out;
    // mpz_bin_ui implements the generalized definition for negative tops.
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

Int catalan_convolution(int K, long p) {
    if (K <= 0) throw std::invalid_argument("K must be >= 1, got " + std::to_string(K));
    if (p < 0) return 0;
    return binomial(2 * p + K - 1, p) - binomial(2 * p + K - 1, p - 1);
}

std::array<Rational, 3> catalan_convolution_forms(int K, long p) {
    if (K <= 0) throw std::invalid_argument("K must be >= 1, got " + std::to_string(K));
    if (p < 0) return {Rational(0), Rational(0), Rational(0)};
    Rational diff(binomial(2 * p + K - 1, p) - binomial(2 * p + K - 1, p - 1));
    Rational q1 = Rational(K, p + K) * Rational(binomial(2 * p + K - 1, p));
    Rational q2 = Rational(K, 2 * p + K) * Rational(binomial(2 * p + K, p));
    q1.canonicalize();
    q2.canonicalize();
    return {diff, q1, q2};
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix hankel_matrix(int K, long M, int N) {
    if (K <= 0) throw std::invalid_argument("K must be >= 1, got " + std::to_string(K));
    if (N < 0) throw std::invalid_argument("N must be >= 0, got " + std::to_string(N));
    const auto n = static_cast<std::size_t>(N);
    // Hankel: one value per anti-diagonal.
    std::vector<Int> diag(n == 0 ? 0 : 2 * n - 1);
    for (std::size_t s = 0; s < diag.size(); ++s) diag[s] = catalan_convolution(K, static_cast<long>(s) + M);
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = diag[i + j];
    return a;
}

Int determinant(Matrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = std::move(t);
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

Int hankel_det(int K, long M, int N) { return determinant(hankel_matrix(K, M, N)); }

long long binom2(long long a) { return a * (a - 1) / 2; }

}  // namespace hp
