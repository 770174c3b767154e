// One line per acceptance criterion; exit status 1 if any fails.

#include "harness.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace hp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// k, m <= 2, n <= 2, both parities: the grid shared by criteria 4, 6, 7 and 8.
const VerificationReport& small_grid_report() {
    static const VerificationReport rep = [] {
        Grid g;
        g.k_max = 2;
        g.m_max = 2;
        g.n_max = 2;
        return verify_identities(g);
    }();
    return rep;
}

Outcome closed_forms() {
    Outcome out;
    int checked = 0;
    for (int K = 1; K <= 8; ++K)
        for (long p = 0; p <= 40; ++p) {
            const auto f = catalan_convolution_forms(K, p);
            out.ok &= f[0] == f[1] && f[1] == f[2] && f[0] == Rational(catalan_convolution(K, p));
            if (p <= 12) out.ok &= catalan_convolution(K, p) == oracle::convolution_power(K, p);
            ++checked;
        }
    const long catalan[] = {1, 1, 2, 5, 14, 42};
    for (long p = 0; p < 6; ++p) out.ok &= catalan_convolution(1, p) == catalan[p];
    out.detail = std::to_string(checked) + " (K,p) pairs";
    return out;
}

Outcome zero_ranges() {
    Outcome out;
    int zeros = 0;
    for (Parity par : {Parity::even, Parity::odd})
        for (int k = 1; k <= 4; ++k)
            for (int m = 1; m <= 4; ++m) {
                const Instance i = Instance::make(k, m, 0, par, Side::lhs);
                for (int N = 1; N <= zero_range_end(i); ++N) {
                    out.ok &= hankel_det(i.K(), i.M(), N) == 0;
                    if (N <= 6) out.ok &= oracle::hankel_cofactor(i.K(), i.M(), N) == 0;
                    ++zeros;
                }
            }
    out.detail = std::to_string(zeros) + " vanishing determinants";
    return out;
}

Outcome equalities() {
    Outcome out;
    int instances = 0;
    for (Parity par : {Parity::even, Parity::odd})
        for (int k = 1; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m)
                for (int n = 0; n <= 3; ++n) {
                    const Instance l = Instance::make(k, m, n, par, Side::lhs);
                    const Instance r = l.other_side();
                    const int factor = sign_power(binom2(m + k - 1 + (par == Parity::even ? 1 : 0)));
                    const Int dl = hankel_det(l.K(), l.M(), l.N());
                    out.ok &= dl == factor * hankel_det(r.K(), r.M(), r.N());
                    if (l.N() <= 7) out.ok &= dl == oracle::hankel_cofactor(l.K(), l.M(), l.N());
                    ++instances;
                }
    out.detail = std::to_string(instances) + " instances";
    return out;
}

Outcome lgv_equivalence() {
    Outcome out;
    int tuple_routes = 0;
    for (const auto& r : small_grid_report().records) {
        const Instance& l = r.inst;
        const Instance rh = l.other_side();
        const bool small = tuple_count(l.K(), l.M(), l.N()) <= 1000000 && tuple_count(rh.K(), rh.M(), rh.N()) <= 1000000;
        if (small) {
            out.ok &= r.tuple_sum == RouteState::pass;
            ++tuple_routes;
        }
        out.ok &= r.survivor_sum == RouteState::pass && r.det_equality == RouteState::pass;
        out.ok &= Int(r.det_lhs) == oracle::hankel_cofactor(l.K(), l.M(), l.N());
    }
    out.detail = std::to_string(tuple_routes) + "/" + std::to_string(small_grid_report().records.size()) +
                 " instances under the 1e6 tuple gate; survivor sums on all";
    return out;
}

Outcome reflection_counts() {
    Outcome out;
    int pairs = 0;
    for (int K = 1; K <= 4; ++K)
        for (int ax = -5; ax <= 0; ++ax)
            for (int ay = ax - K + 1; ay <= 1; ++ay)
                for (int dx = 0; dx <= 6; ++dx)
                    for (int dy = 0; dy <= 6; ++dy) {
                        if (oracle::binomial(dx + dy, dx) > 100000) continue;
                        const Point a{ax, ay}, b{ax + dx, ay + dy};
                        out.ok &= count_avoiding_paths(a, b, K) ==
                                  Int(static_cast<unsigned long>(oracle::all_paths(a, b, K).size()));
                        ++pairs;
                    }
    out.ok &= pairs >= 500;
    out.detail = std::to_string(pairs) + " endpoint pairs";
    return out;
}

Outcome involutions() {
    Outcome out;
    int phi = 0;
    for (const auto& r : small_grid_report().records) {
        if (r.phi_involution != RouteState::skipped) ++phi;
        out.ok &= r.phi_involution != RouteState::fail && r.psi_route == RouteState::pass;
    }
    out.detail = "phi on " + std::to_string(phi) + " instances, psi on " +
                 std::to_string(small_grid_report().records.size());
    return out;
}

Outcome bijection() {
    Outcome out;
    long long pairs = 0;
    for (const auto& r : small_grid_report().records) {
        out.ok &= r.xi_route == RouteState::pass && r.folded_survivors == r.rhs_survivors;
        out.ok &= r.factor == sign_power(binom2(r.inst.m + r.inst.k - 1 + (r.inst.parity == Parity::even ? 1 : 0)));
        pairs += r.folded_survivors;
    }
    const auto C = Code01::parse("01101011101011").bits;
    const auto z = ones_before_zeros(C);
    const Code01 c = code_transform(C, 8);
    const auto zeros = c.zero_positions();
    out.ok &= z == std::vector<int>{0, 2, 3, 6, 7};
    out.ok &= c.str() == "10011001" && complement(c).str() == "01100110";
    out.ok &= std::accumulate(zeros.begin(), zeros.end(), 0) == 18;
    out.detail = std::to_string(pairs) + " matched survivors; code chain 01101011101011 -> 10011001 -> 01100110, sum 18";
    return out;
}

Outcome structure() {
    Outcome out;
    long long folded = 0;
    for (const auto& r : small_grid_report().records) {
        out.ok &= r.structure == RouteState::pass;
        for (const auto& f : folded_survivors(r.inst)) {
            const StructureReport s = analyse_structure(f.overlay);
            out.ok &= s.free_kinks_above == 0 && s.strips == s.faces && s.descending_mixed == 0 &&
                      s.gb_not_followed_by_bg == 0 && s.corollary;
            ++folded;
        }
    }
    out.detail = std::to_string(folded) + " folded survivors";
    return out;
}

Outcome sign_formulas() {
    Outcome out;
    std::vector<Instance> insts;
    for (Parity par : {Parity::even, Parity::odd})
        for (int k = 1; k <= 3; ++k)
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n) insts.push_back(Instance::make(k, m, n, par, Side::lhs));
    std::ostringstream d;
    const auto rows = sign_formula_report(insts);
    out.ok &= rows.size() == 3;
    for (const auto& r : rows) {
        out.ok &= r.samples > 0 && r.oracle == r.samples;
        d << "; k=" << r.k << ":" << r.samples << " short " << r.short_form << " long " << r.long_form << " full "
          << r.long_full_form << " oracle " << r.oracle;
    }
    out.detail = d.str().substr(2);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{closed_forms,  zero_ranges, equalities,
                                                         lgv_equivalence, reflection_counts, involutions,
                                                         bijection,     structure,   sign_formulas};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s (%s; %.2fs)\n", i + 1, o.ok ? "PASS" : "FAIL", o.detail.c_str(), s);
        std::fflush(stdout);
        all &= o.ok;
    }
    return all ? 0 : 1;
}
