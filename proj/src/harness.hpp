#pragma once

#include "xi_bijection.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hp {

inline constexpr const char* report_schema = "hankelpaths-report/1";

struct Grid {
    int k_min = 1, k_max = 3;
    int m_min = 1, m_max = 3;
    int n_min = 0, n_max = 3;
    std::vector<Parity> parities{Parity::even, Parity::odd};

    std::vector<Instance> instances() const;  // lhs instances, sorted by key
};

struct HarnessOptions {
    std::uint64_t tuple_gate = 1'000'000;     // all-tuple routes run below this count
    std::uint64_t survivor_budget = 200'000;  // per side
    bool timing = false;
    unsigned threads = 0;  // 0: hardware concurrency
    bool inject_fault = false;
};

enum class RouteState { skipped, pass, fail };
const char* to_string(RouteState s);

struct InstanceRecord {
    Instance inst;  // lhs
    std::string det_lhs, det_rhs;
    int factor = 1;
    RouteState zero_range = RouteState::skipped;
    RouteState det_equality = RouteState::skipped;
    RouteState tuple_sum = RouteState::skipped;       // all tuples, both sides
    RouteState phi_involution = RouteState::skipped;  // φ on all lhs tuples
    RouteState survivor_sum = RouteState::skipped;    // survivors, both sides
    RouteState psi_route = RouteState::skipped;
    RouteState xi_route = RouteState::skipped;
    RouteState structure = RouteState::skipped;
    std::string lhs_tuples;  // exact count
    long long lhs_survivors = -1, rhs_survivors = -1, folded_survivors = -1;
    std::string budget;  // complete | tuples-skipped | enumeration-skipped
    std::string note;
    double seconds = 0;

    bool passed() const;
    std::string status() const;  // pass | determinant-only pass | fail
};

// Which closed form of the lhs inversion count agrees with the permutation
// sign of folded survivors, aggregated per k.
struct SignFormulaRow {
    int k = 0;
    long long samples = 0;
    long long short_form = 0;      // binom(m+[even],2) + inv(code)
    long long long_form = 0;       // binom(m+k-1+[even],2) + inv(code)
    long long long_full_form = 0;  // same with the completed code
    long long oracle = 0;          // permutation from the code
};

struct VerificationReport {
    std::vector<InstanceRecord> records;
    std::vector<SignFormulaRow> sign_formulas;
    bool timing = false;
    bool passed() const;
};

InstanceRecord verify_instance(const Instance& lhs, const HarnessOptions& opt = {});
VerificationReport verify_identities(const Grid& grid, const HarnessOptions& opt = {});

struct BijectionRecord {
    Instance inst;
    long long folded = 0;
    long long rhs = 0;
    bool codes_match = false;    // multiset of transformed lhs codes = rhs codes
    bool weighted_total = false; // Σ sign over folded survivors = D_lhs
    bool forward_bijective = false;
    bool roundtrips = false;
    bool constant_factor = false;
    bool green_outside_kept = false;
    std::string note;
    bool passed() const;
};

BijectionRecord run_route_bijection(const Instance& lhs, const HarnessOptions& opt = {});

std::vector<SignFormulaRow> sign_formula_report(const std::vector<Instance>& lhs_instances, const HarnessOptions& opt = {});

std::string emit_json(const VerificationReport& r);
std::string emit_csv(const VerificationReport& r);
std::string emit_json(const BijectionRecord& r);

// Zero range of the lhs determinant: N = 1 .. m+k-1 (even), m+k-2 (odd).
int zero_range_end(const Instance& inst);

}  // namespace hp
