#include "harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace hp {

namespace {

auto instance_key(const Instance& i) { return std::make_tuple(i.parity, i.k, i.m, i.n); }

RouteState judge(bool ok) { return ok ? RouteState::pass : RouteState::fail; }

Budget survivor_budget(const HarnessOptions& opt) {
    Budget b;
    b.tuples = opt.survivor_budget;
    return b;
}

Budget tuple_budget(const HarnessOptions& opt) {
    Budget b;
    b.tuples = opt.tuple_gate;
    b.paths_per_pair = std::max<std::uint64_t>(opt.tuple_gate, 1);
    return b;
}

bool tuples_fit(int K, long M, int N, std::uint64_t gate) {
    return tuple_count(K, M, N) <= Int(static_cast<unsigned long>(gate));
}

Int tuple_route_sum(int K, long M, int N, const HarnessOptions& opt) {
    Int sum = 0;
    for_each_tuple(K, M, N, tuple_budget(opt), [&](const PathTuple& t) { sum += t.sign; });
    return sum;
}

bool phi_is_involution(int K, long M, int N, const HarnessOptions& opt) {
    bool ok = true;
    for_each_tuple(K, M, N, tuple_budget(opt), [&](const PathTuple& t) {
        const PathTuple u = lgv_involution(t);
        const bool fixed = !max_intersection(t);
        if (fixed) {
            ok &= u.paths == t.paths && u.perm == t.perm && u.sign == t.sign;
            return;
        }
        const PathTuple back = lgv_involution(u);
        ok &= back.paths == t.paths && back.perm == t.perm && u.sign == -t.sign;
    });
    return ok;
}

struct BijectionInputs {
    std::vector<FoldedSurvivor> folded;
    std::vector<PathTuple> rhs;
};

void check_bijection(const Instance& lhs, BijectionInputs& in, BijectionRecord& rec) {
    const Instance rhs = lhs.other_side();
    rec.folded = static_cast<long long>(in.folded.size());
    rec.rhs = static_cast<long long>(in.rhs.size());

    std::map<std::string, long long> lhs_codes, rhs_codes;
    Int total = 0;
    for (const auto& f : in.folded) {
        ++lhs_codes[code_transform(f.overlay.code(), lhs).str()];
        total += f.sign;
    }
    for (const auto& s : in.rhs) ++rhs_codes[code_of_survivor(s, rhs).str()];
    rec.codes_match = lhs_codes == rhs_codes;
    rec.weighted_total = total == hankel_det(lhs.K(), lhs.M(), lhs.N());

    const int factor = xi_sign_factor(lhs);
    std::set<std::vector<Path>> images;
    rec.constant_factor = true;
    rec.roundtrips = true;
    rec.green_outside_kept = true;
    const EssentialRegion region = EssentialRegion::of(lhs);
    for (const auto& f : in.folded) {
        const PathTuple img = xi_forward(f.overlay);
        images.insert(img.paths);
        rec.constant_factor &= img.sign * f.sign == factor;
        rec.roundtrips &= xi_inverse(img, rhs) == f.overlay;
        std::set<Edge> red;
        for (const auto& p : xi_red_paths(f.overlay))
            for (std::size_t i = 1; i < p.size(); ++i) red.insert(Edge{p[i - 1], p[i]});
        for (auto& [e, c] : f.overlay.edges())
            if (c == Colour::green && (!region.contains(e.from) || !region.contains(e.to))) rec.green_outside_kept &= red.count(e) > 0;
    }
    std::set<std::vector<Path>> rhs_set;
    for (const auto& s : in.rhs) {
        rhs_set.insert(s.paths);
        const PathTuple again = xi_forward(xi_inverse(s, rhs));
        rec.roundtrips &= again.paths == s.paths && again.perm == s.perm;
    }
    rec.forward_bijective = images.size() == in.folded.size() && images == rhs_set;
}

}  // namespace

const char* to_string(RouteState s) {
    switch (s) {
        case RouteState::skipped: return "skipped";
        case RouteState::pass: return "pass";
        case RouteState::fail: return "fail";
    }
    return "?";
}

std::vector<Instance> Grid::instances() const {
    std::vector<Instance> out;
    for (Parity p : parities)
        for (int k = k_min; k <= k_max; ++k)
            for (int m = m_min; m <= m_max; ++m)
                for (int n = n_min; n <= n_max; ++n) out.push_back(Instance::make(k, m, n, p, Side::lhs));
    std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return instance_key(a) < instance_key(b); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Instance& a, const Instance& b) { return instance_key(a) == instance_key(b); }),
              out.end());
    return out;
}

int zero_range_end(const Instance& inst) { return inst.m + inst.k - 1 - (inst.parity == Parity::odd ? 1 : 0); }

bool InstanceRecord::passed() const {
    for (RouteState s : {zero_range, det_equality, tuple_sum, phi_involution, survivor_sum, psi_route, xi_route, structure})
        if (s == RouteState::fail) return false;
    return budget != "error";
}

std::string InstanceRecord::status() const {
    if (!passed()) return "fail";
    return survivor_sum == RouteState::skipped ? "determinant-only pass" : "pass";
}

bool VerificationReport::passed() const {
    return std::all_of(records.begin(), records.end(), [](const InstanceRecord& r) { return r.passed(); });
}

bool BijectionRecord::passed() const {
    return note.empty() && codes_match && weighted_total && forward_bijective && roundtrips && constant_factor &&
           green_outside_kept;
}

InstanceRecord verify_instance(const Instance& lhs, const HarnessOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    InstanceRecord rec;
    rec.inst = lhs;
    const Instance rhs = lhs.other_side();
    const int K = lhs.K();

    bool zeros = true;
    for (int N = 1; N <= zero_range_end(lhs); ++N) zeros &= hankel_det(K, lhs.M(), N) == 0;
    rec.zero_range = judge(zeros);

    const Int dl = hankel_det(K, lhs.M(), lhs.N());
    Int dr = hankel_det(K, rhs.M(), rhs.N());
    if (opt.inject_fault) dr += 1;
    rec.det_lhs = dl.get_str();
    rec.det_rhs = dr.get_str();
    rec.factor = xi_sign_factor(lhs);
    rec.det_equality = judge(dl == rec.factor * dr);
    rec.lhs_tuples = tuple_count(K, lhs.M(), lhs.N()).get_str();

    bool tuples_ran = false;
    if (tuples_fit(K, lhs.M(), lhs.N(), opt.tuple_gate) && tuples_fit(K, rhs.M(), rhs.N(), opt.tuple_gate)) {
        rec.tuple_sum = judge(tuple_route_sum(K, lhs.M(), lhs.N(), opt) == dl &&
                              tuple_route_sum(K, rhs.M(), rhs.N(), opt) == dr);
        rec.phi_involution = judge(phi_is_involution(K, lhs.M(), lhs.N(), opt));
        tuples_ran = true;
    }

    try {
        BijectionInputs in;
        const auto lhs_s = survivors(K, lhs.M(), lhs.N(), survivor_budget(opt));
        in.rhs = survivors(K, rhs.M(), rhs.N(), survivor_budget(opt));
        rec.lhs_survivors = static_cast<long long>(lhs_s.size());
        rec.rhs_survivors = static_cast<long long>(in.rhs.size());
        rec.survivor_sum = judge(signed_sum(lhs_s) == dl && signed_sum(in.rhs) == dr);

        bool psi_ok = true, structure_ok = true;
        Int fixed_sum = 0;
        for (const auto& s : lhs_s) {
            const FoldedOverlay o = fold(s, lhs);
            const FoldedOverlay p = psi(o);
            psi_ok &= psi(p) == o;
            const bool fixed = p == o;
            if (!fixed) psi_ok &= overlay_sign(p) == -s.sign;
            const bool structured = analyse_structure(o).ok();
            structure_ok &= structured == fixed;
            if (fixed) {
                fixed_sum += s.sign;
                structure_ok &= check_lemma_chain(o).violations == 0;
                in.folded.push_back({o, s.sign});
            }
        }
        rec.folded_survivors = static_cast<long long>(in.folded.size());
        rec.psi_route = judge(psi_ok && fixed_sum == dl);
        rec.structure = judge(structure_ok);

        BijectionRecord b;
        b.inst = lhs;
        check_bijection(lhs, in, b);
        rec.xi_route = judge(b.passed());
        rec.budget = tuples_ran ? "complete" : "tuples-skipped";
    } catch (const BudgetExceeded&) {
        rec.budget = "enumeration-skipped";
    } catch (const std::exception& e) {
        rec.budget = "error";
        rec.note = e.what();
        rec.xi_route = RouteState::fail;
    }
    if (opt.timing) rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

VerificationReport verify_identities(const Grid& grid, const HarnessOptions& opt) {
    const auto insts = grid.instances();
    VerificationReport rep;
    rep.timing = opt.timing;
    rep.records.resize(insts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < insts.size(); i = next++) rep.records[i] = verify_instance(insts[i], opt);
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(insts.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    rep.sign_formulas = sign_formula_report(insts, opt);
    return rep;
}

BijectionRecord run_route_bijection(const Instance& lhs_in, const HarnessOptions& opt) {
    const Instance lhs = lhs_in.side == Side::lhs ? lhs_in : lhs_in.other_side();
    const Instance rhs = lhs.other_side();
    BijectionRecord rec;
    rec.inst = lhs;
    try {
        BijectionInputs in;
        in.folded = folded_survivors(lhs, survivor_budget(opt));
        in.rhs = survivors(rhs.K(), rhs.M(), rhs.N(), survivor_budget(opt));
        check_bijection(lhs, in, rec);
    } catch (const std::exception& e) {
        rec.note = e.what();
    }
    return rec;
}

std::vector<SignFormulaRow> sign_formula_report(const std::vector<Instance>& insts, const HarnessOptions& opt) {
    std::map<int, SignFormulaRow> rows;
    for (const Instance& lhs : insts) {
        auto& row = rows[lhs.k];
        row.k = lhs.k;
        std::vector<FoldedSurvivor> folded;
        try {
            folded = folded_survivors(lhs, survivor_budget(opt));
        } catch (const BudgetExceeded&) {
            continue;
        }
        for (const auto& f : folded) {
            Code01 c;
            const auto full = f.overlay.code();
            if (!full.empty()) c.bits.assign(full.begin() + 1, full.end());
            ++row.samples;
            row.short_form += sign_power(lhs_exponent_short(c, lhs)) == f.sign;
            row.long_form += sign_power(lhs_exponent_long(c, lhs)) == f.sign;
            row.long_full_form += sign_power(lhs_exponent_long_full(c, lhs)) == f.sign;
            row.oracle += sign_lhs(c, lhs) == f.sign;
        }
    }
    std::vector<SignFormulaRow> out;
    for (auto& [k, r] : rows) out.push_back(r);
    return out;
}

namespace {

using ordered = nlohmann::ordered_json;

ordered to_json(const Instance& i) {
    return ordered{{"parity", to_string(i.parity)}, {"k", i.k}, {"m", i.m}, {"n", i.n},
                   {"K", i.K()}, {"M_lhs", i.M()}, {"N_lhs", i.N()},
                   {"M_rhs", i.other_side().M()}, {"N_rhs", i.other_side().N()}};
}

ordered to_json(const InstanceRecord& r, bool timing) {
    ordered j;
    j["instance"] = to_json(r.inst);
    j["status"] = r.status();
    j["det_lhs"] = r.det_lhs;
    j["det_rhs"] = r.det_rhs;
    j["factor"] = r.factor;
    j["routes"] = ordered{{"zero_range", to_string(r.zero_range)},
                          {"det_equality", to_string(r.det_equality)},
                          {"tuple_sum", to_string(r.tuple_sum)},
                          {"phi_involution", to_string(r.phi_involution)},
                          {"survivor_sum", to_string(r.survivor_sum)},
                          {"psi_route", to_string(r.psi_route)},
                          {"xi_route", to_string(r.xi_route)},
                          {"structure", to_string(r.structure)}};
    j["counts"] = ordered{{"lhs_tuples", r.lhs_tuples},
                          {"lhs_survivors", r.lhs_survivors},
                          {"rhs_survivors", r.rhs_survivors},
                          {"folded_survivors", r.folded_survivors}};
    j["budget"] = r.budget;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

}  // namespace

std::string emit_json(const VerificationReport& r) {
    ordered j;
    j["schema"] = report_schema;
    j["passed"] = r.passed();
    ordered recs = ordered::array();
    for (const auto& rec : r.records) recs.push_back(to_json(rec, r.timing));
    j["instances"] = std::move(recs);
    ordered signs = ordered::array();
    for (const auto& s : r.sign_formulas)
        signs.push_back(ordered{{"k", s.k}, {"samples", s.samples}, {"short_form", s.short_form},
                                {"long_form", s.long_form}, {"long_full_form", s.long_full_form}, {"oracle", s.oracle}});
    j["sign_formulas"] = std::move(signs);
    return j.dump(2) + "\n";
}

std::string emit_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "parity,k,m,n,K,M_lhs,N_lhs,M_rhs,N_rhs,status,det_lhs,det_rhs,factor,zero_range,det_equality,tuple_sum,"
           "phi_involution,survivor_sum,psi_route,xi_route,structure,lhs_tuples,lhs_survivors,rhs_survivors,"
           "folded_survivors,budget";
    if (r.timing) out << ",seconds";
    out << "\n";
    for (const auto& x : r.records) {
        const Instance& i = x.inst;
        out << to_string(i.parity) << ',' << i.k << ',' << i.m << ',' << i.n << ',' << i.K() << ',' << i.M() << ','
            << i.N() << ',' << i.other_side().M() << ',' << i.other_side().N() << ',' << x.status() << ',' << x.det_lhs
            << ',' << x.det_rhs << ',' << x.factor;
        for (RouteState s : {x.zero_range, x.det_equality, x.tuple_sum, x.phi_involution, x.survivor_sum, x.psi_route,
                             x.xi_route, x.structure})
            out << ',' << to_string(s);
        out << ',' << x.lhs_tuples << ',' << x.lhs_survivors << ',' << x.rhs_survivors << ',' << x.folded_survivors
            << ',' << x.budget;
        if (r.timing) out << ',' << x.seconds;
        out << "\n";
    }
    return out.str();
}

std::string emit_json(const BijectionRecord& r) {
    ordered j;
    j["schema"] = report_schema;
    j["instance"] = to_json(r.inst);
    j["passed"] = r.passed();
    j["folded_survivors"] = r.folded;
    j["rhs_survivors"] = r.rhs;
    j["codes_match"] = r.codes_match;
    j["weighted_total"] = r.weighted_total;
    j["forward_bijective"] = r.forward_bijective;
    j["roundtrips"] = r.roundtrips;
    j["constant_factor"] = r.constant_factor;
    j["green_outside_kept"] = r.green_outside_kept;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(2) + "\n";
}

}  // namespace hp
