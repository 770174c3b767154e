#include "hankelpaths/hankelpaths.h"

#include "harness.hpp"
#include "svg.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

struct hp_instance {
    hp::Instance inst;
};

struct hp_report {
    hp::VerificationReport report;
};

namespace {

thread_local std::string last_error;

hp_status fail(hp_status s, const std::string& what) {
    last_error = what;
    return s;
}

template <class F>
hp_status guarded(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const hp::NotSurvivor& e) {
        return fail(HP_NOT_SURVIVOR, e.what());
    } catch (const hp::BudgetExceeded& e) {
        return fail(HP_BUDGET_EXCEEDED, e.what());
    } catch (const hp::RenderTooLarge& e) {
        return fail(HP_RENDER_TOO_LARGE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(HP_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HP_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HP_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(HP_INTERNAL_ERROR, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

hp_status need(const void* p, const char* what) {
    return p ? HP_OK : fail(HP_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

hp::HarnessOptions to_options(const hp_verify_options* opt) {
    hp::HarnessOptions o;
    if (!opt) return o;
    o.tuple_gate = opt->tuple_gate;
    o.survivor_budget = opt->survivor_budget;
    o.timing = opt->timing != 0;
    o.threads = opt->threads;
    o.inject_fault = opt->inject_fault != 0;
    return o;
}

hp::Budget budget_of(unsigned long long n) {
    hp::Budget b;
    b.tuples = n;
    return b;
}

std::string steps_string(const hp::Path& p) {
    std::string s;
    for (auto st : p.steps) s += st == hp::Step::right ? 'R' : 'U';
    return s;
}

}  // namespace

extern "C" {

const char* hp_status_string(hp_status s) {
    switch (s) {
        case HP_OK: return "ok";
        case HP_INVALID_ARGUMENT: return "invalid argument";
        case HP_BUDGET_EXCEEDED: return "budget exceeded";
        case HP_NOT_SURVIVOR: return "not a survivor";
        case HP_RENDER_TOO_LARGE: return "picture too large";
        case HP_OUT_OF_RANGE: return "index out of range";
        case HP_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char* hp_last_error(void) { return last_error.c_str(); }

void hp_string_free(char* s) { std::free(s); }

hp_status hp_binomial(long n, long r, char** out) {
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        *out = dup(hp::binomial(n, r).get_str());
        return HP_OK;
    });
}

hp_status hp_catalan_convolution(int K, long p, char** out) {
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        *out = dup(hp::catalan_convolution(K, p).get_str());
        return HP_OK;
    });
}

hp_status hp_hankel_det(int K, long M, int N, char** out) {
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        if (K <= 0 || N < 0) throw std::invalid_argument("need K >= 1 and N >= 0");
        *out = dup(hp::hankel_det(K, M, N).get_str());
        return HP_OK;
    });
}

hp_status hp_instance_create(int k, int m, int n, hp_parity parity, hp_side side, hp_instance** out) {
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        *out = new hp_instance{hp::Instance::make(k, m, n, parity == HP_ODD ? hp::Parity::odd : hp::Parity::even,
                                                  side == HP_RHS ? hp::Side::rhs : hp::Side::lhs)};
        return HP_OK;
    });
}

void hp_instance_destroy(hp_instance* inst) { delete inst; }

hp_status hp_instance_params(const hp_instance* inst, int* K, long* M, int* N) {
    if (auto s = need(inst, "instance")) return s;
    if (K) *K = inst->inst.K();
    if (M) *M = inst->inst.M();
    if (N) *N = inst->inst.N();
    return HP_OK;
}

void hp_verify_options_default(hp_verify_options* opt) {
    if (!opt) return;
    const hp::HarnessOptions d;
    opt->tuple_gate = d.tuple_gate;
    opt->survivor_budget = d.survivor_budget;
    opt->timing = d.timing;
    opt->threads = d.threads;
    opt->inject_fault = d.inject_fault;
}

hp_status hp_verify(const hp_grid* grid, const hp_verify_options* opt, hp_report** out) {
    if (auto s = need(grid, "grid")) return s;
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        if (grid->k_min < 1 || grid->m_min < 1 || grid->n_min < 0)
            throw std::invalid_argument("grid needs k, m >= 1 and n >= 0");
        if (grid->k_max < grid->k_min || grid->m_max < grid->m_min || grid->n_max < grid->n_min)
            throw std::invalid_argument("grid ranges are empty");
        hp::Grid g{grid->k_min, grid->k_max, grid->m_min, grid->m_max, grid->n_min, grid->n_max, {}};
        if (grid->parity_mask & 1u) g.parities.push_back(hp::Parity::even);
        if (grid->parity_mask & 2u) g.parities.push_back(hp::Parity::odd);
        if (g.parities.empty()) throw std::invalid_argument("parity mask selects nothing");
        *out = new hp_report{hp::verify_identities(g, to_options(opt))};
        return HP_OK;
    });
}

int hp_report_passed(const hp_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t hp_report_instances(const hp_report* r) { return r ? r->report.records.size() : 0; }

hp_status hp_report_render(const hp_report* r, hp_format format, char** out) {
    if (auto s = need(r, "report")) return s;
    if (auto s = need(out, "out")) return s;
    return guarded([&] {
        *out = dup(format == HP_CSV ? hp::emit_csv(r->report) : hp::emit_json(r->report));
        return HP_OK;
    });
}

void hp_report_destroy(hp_report* r) { delete r; }

hp_status hp_bijection_check(const hp_instance* inst, const hp_verify_options* opt, int* passed, char** json) {
    if (auto s = need(inst, "instance")) return s;
    return guarded([&] {
        const auto rec = hp::run_route_bijection(inst->inst, to_options(opt));
        if (passed) *passed = rec.passed() ? 1 : 0;
        if (json) *json = dup(hp::emit_json(rec));
        return HP_OK;
    });
}

hp_status hp_enumerate(const hp_instance* inst, unsigned long long budget, size_t max_listed, char** json) {
    if (auto s = need(inst, "instance")) return s;
    if (auto s = need(json, "json")) return s;
    return guarded([&] {
        const hp::Instance& i = inst->inst;
        const auto surv = hp::survivors(i.K(), i.M(), i.N(), budget_of(budget));
        nlohmann::ordered_json j;
        j["schema"] = hp::report_schema;
        j["instance"] = {{"parity", hp::to_string(i.parity)}, {"side", hp::to_string(i.side)}, {"k", i.k}, {"m", i.m},
                         {"n", i.n},  {"K", i.K()},  {"M", i.M()},  {"N", i.N()}};
        j["determinant"] = hp::hankel_det(i.K(), i.M(), i.N()).get_str();
        j["tuple_count"] = hp::tuple_count(i.K(), i.M(), i.N()).get_str();
        j["survivors"] = surv.size();
        j["signed_sum"] = hp::signed_sum(surv).get_str();
        if (i.side == hp::Side::lhs) {
            long long folded = 0;
            for (const auto& s : surv) folded += !hp::find_involutive_connection(hp::fold(s, i));
            j["folded_survivors"] = folded;
        }
        auto listed = nlohmann::ordered_json::array();
        for (std::size_t q = 0; q < surv.size() && q < max_listed; ++q) {
            nlohmann::ordered_json e;
            e["perm"] = surv[q].perm;
            e["sign"] = surv[q].sign;
            e["code"] = hp::code_of_survivor(surv[q], i).str();
            auto paths = nlohmann::ordered_json::array();
            for (const auto& p : surv[q].paths) paths.push_back(steps_string(p));
            e["paths"] = std::move(paths);
            listed.push_back(std::move(e));
        }
        j["listed"] = std::move(listed);
        *json = dup(j.dump(2) + "\n");
        return HP_OK;
    });
}

hp_status hp_render_svg(const hp_instance* inst, hp_render_kind kind, size_t index, unsigned long long budget,
                        char** svg) {
    if (auto s = need(inst, "instance")) return s;
    if (auto s = need(svg, "svg")) return s;
    return guarded([&] {
        const hp::Instance& i = inst->inst;
        if (kind == HP_RENDER_SURVIVOR) {
            const auto surv = hp::survivors(i.K(), i.M(), i.N(), budget_of(budget));
            if (surv.empty() && index == 0) {
                *svg = dup(hp::render_tuple_svg(hp::PathTuple{}, i.K()));
                return HP_OK;
            }
            *svg = dup(hp::render_tuple_svg(surv.at(index), i.K()));
            return HP_OK;
        }
        if (i.side != hp::Side::lhs) throw std::invalid_argument("overlays are drawn for lhs instances");
        if (kind == HP_RENDER_FOLDED) {
            const auto folded = hp::folded_survivors(i, budget_of(budget));
            *svg = dup(hp::render_overlay_svg(folded.at(index).overlay));
            return HP_OK;
        }
        const auto surv = hp::survivors(i.K(), i.M(), i.N(), budget_of(budget));
        *svg = dup(hp::render_overlay_svg(hp::fold(surv.at(index), i)));
        return HP_OK;
    });
}

}  // extern "C"
