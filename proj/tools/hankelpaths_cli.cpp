#include "hankelpaths/hankelpaths.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

struct Owned {
    char* s = nullptr;
    ~Owned() { hp_string_free(s); }
};

struct InstanceDeleter {
    void operator()(hp_instance* p) const { hp_instance_destroy(p); }
};
struct ReportDeleter {
    void operator()(hp_report* p) const { hp_report_destroy(p); }
};

int report_error(hp_status s) {
    std::cerr << "hankelpaths: " << hp_status_string(s);
    if (*hp_last_error()) std::cerr << ": " << hp_last_error();
    std::cerr << "\n";
    return s == HP_INVALID_ARGUMENT || s == HP_OUT_OF_RANGE ? exit_usage : exit_fail;
}

bool write_text(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "hankelpaths: cannot write " << path << "\n";
        return false;
    }
    return true;
}

// --budget wins over HANKELPATHS_BUDGET, which wins over the default.
unsigned long long effective_budget(const std::optional<unsigned long long>& flag, unsigned long long fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HANKELPATHS_BUDGET"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "hankelpaths: ignoring malformed HANKELPATHS_BUDGET=" << env << "\n";
    }
    return fallback;
}

struct Selection {
    int k = 1, m = 1, n = 0;
    std::string parity = "even";
    std::string side = "lhs";
    std::optional<unsigned long long> budget;
    std::string out;
};

void add_instance_flags(CLI::App* cmd, Selection& sel, bool with_side) {
    cmd->add_option("--k", sel.k, "k >= 1")->check(CLI::PositiveNumber);
    cmd->add_option("--m", sel.m, "m >= 1")->check(CLI::PositiveNumber);
    cmd->add_option("--n", sel.n, "n >= 0")->check(CLI::NonNegativeNumber);
    cmd->add_option("--parity", sel.parity, "even | odd")->check(CLI::IsMember({"even", "odd"}));
    if (with_side) cmd->add_option("--side", sel.side, "lhs | rhs")->check(CLI::IsMember({"lhs", "rhs"}));
    cmd->add_option("--budget", sel.budget, "enumeration cap (tuples); env HANKELPATHS_BUDGET");
    cmd->add_option("--out", sel.out, "output file (default stdout)");
}

std::unique_ptr<hp_instance, InstanceDeleter> make_instance(const Selection& sel, hp_status& status) {
    hp_instance* raw = nullptr;
    status = hp_instance_create(sel.k, sel.m, sel.n, sel.parity == "odd" ? HP_ODD : HP_EVEN,
                                sel.side == "rhs" ? HP_RHS : HP_LHS, &raw);
    return std::unique_ptr<hp_instance, InstanceDeleter>(raw);
}

int run_det(int K, long M, int N, const std::string& format, const std::string& out) {
    Owned d;
    if (hp_status s = hp_hankel_det(K, M, N, &d.s)) return report_error(s);
    std::string text = format == "json" ? "{\"K\": " + std::to_string(K) + ", \"M\": " + std::to_string(M) +
                                              ", \"N\": " + std::to_string(N) + ", \"determinant\": \"" + d.s + "\"}\n"
                                        : std::string(d.s) + "\n";
    return write_text(out, text.c_str()) ? exit_pass : exit_fail;
}

int run_enumerate(const Selection& sel, std::size_t listed) {
    hp_status s;
    auto inst = make_instance(sel, s);
    if (s) return report_error(s);
    Owned json;
    if ((s = hp_enumerate(inst.get(), effective_budget(sel.budget, 10'000'000), listed, &json.s))) return report_error(s);
    return write_text(sel.out, json.s) ? exit_pass : exit_fail;
}

struct VerifyFlags {
    std::optional<int> k, m, n;
    std::optional<int> k_max, m_max, n_max;
    std::string parity = "both";
    std::string format = "json";
    std::optional<unsigned long long> budget;
    unsigned long long tuple_gate = 0;
    unsigned threads = 0;
    bool timing = false;
    bool inject_fault = false;
    std::string out;
};

int run_verify(const VerifyFlags& f) {
    hp_grid g;
    g.k_min = f.k.value_or(1);
    g.k_max = f.k_max.value_or(f.k ? *f.k : 3);
    g.m_min = f.m.value_or(1);
    g.m_max = f.m_max.value_or(f.m ? *f.m : 3);
    g.n_min = f.n.value_or(0);
    g.n_max = f.n_max.value_or(f.n ? *f.n : 3);
    g.parity_mask = f.parity == "even" ? 1u : f.parity == "odd" ? 2u : 3u;

    hp_verify_options opt;
    hp_verify_options_default(&opt);
    opt.survivor_budget = effective_budget(f.budget, opt.survivor_budget);
    if (f.tuple_gate) opt.tuple_gate = f.tuple_gate;
    opt.threads = f.threads;
    opt.timing = f.timing;
    opt.inject_fault = f.inject_fault;

    hp_report* raw = nullptr;
    if (hp_status s = hp_verify(&g, &opt, &raw)) return report_error(s);
    std::unique_ptr<hp_report, ReportDeleter> rep(raw);
    Owned text;
    if (hp_status s = hp_report_render(rep.get(), f.format == "csv" ? HP_CSV : HP_JSON, &text.s)) return report_error(s);
    if (!write_text(f.out, text.s)) return exit_fail;
    return hp_report_passed(rep.get()) ? exit_pass : exit_fail;
}

int run_bijection(const Selection& sel) {
    hp_status s;
    auto inst = make_instance(sel, s);
    if (s) return report_error(s);
    hp_verify_options opt;
    hp_verify_options_default(&opt);
    opt.survivor_budget = effective_budget(sel.budget, opt.survivor_budget);
    int passed = 0;
    Owned json;
    if ((s = hp_bijection_check(inst.get(), &opt, &passed, &json.s))) return report_error(s);
    if (!write_text(sel.out, json.s)) return exit_fail;
    return passed ? exit_pass : exit_fail;
}

int run_render(const Selection& sel, const std::string& kind, std::size_t index) {
    hp_status s;
    auto inst = make_instance(sel, s);
    if (s) return report_error(s);
    const hp_render_kind rk = kind == "folded"    ? HP_RENDER_FOLDED
                              : kind == "overlay" ? HP_RENDER_OVERLAY
                                                  : HP_RENDER_SURVIVOR;
    Owned svg;
    if ((s = hp_render_svg(inst.get(), rk, index, effective_budget(sel.budget, 10'000'000), &svg.s)))
        return report_error(s);
    return write_text(sel.out, svg.s) ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel determinants of convoluted Catalan numbers and their path-counting identities"};
    app.require_subcommand(1);

    int det_K = 1, det_N = 0;
    long det_M = 0;
    std::string det_format = "text", det_out;
    auto* det = app.add_subcommand("det", "exact determinant D(K, M, N)");
    det->add_option("K", det_K)->required()->check(CLI::PositiveNumber);
    det->add_option("M", det_M)->required();
    det->add_option("N", det_N)->required()->check(CLI::NonNegativeNumber);
    det->add_option("--format", det_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    det->add_option("--out", det_out, "output file (default stdout)");

    Selection enum_sel;
    std::size_t listed = 20;
    auto* enumerate = app.add_subcommand("enumerate", "survivors of one side of an identity");
    add_instance_flags(enumerate, enum_sel, true);
    enumerate->add_option("--list", listed, "survivors spelled out in full");
    std::string enum_format = "json";
    enumerate->add_option("--format", enum_format, "json")->check(CLI::IsMember({"json"}));

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "check the identities on a parameter grid");
    verify->add_option("--k", vf.k, "smallest k (alone: only this k)")->check(CLI::PositiveNumber);
    verify->add_option("--m", vf.m, "smallest m (alone: only this m)")->check(CLI::PositiveNumber);
    verify->add_option("--n", vf.n, "smallest n (alone: only this n)")->check(CLI::NonNegativeNumber);
    verify->add_option("--k-max", vf.k_max)->check(CLI::PositiveNumber);
    verify->add_option("--m-max", vf.m_max)->check(CLI::PositiveNumber);
    verify->add_option("--n-max", vf.n_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--parity", vf.parity, "even | odd | both")->check(CLI::IsMember({"even", "odd", "both"}));
    verify->add_option("--budget", vf.budget, "survivors per side before skipping; env HANKELPATHS_BUDGET");
    verify->add_option("--tuple-gate", vf.tuple_gate, "all-tuple routes run up to this many tuples");
    verify->add_option("--threads", vf.threads, "worker threads (0: all cores)");
    verify->add_flag("--timing", vf.timing, "record seconds per instance");
    verify->add_flag("--inject-fault", vf.inject_fault, "perturb the rhs determinant");
    verify->add_option("--format", vf.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", vf.out, "output file (default stdout)");

    Selection bij_sel;
    auto* bijection = app.add_subcommand("bijection-check", "psi/xi route on one instance");
    add_instance_flags(bijection, bij_sel, false);

    Selection ren_sel;
    std::string kind = "survivor";
    std::size_t index = 0;
    auto* render = app.add_subcommand("render", "SVG picture of a survivor or folded overlay");
    add_instance_flags(render, ren_sel, true);
    render->add_option("--kind", kind, "survivor | overlay | folded")
        ->check(CLI::IsMember({"survivor", "overlay", "folded"}));
    render->add_option("--index", index, "which one, in enumeration order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (det->parsed()) return run_det(det_K, det_M, det_N, det_format, det_out);
    if (enumerate->parsed()) return run_enumerate(enum_sel, listed);
    if (verify->parsed()) return run_verify(vf);
    if (bijection->parsed()) return run_bijection(bij_sel);
    return run_render(ren_sel, kind, index);
}
