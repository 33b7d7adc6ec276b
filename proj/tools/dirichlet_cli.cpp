// Command-line front door.  stdout carries exactly one JSON payload per run
// (argv echoed for provenance); stderr carries human-readable messages.
// Exit codes: 0 ok, 2 precondition violation / usage, 3 tolerance
// unattained, 4 saturation diagnostic failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/asymptotics.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/measures.hpp"
#include "dirichlet/norms.hpp"
#include "dirichlet/pointeval.hpp"
#include "dirichlet/polynomial.hpp"
#include "dirichlet/riemann_liouville.hpp"

namespace {

using namespace dirichlet;

std::vector<std::string> g_argv;

JsonWriter payload(const std::string& command) {
    JsonWriter w;
    w.begin_object().field("command", command).begin_array("argv");
    for (const auto& a : g_argv) w.value(a);
    w.end_array();
    return w;
}

void emit(JsonWriter& w) {
    w.end_object();
    std::printf("%s\n", w.str().c_str());
}

void add_fit_fields(JsonWriter& w, const char* prefix, const ExponentFit& fit) {
    w.field(std::string(prefix) + "slope", fit.slope)
        .field(std::string(prefix) + "intercept", fit.intercept)
        .field(std::string(prefix) + "r_squared", fit.r_squared)
        .field(std::string(prefix) + "variable", fit.variable);
}

GridSpec parse_grid(const std::string& text, const std::string& spacing) {
    GridSpec g;
    g.log_spaced = spacing != "linear";
    if (text.empty()) return g;
    double lo = 0.0, hi = 0.0;
    int k = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &k) != 3)
        throw precondition_error("--grid expects lo:hi:count");
    g.lo = lo;
    g.hi = hi;
    g.count = k;
    return g;
}

int run_norm(const std::string& space, double p, const std::string& measure_json,
             const std::string& inner, std::uint64_t samples, std::uint64_t seed,
             const std::string& input) {
    const DirichletPolynomial f = polynomial_from_json(read_file_or_stdin(input));
    NormEstimate est;
    if (space == "hp") {
        if (inner == "mc")
            est = norm_hp_mc(f, p, samples, seed);
        else
            est = norm_hp_even(f, static_cast<int>(p));
    } else if (space == "ap") {
        if (measure_json.empty()) throw precondition_error("norm --space ap needs --measure");
        const WeightMeasure mu = measure_from_json(measure_json);
        ApOptions opt;
        opt.inner = inner == "mc" ? ApOptions::Inner::MonteCarlo : ApOptions::Inner::Even;
        opt.samples = samples;
        opt.seed = seed;
        est = norm_ap(f, mu, p, opt);
    } else {
        throw precondition_error("norm: --space must be hp or ap");
    }
    JsonWriter w = payload("norm");
    w.field("value", est.value)
        .field("method", method_name(est.method))
        .field("error", est.error)
        .field("samples_or_nodes", static_cast<std::uint64_t>(est.samples_or_nodes));
    emit(w);
    return 0;
}

int run_rl(double t, const std::string& input, const std::string& output) {
    const DirichletPolynomial f = polynomial_from_json(read_file_or_stdin(input));
    const DirichletPolynomial g = rl_apply(f, t);
    const std::string out_json = polynomial_to_json(g);
    if (!output.empty() && output != "-") {
        write_file(output, out_json);
        JsonWriter w = payload("rl");
        w.field("t", t).field("output", output)
            .field("support", static_cast<std::uint64_t>(g.size()));
        emit(w);
    } else {
        std::printf("%s\n", out_json.c_str());
    }
    return 0;
}

int run_verify_kt(double t, double tol) {
    KtResult r = kt_constant(t, tol);
    JsonWriter w = payload("verify-kt");
    w.field("t", t)
        .field("kt", r.value)
        .field("reference", r.reference)
        .field("achieved_rel_error", r.achieved_rel_error)
        .field("truncation", r.truncation)
        .field("ok", r.ok);
    emit(w);
    return 0;
}

int run_reconstruct(double t, double theta, double tol, const std::string& input) {
    const DirichletPolynomial f = polynomial_from_json(read_file_or_stdin(input));
    const Complex got = reconstruct(f, t, theta, tol);
    const Complex expect = f.evaluate(Complex(theta, 0.0));
    JsonWriter w = payload("reconstruct");
    w.field("t", t)
        .field("theta", theta)
        .field("value_re", got.real())
        .field("value_im", got.imag())
        .field("direct_re", expect.real())
        .field("direct_im", expect.imag())
        .field("abs_difference", std::abs(got - expect));
    emit(w);
    return 0;
}

int run_delta_norm(double alpha, double sigma, const std::string& space, double tol) {
    KernelValue kv;
    if (space == "h2")
        kv = delta_norm_h2(sigma, tol);
    else if (space == "a2")
        kv = delta_norm_a2(sigma, alpha, false, tol);
    else if (space == "a2-infty")
        kv = delta_norm_a2(sigma, alpha, true, tol);
    else
        throw precondition_error("delta-norm: --space must be a2, a2-infty, or h2");
    JsonWriter w = payload("delta-norm");
    w.field("sigma", sigma)
        .field("alpha", alpha)
        .field("space", space_name(kv.space))
        .field("value", kv.value)
        .field("truncation_N", static_cast<std::uint64_t>(kv.truncation_N))
        .field("tail_bound", kv.tail_bound);
    emit(w);
    return 0;
}

int run_check_conditions(const std::string& measure_json, double q_exponent, double p,
                         double t) {
    const WeightMeasure mu = measure_from_json(measure_json);
    const ConditionReport h = check_H_condition(mu, q_exponent, p, t);
    const ConditionReport d = check_D_condition(mu);
    JsonWriter w = payload("check-conditions");
    w.field("measure", measure_to_json(mu));
    w.key("h_condition").begin_object()
        .field("satisfied", h.satisfied)
        .field("integral_value", h.integral_value)
        .field("integral_finite", h.integral_finite)
        .field("witness_lambda", h.witness_lambda)
        .field("witness_u", h.witness_u)
        .field("note", h.note)
        .end_object();
    w.key("d_condition").begin_object()
        .field("satisfied", d.satisfied)
        .field("observed_sup", d.observed_sup)
        .field("remark_discrepancy", d.remark_discrepancy)
        .field("note", d.note)
        .end_object();
    emit(w);
    return 0;
}

int run_zeta_power(int m, std::uint64_t N, const std::string& output) {
    const DirichletPolynomial f = zeta_power(m, N);
    const std::string out_json = polynomial_to_json(f);
    if (!output.empty() && output != "-") {
        write_file(output, out_json);
        JsonWriter w = payload("zeta-power");
        w.field("m", m).field("N", static_cast<std::uint64_t>(N)).field("output", output);
        emit(w);
    } else {
        std::printf("%s\n", out_json.c_str());
    }
    return 0;
}

int run_fit(const ExperimentSpec& spec) {
    JsonWriter w = payload("fit");
    w.field("experiment", spec.experiment);
    if (spec.experiment == "point-eval") {
        PointEvalResult r = experiment_point_eval(spec);
        add_fit_fields(w, "", r.fit_subspace);
        add_fit_fields(w, "full_", r.fit_full);
        w.field("expected_slope", r.expected_slope);
    } else if (spec.experiment == "zeta-power") {
        ZetaPowerResult r = experiment_zeta_power(spec);
        add_fit_fields(w, "", r.fit);
        add_fit_fields(w, "truncated_", r.fit_truncated);
        add_fit_fields(w, "truncated_2n_", r.fit_truncated_2n);
        w.field("diagnostic_shift", r.diagnostic_shift)
            .field("diagnostic_pass", r.diagnostic_pass)
            .field("expected_slope", r.expected_slope);
    } else if (spec.experiment == "norm-equivalence") {
        NormEquivalenceResult r = experiment_norm_equivalence(spec);
        w.field("r_min", r.r_min)
            .field("r_max", r.r_max)
            .field("spread", r.spread)
            .field("envelope_bound", r.envelope_bound)
            .field("envelope_pass", r.envelope_pass)
            .field("spread_pass", r.spread_pass)
            .field("count", r.count);
    } else if (spec.experiment == "embedding") {
        EmbeddingResult r = experiment_embedding(spec);
        add_fit_fields(w, "", r.fit);
        add_fit_fields(w, "truncated_", r.fit_truncated);
        w.field("verdict", r.verdict).field("expected_slope", r.expected_slope);
    } else {
        throw precondition_error("fit: unknown experiment " + spec.experiment);
    }
    if (!spec.out_csv.empty()) w.field("csv", spec.out_csv);
    emit(w);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

    CLI::App app{"Numerics for Hardy and Bergman-type spaces of Dirichlet series"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (0 = hardware default)");

    // norm
    std::string space = "hp", measure_json, inner = "even", input = "-";
    double p = 2.0;
    std::uint64_t samples = 100000, seed = 1;
    auto* cmd_norm = app.add_subcommand("norm", "H^p or A^p_mu norm of a polynomial");
    cmd_norm->add_option("--space", space, "hp | ap")->required();
    cmd_norm->add_option("--p", p, "exponent p >= 1");
    cmd_norm->add_option("--measure", measure_json, "measure descriptor JSON (ap)");
    cmd_norm->add_option("--inner", inner, "even | mc");
    cmd_norm->add_option("--samples", samples, "Monte Carlo samples");
    cmd_norm->add_option("--seed", seed, "Monte Carlo seed");
    cmd_norm->add_option("--input", input, "polynomial JSON path or - for stdin");

    // rl
    double rl_t = 1.0;
    std::string rl_in = "-", rl_out;
    auto* cmd_rl = app.add_subcommand("rl", "apply the fractional integration operator");
    cmd_rl->add_option("--t", rl_t, "order t in (0, 64]")->required();
    cmd_rl->add_option("--input", rl_in, "polynomial JSON path or -");
    cmd_rl->add_option("--output", rl_out, "output polynomial JSON path (default stdout)");

    // verify-kt
    double kt_t = 1.0, kt_tol = 1e-6;
    auto* cmd_kt = app.add_subcommand("verify-kt", "kernel constant against 2 pi / Gamma(t+1)");
    cmd_kt->add_option("--t", kt_t)->required();
    cmd_kt->add_option("--tol", kt_tol, "relative tolerance");

    // reconstruct
    double rc_t = 1.0, rc_theta = 1.0, rc_tol = 1e-4;
    std::string rc_in = "-";
    auto* cmd_rc = app.add_subcommand("reconstruct", "boundary-line reconstruction of f(theta)");
    cmd_rc->add_option("--t", rc_t)->required();
    cmd_rc->add_option("--theta", rc_theta)->required();
    cmd_rc->add_option("--tol", rc_tol);
    cmd_rc->add_option("--input", rc_in);

    // delta-norm
    double dn_alpha = 0.0, dn_sigma = 1.0, dn_tol = 1e-6;
    std::string dn_space = "a2";
    auto* cmd_dn = app.add_subcommand("delta-norm", "point-evaluation functional norm");
    cmd_dn->add_option("--alpha", dn_alpha);
    cmd_dn->add_option("--sigma", dn_sigma)->required();
    cmd_dn->add_option("--space", dn_space, "a2 | a2-infty | h2");
    cmd_dn->add_option("--tol", dn_tol);

    // check-conditions
    std::string cc_measure;
    double cc_q = 0.0, cc_p = 2.0, cc_t = 1.0;
    auto* cmd_cc = app.add_subcommand("check-conditions", "H- and D-condition checks");
    cmd_cc->add_option("--measure", cc_measure)->required();
    cmd_cc->add_option("--q-exponent", cc_q, "power-law q(lambda) = lambda^a");
    cmd_cc->add_option("--p", cc_p);
    cmd_cc->add_option("--t", cc_t);

    // zeta-power
    int zp_m = 1;
    std::uint64_t zp_N = 100;
    std::string zp_out;
    auto* cmd_zp = app.add_subcommand("zeta-power", "truncated zeta power coefficients");
    cmd_zp->add_option("--m", zp_m)->required();
    cmd_zp->add_option("--N", zp_N)->required();
    cmd_zp->add_option("--output", zp_out, "polynomial JSON path (default stdout)");

    // fit
    ExperimentSpec spec;
    std::string grid_text, spacing = "log";
    auto* cmd_fit = app.add_subcommand("fit", "run an experiment and fit the exponent");
    cmd_fit->add_option("--experiment", spec.experiment,
                        "point-eval | zeta-power | norm-equivalence | embedding")->required();
    cmd_fit->add_option("--alpha", spec.alpha);
    cmd_fit->add_option("--p", spec.p);
    cmd_fit->add_option("--q", spec.q);
    cmd_fit->add_option("--t", spec.t);
    cmd_fit->add_option("--m", spec.m);
    cmd_fit->add_option("--N", spec.N);
    cmd_fit->add_option("--grid", grid_text, "lo:hi:count in the experiment variable");
    cmd_fit->add_option("--spacing", spacing, "log | linear");
    cmd_fit->add_option("--seed", spec.seed);
    cmd_fit->add_option("--slope-tol", spec.slope_tol, "saturation diagnostic threshold");
    cmd_fit->add_option("--out", spec.out_csv, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (threads > 0) kernels::set_max_threads(threads);

    try {
        if (cmd_norm->parsed()) return run_norm(space, p, measure_json, inner, samples, seed, input);
        if (cmd_rl->parsed()) return run_rl(rl_t, rl_in, rl_out);
        if (cmd_kt->parsed()) return run_verify_kt(kt_t, kt_tol);
        if (cmd_rc->parsed()) return run_reconstruct(rc_t, rc_theta, rc_tol, rc_in);
        if (cmd_dn->parsed()) return run_delta_norm(dn_alpha, dn_sigma, dn_space, dn_tol);
        if (cmd_cc->parsed()) return run_check_conditions(cc_measure, cc_q, cc_p, cc_t);
        if (cmd_zp->parsed()) return run_zeta_power(zp_m, zp_N, zp_out);
        if (cmd_fit->parsed()) { spec.grid = parse_grid(grid_text, spacing); return run_fit(spec); }
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "precondition violation: %s\n", e.what());
        return 2;
    } catch (const tolerance_error& e) {
        std::fprintf(stderr, "tolerance unattained: %s\n", e.what());
        return 3;
    } catch (const saturation_error& e) {
        std::fprintf(stderr, "saturation: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
