// srlab: calibrate kernel/orientation/sign variants, then verify the
// integral identities over the witness catalog.  Emits report.json and
// samples/*.csv under --out.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srlab/calibrate.hpp"
#include "srlab/report.hpp"
#include "srlab/srlab.hpp"

using namespace srlab;

namespace {

const structural_set& st = structural_set::standard();

quat random_imag_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    quat d{0.0, u(rng), u(rng), u(rng)};
    if (norm(d) < 1e-3) d = e1;
    return d / norm(d);
}

nlohmann::json variants_json(const suite_config& cfg) {
    return {{"kernel", to_string(cfg.kernel)},
            {"orientation_sign", cfg.orientation_sign},
            {"morera_sign", cfg.morera_sign},
            {"gamma_bracket", cfg.gamma_bracket}};
}

bp_options bp_opts(const suite_config& cfg) {
    bp_options opt;
    opt.variant = cfg.kernel;
    opt.orientation = cfg.orientation_sign;
    opt.res = cfg.res;
    return opt;
}

void push(verification_report& rep, const std::string& id, const quat& p, double r) {
    rep.residuals.push_back(r);
    rep.samples.push_back({id, p, r});
}

verification_report verify_bp(const suite_config& cfg, bool g_terms) {
    verification_report rep;
    rep.identity = g_terms ? "borel-pompeiu" : "cauchy-global";
    rep.resolutions = cfg.res;
    rep.variants = variants_json(cfg);
    const auto opt = bp_opts(cfg);

    struct config {
        std::string name;
        field f, g;
        quat v, u;
    };
    const quat a{0.3, -0.5, 0.8, 0.2};
    std::vector<config> configs;
    if (g_terms) {
        configs.push_back({"poly", monomial_field(2, one), const_field(quat{}), quat{}, quat{}});
        configs.push_back({"weighted", exp_weighted(monomial_field(1, one), e1, -1.0),
                           exp_weighted(monomial_field(1, a), 0.3 * e2, -1.0), e1, 0.3 * e2});
        configs.push_back({"nonregular", conj_field(), exp_weighted(const_field(a), e3, -1.0),
                           quat{}, e3});
    } else {
        // members of Ker G_v only; the G-coupling volume term is dropped
        configs.push_back({"member-const", exp_weighted(const_field(a), e1, -1.0),
                           const_field(quat{}), e1, quat{}});
        configs.push_back({"member-q2", exp_weighted(monomial_field(2, one), e2, -1.0),
                           const_field(quat{}), e2, quat{}});
    }

    const std::vector<quat> interior{{0.2, 2.1, 0.1, -0.1},
                                     {0.0, 1.5, 0.3, 0.0},
                                     {-0.3, 2.3, -0.2, 0.4},
                                     {0.4, 2.0, 0.0, 0.5},
                                     {0.1, 2.6, 0.2, 0.1}};
    const std::vector<quat> exterior{{0.0, 3.5, 0.2, 0.0},
                                     {1.2, 2.0, 0.8, 0.0},
                                     {0.0, 0.4, 0.1, 0.0}};

    rep.pass = true;
    for (const auto& c : configs) {
        for (const auto& x : interior) {
            const quat lhs = g_terms
                                 ? borel_pompeiu_eval(st, c.v, c.u, c.f, c.g, x, cfg.bp_domain, opt)
                                 : cauchy_global_eval(st, c.v, c.u, c.f, c.g, x, cfg.bp_domain, opt);
            const quat want = c.f(x) + c.g(x);
            const double r = norm(lhs - want) / std::max(norm(want), 1e-12);
            push(rep, c.name + "-interior", x, r);
            rep.pass = rep.pass && r < cfg.tol.quad3d4d;
        }
        for (const auto& x : exterior) {
            const quat lhs = g_terms
                                 ? borel_pompeiu_eval(st, c.v, c.u, c.f, c.g, x, cfg.bp_domain, opt)
                                 : cauchy_global_eval(st, c.v, c.u, c.f, c.g, x, cfg.bp_domain, opt);
            const double r = norm(lhs);
            push(rep, c.name + "-exterior", x, r);
            rep.pass = rep.pass && r < cfg.tol.quad3d4d;
        }
    }
    rep.params = {{"domain", cfg.bp_domain}, {"tolerance", cfg.tol.quad3d4d}};
    return rep;
}

verification_report verify_cauchy_slice(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "cauchy-slice";
    rep.resolutions = {{"contour_nodes", cfg.res.contour_nodes}};
    rep.variants = variants_json(cfg);
    const quat v = e1;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    const contour_spec disc{0.0, 1.0, e1, cfg.res.contour_nodes};
    rep.pass = true;
    for (const auto& w : witness_catalog(v)) {
        if (!w.member) continue;
        for (int t = 0; t < 10; ++t) {
            quat q{u(rng), u(rng), u(rng), u(rng)};
            if (norm(vec(q)) < 0.05) q += 0.2 * e2;
            const double r = norm(cauchy_slice_eval(w.f, v, q, disc) - w.f(q));
            push(rep, w.name, q, r);
            rep.pass = rep.pass && r < cfg.tol.contour;
        }
    }
    rep.params = {{"v", "e1"}, {"tolerance", cfg.tol.contour}};
    return rep;
}

verification_report verify_representation(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "representation";
    rep.variants = variants_json(cfg);
    const quat v = e3;
    const field m = exp_weighted(monomial_field(2, one), v, -1.0);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.1, 0.6);
    rep.pass = true;
    for (int t = 0; t < 50; ++t) {
        const quat i = random_imag_unit(rng), iq = random_imag_unit(rng);
        const double x = u(rng) - 0.35, y = u(rng);
        const quat target = slice_compose({x, y, iq});
        const double r = norm(representation_v(m, v, x, y, i, iq) - m(target));
        push(rep, "member-q2", target, r);
        rep.pass = rep.pass && r < cfg.tol.contour;
    }
    rep.params = {{"tolerance", cfg.tol.contour}};
    return rep;
}

verification_report verify_splitting(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "splitting";
    rep.variants = variants_json(cfg);
    const quat v = e1;
    const field m = exp_weighted(monomial_field(2, one), v, -1.0);
    const auto p = splitting_v(m, e1, e2);
    const field Ff{p.F, true, {}}, Gf{p.G, true, {}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.1, 0.6);
    rep.pass = true;
    for (int t = 0; t < 30; ++t) {
        const double x = u(rng) - 0.35, y = u(rng);
        const slice_point sp{x, y, e1};
        const quat z = slice_compose(sp);
        const double rF = norm(cr_v_residual(Ff, sp, v));
        const double rG = norm(cr_v_residual(Gf, sp, v));
        push(rep, "vekua-F", z, rF);
        push(rep, "vekua-G", z, rG);
        rep.pass = rep.pass && rF < cfg.tol.fd && rG < cfg.tol.fd;

        const quat iq = random_imag_unit(rng);
        const quat target = slice_compose({x, y, iq});
        const double rt = norm(pv_apply(p, e1, e2, v, x, y, iq) - m(target));
        push(rep, "round-trip", target, rt);
        rep.pass = rep.pass && rt < cfg.tol.contour;
    }
    rep.params = {{"tolerance_vekua", cfg.tol.fd}, {"tolerance_round_trip", cfg.tol.contour}};
    return rep;
}

verification_report verify_covariance(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "covariance";
    rep.variants = variants_json(cfg);
    const auto br = gamma_bracket_from_string(cfg.gamma_bracket);
    const std::vector<std::pair<std::string, moebius_map>> maps{
        {"shifted", moebius_map(one, quat(2.0), one, one)},
        {"inverse", moebius_map(quat{}, one, one, quat{})},
        {"generic", moebius_map(quat(2.0), one, one, quat(3.0))},
    };
    const quat u1 = 0.6 * e1;
    const std::vector<std::pair<quat, quat>> weights{
        {e1, e2}, {0.3 * e2, 0.5 * e3}, {u1, -1.0 * u1}};
    const field f = monomial_field(2, one);
    const quat xc{0.3, 1.4, 0.2, -0.3};
    rep.pass = true;
    for (const auto& [name, T] : maps) {
        for (const auto& [u, v] : weights) {
            const double r = norm(covariance_residual(T, u, v, f, xc, br));
            push(rep, name, xc, r);
            rep.pass = rep.pass && r < cfg.tol.fd;
        }
        const double rc = norm(covariance_residual_classical(T, f, xc));
        push(rep, name + "-classical", xc, rc);
        rep.pass = rep.pass && rc < cfg.tol.fd;
    }
    rep.params = {{"tolerance", cfg.tol.fd}};
    return rep;
}

verification_report verify_morera(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "morera";
    rep.variants = variants_json(cfg);
    const quat v = e1;
    const double sign = cfg.morera_sign == "plus" ? +1.0 : -1.0;
    rep.pass = true;
    for (const auto& w : witness_catalog(v)) {
        const auto res = morera_membership(w.f, v, 20, sign, cfg.seed);
        push(rep, w.name, quat{}, res.max_integral);
        rep.pass = rep.pass && (w.member ? res.max_integral < 1e-8 : res.max_integral > 1e-2);
    }
    rep.params = {{"member_tolerance", 1e-8}, {"non_member_floor", 1e-2}};
    return rep;
}

verification_report verify_series(const suite_config& cfg) {
    verification_report rep;
    rep.identity = "series";
    rep.variants = variants_json(cfg);
    const quat v = e1;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-0.175, 0.175);
    rep.pass = true;
    for (const auto& w : witness_catalog(v)) {
        if (!w.member) continue;
        const auto s = series_fit(w.f, v, e2, 0.7, 16, cfg.res.contour_nodes);
        for (int t = 0; t < 10; ++t) {
            const quat q{u(rng), u(rng), u(rng), u(rng)};
            const double r = norm(series_eval(s, q) - w.f(q));
            push(rep, w.name + "-round-trip", q, r);
            rep.pass = rep.pass && r < 1e-8;
        }
    }
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        vseries s;
        s.v = quat{un(rng), un(rng), un(rng), un(rng)};
        for (int n = 0; n <= 6; ++n) s.coeffs.push_back(quat{un(rng), un(rng), un(rng), un(rng)});
        quat q = 0.4 * quat{un(rng), un(rng), un(rng), un(rng)};
        if (norm(q) < 1e-3) q = 0.2 * e1;
        const double r = norm(series_eval(s, q) - series_eval_cvk(s, q));
        push(rep, "form-agreement", q, r);
        rep.pass = rep.pass && r < cfg.tol.algebraic;
    }
    rep.params = {{"round_trip_tolerance", 1e-8}, {"form_tolerance", cfg.tol.algebraic}};
    return rep;
}

verification_report run_suite(const std::string& name, const suite_config& cfg) {
    if (name == "bp") return verify_bp(cfg, true);
    if (name == "cauchy-global") return verify_bp(cfg, false);
    if (name == "cauchy-slice") return verify_cauchy_slice(cfg);
    if (name == "representation") return verify_representation(cfg);
    if (name == "splitting") return verify_splitting(cfg);
    if (name == "covariance") return verify_covariance(cfg);
    if (name == "morera") return verify_morera(cfg);
    if (name == "series") return verify_series(cfg);
    throw error{"unknown suite: " + name};
}

const std::vector<std::string> all_suites{"bp",        "cauchy-global", "cauchy-slice",
                                          "representation", "splitting", "covariance",
                                          "morera",    "series"};

void scale_resolution(suite_config& cfg, const std::string& level) {
    const auto scale = [&](int n, double f) { return std::max(4, static_cast<int>(n * f)); };
    double f = 1.0;
    if (level == "low") f = 0.5;
    else if (level == "high") f = 2.0;
    else if (level != "default") throw config_parse{"resolution must be low|default|high"};
    cfg.res.b1 = scale(cfg.res.b1, f);
    cfg.res.b2 = scale(cfg.res.b2, f);
    cfg.res.b3 = scale(cfg.res.b3, f);
    cfg.res.v1 = scale(cfg.res.v1, f);
    cfg.res.v2 = scale(cfg.res.v2, f);
    cfg.res.v3 = scale(cfg.res.v3, f);
    cfg.res.vr = scale(cfg.res.vr, f);
    cfg.res.contour_nodes = scale(cfg.res.contour_nodes, f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suite for perturbed global operators"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --out etc. after the subcommand

    std::string config_path;
    std::string out_dir = "out";
    std::string resolution = "default";
    unsigned seed = 0;
    bool seed_set = false;
    app.add_option("--config", config_path, "suite config JSON (default: <out>/config.json)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--resolution", resolution, "low|default|high");
    app.add_option("--seed", seed, "override the witness RNG seed")
        ->each([&](const std::string&) { seed_set = true; });

    auto* cal = app.add_subcommand("calibrate", "select kernel/orientation/sign variants");
    std::string suite;
    auto* ver = app.add_subcommand("verify", "run one verification suite");
    ver->add_option("suite", suite, "bp|cauchy-global|cauchy-slice|representation|splitting|covariance|morera|series")
        ->required();
    auto* all = app.add_subcommand("all", "calibrate, then run every suite");

    CLI11_PARSE(app, argc, argv);

    if (config_path.empty())
        config_path = (std::filesystem::path(out_dir) / "config.json").string();

    try {
        std::filesystem::create_directories(out_dir);
        suite_config cfg;
        if (std::filesystem::exists(config_path)) cfg = load_config(config_path);
        if (seed_set) cfg.seed = seed;
        scale_resolution(cfg, resolution);

        std::vector<verification_report> reports;

        if (cal->parsed() || all->parsed()) {
            const auto outcome = calibrate(cfg);
            cfg = outcome.config;
            save_config(cfg, config_path);
            verification_report rep;
            rep.identity = "calibration";
            rep.variants = variants_json(cfg);
            rep.params = {{"kernel_residuals", outcome.kernel_residuals},
                          {"morera_residuals", outcome.morera_residuals},
                          {"gamma_residuals", outcome.gamma_residuals}};
            rep.pass = true;
            reports.push_back(rep);
            std::printf("calibrated: kernel=%s orientation=%+.0f morera=%s gamma=%s\n",
                        to_string(cfg.kernel).c_str(), cfg.orientation_sign,
                        cfg.morera_sign.c_str(), cfg.gamma_bracket.c_str());
        }

        if (ver->parsed() || all->parsed()) {
            if (!cfg.calibrated) throw uncalibrated{};
            const auto names = all->parsed() ? all_suites : std::vector<std::string>{suite};
            for (const auto& name : names) {
                auto rep = run_suite(name, cfg);
                std::printf("%-16s %s (max residual %.3e over %zu checks)\n", name.c_str(),
                            rep.pass ? "pass" : "FAIL", rep.max_residual(), rep.residuals.size());
                reports.push_back(std::move(rep));
            }
        }

        write_reports(reports, out_dir, cfg.seed);
        for (const auto& r : reports)
            if (!r.pass) return 1;
        return 0;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
