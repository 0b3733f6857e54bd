// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "srlab/calibrate.hpp"
#include "srlab/srlab.hpp"

using namespace srlab;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, double metric) {
    std::printf("%s  criterion %d: %s (worst %.3e)\n", ok ? "PASS" : "FAIL", n, what, metric);
    if (!ok) ++failures;
}

quat random_quat(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng), u(rng), u(rng)};
}

quat random_imag_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    quat d{0.0, u(rng), u(rng), u(rng)};
    if (norm(d) < 1e-3) d = e1;
    return d / norm(d);
}

const structural_set& st = structural_set::standard();

void criterion_bp() {
    const auto t0 = std::chrono::steady_clock::now();
    const domain_spec dom{2.0 * e1, 1.0};
    bp_options opt; // default resolution

    struct config {
        field f, g;
        quat v, u;
    };
    const quat a{0.3, -0.5, 0.8, 0.2};
    std::vector<config> configs;
    configs.push_back({monomial_field(2, one), const_field(quat{}), quat{}, quat{}});
    configs.push_back({exp_weighted(monomial_field(1, one), e1, -1.0),
                       exp_weighted(monomial_field(1, a), 0.3 * e2, -1.0), e1, 0.3 * e2});
    configs.push_back({conj_field(), exp_weighted(const_field(a), e3, -1.0), quat{}, e3});

    const std::vector<quat> interior{{0.2, 2.1, 0.1, -0.1},
                                     {0.0, 1.5, 0.3, 0.0},
                                     {-0.3, 2.3, -0.2, 0.4},
                                     {0.4, 2.0, 0.0, 0.5},
                                     {0.1, 2.6, 0.2, 0.1}};
    const std::vector<quat> exterior{{0.0, 3.5, 0.2, 0.0},
                                     {1.2, 2.0, 0.8, 0.0},
                                     {0.0, 0.4, 0.1, 0.0}};

    double worst = 0.0;
    for (const auto& c : configs) {
        for (const auto& x : interior) {
            const quat lhs = borel_pompeiu_eval(st, c.v, c.u, c.f, c.g, x, dom, opt);
            const quat want = c.f(x) + c.g(x);
            worst = std::max(worst, norm(lhs - want) / std::max(norm(want), 1e-12));
        }
        for (const auto& x : exterior)
            worst = std::max(worst,
                             norm(borel_pompeiu_eval(st, c.v, c.u, c.f, c.g, x, dom, opt)));
    }

    // resolution doubling on the weighted config at one interior point
    bp_options dbl = opt;
    dbl.res.b1 *= 2; dbl.res.b2 *= 2; dbl.res.b3 *= 2;
    dbl.res.v1 *= 2; dbl.res.v2 *= 2; dbl.res.v3 *= 2; dbl.res.vr *= 2;
    const auto& c1 = configs[1];
    const quat base = borel_pompeiu_eval(st, c1.v, c1.u, c1.f, c1.g, interior[0], dom, opt);
    const quat fine = borel_pompeiu_eval(st, c1.v, c1.u, c1.f, c1.g, interior[0], dom, dbl);
    const double drift = norm(fine - base);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = worst < 2e-2 && drift < 5e-3 && secs < 300.0;
    std::printf("        bp: worst residual %.3e, doubling drift %.3e, %.1f s\n", worst, drift,
                secs);
    report(1, "Borel-Pompeiu reproduction", ok, worst);
}

void criterion_slice_cauchy() {
    const quat v = e1;
    std::mt19937_64 rng(101);
    double worst = 0.0;
    const contour_spec disc{0.0, 1.0, e1, 256};
    for (const auto& w : witness_catalog(v)) {
        if (!w.member) continue;
        for (int t = 0; t < 10; ++t) {
            quat q = random_quat(rng, -0.4, 0.4);
            if (norm(vec(q)) < 0.05) q += 0.2 * e2;
            worst = std::max(worst, norm(cauchy_slice_eval(w.f, v, q, disc) - w.f(q)));
        }
    }
    // geometric decay N = 32 -> 256 on a weighted member
    const field m = exp_weighted(monomial_field(2, one), v, -1.0);
    const quat q = 0.3 * one + 0.4 * e1;
    double prev = 1e300;
    bool decay = true;
    for (int n : {32, 64, 128, 256}) {
        const double err = norm(cauchy_slice_eval(m, v, q, {0.0, 1.0, e1, n}) - m(q));
        decay = decay && (err < 0.5 * prev);
        prev = std::max(err, 1e-16);
    }
    report(2, "slice Cauchy formula", worst < 1e-9 && decay, worst);
}

void criterion_gexp() {
    std::mt19937_64 rng(20260826);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
        const quat v = random_quat(rng, -1.0, 1.0);
        const quat x = random_quat(rng, -1.0, 1.0);
        std::uniform_int_distribution<int> deg(0, 3);
        const field f = monomial_field(deg(rng), random_quat(rng, -1.0, 1.0));
        const field ef = exp_weighted(f, v, +1.0);
        const double scale = std::exp(-dot(x, v));
        worst = std::max(worst, norm(Gv_apply(st, v, f, x) - scale * G_apply(st, ef, x)));
        worst = std::max(worst, norm(Grv_apply(st, v, f, x) - scale * Gr_apply(st, ef, x)));
    }
    report(3, "G-Exp operator identity", worst < 5e-6, worst);
}

void criterion_kernel_equiv() {
    const quat v = e1;
    const domain_spec dom{quat{}, 0.9};
    bool ok = true;
    double worst_member = 0.0;
    for (const auto& w : witness_catalog(v)) {
        const auto rep = v_regularity_report(w.f, v, dom, 200);
        if (w.member) {
            ok = ok && rep.max_cr_residual < 1e-6 && rep.max_gv_residual < 1e-6;
            worst_member = std::max({worst_member, rep.max_cr_residual, rep.max_gv_residual});
        } else {
            ok = ok && rep.max_cr_residual > 1e-2 && rep.max_gv_residual > 1e-2;
        }
    }
    report(4, "SR_v = Ker G_v equivalence", ok, worst_member);
}

void criterion_representation() {
    const quat v = e3;
    const field m = exp_weighted(monomial_field(2, one), v, -1.0);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.1, 0.6);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const quat i = random_imag_unit(rng), iq = random_imag_unit(rng);
        const double x = u(rng) - 0.35, y = u(rng);
        worst = std::max(worst,
                         norm(representation_v(m, v, x, y, i, iq) - m(slice_compose({x, y, iq}))));
    }

    // splitting round trips and Vekua residuals
    const auto p = splitting_v(m, e1, e2);
    double vekua = 0.0, round_trip = 0.0;
    const field Ff{p.F, true, {}}, Gf{p.G, true, {}};
    for (int t = 0; t < 20; ++t) {
        const quat iq = random_imag_unit(rng);
        const double x = u(rng) - 0.35, y = u(rng);
        round_trip = std::max(round_trip,
                              norm(pv_apply(p, e1, e2, v, x, y, iq) - m(slice_compose({x, y, iq}))));
        const slice_point sp{x, y, e1};
        vekua = std::max({vekua, norm(cr_v_residual(Ff, sp, v)), norm(cr_v_residual(Gf, sp, v))});
    }
    field rebuilt{[&](const quat& q) {
        const auto sp = slice_decompose(q);
        return pv_apply(p, e1, e2, v, sp.x, sp.y, sp.i);
    }, true, {}};
    const auto p2 = splitting_v(rebuilt, e1, e2);
    const quat z = 0.2 * one + 0.5 * e1;
    round_trip = std::max({round_trip, norm(p2.F(z) - p.F(z)), norm(p2.G(z) - p.G(z))});

    report(5, "representation / splitting", worst < 1e-9 && round_trip < 1e-9 && vekua < 1e-6,
           std::max(worst, round_trip));
}

void criterion_covariance() {
    const std::vector<moebius_map> maps{
        moebius_map(one, quat(2.0), one, one),
        moebius_map(quat{}, one, one, quat{}),
        moebius_map(quat(2.0), one, one, quat(3.0)),
    };
    const quat u1 = 0.6 * e1;
    const std::vector<std::pair<quat, quat>> weights{
        {e1, e2}, {0.3 * e2, 0.5 * e3}, {u1, -1.0 * u1}};
    const field f = monomial_field(2, one);
    const quat xc{0.3, 1.4, 0.2, -0.3};
    double worst = 0.0;
    for (const auto& T : maps)
        for (const auto& [u, v] : weights)
            worst = std::max(worst, norm(covariance_residual(T, u, v, f, xc, gamma_bracket::full)));
    // v = -u must also match the unperturbed covariance path
    for (const auto& T : maps)
        worst = std::max(worst, norm(covariance_residual_classical(T, f, xc)));
    report(6, "conformal covariance", worst < 5e-6, worst);
}

void criterion_series() {
    const quat v = e1;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-0.175, 0.175);
    double round_trip = 0.0;
    for (const auto& w : witness_catalog(v)) {
        if (!w.member) continue;
        const auto s = series_fit(w.f, v, e2, 0.7, 16);
        for (int t = 0; t < 10; ++t) {
            const quat q{u(rng), u(rng), u(rng), u(rng)};
            round_trip = std::max(round_trip, norm(series_eval(s, q) - w.f(q)));
        }
    }

    double forms = 0.0;
    for (int t = 0; t < 20; ++t) {
        vseries s;
        s.v = random_quat(rng, -1.0, 1.0);
        for (int n = 0; n <= 6; ++n) s.coeffs.push_back(random_quat(rng, -1.0, 1.0));
        quat q = random_quat(rng, -0.4, 0.4);
        if (norm(q) < 1e-3) q = 0.2 * e1;
        forms = std::max(forms, norm(series_eval(s, q) - series_eval_cvk(s, q)));
    }

    // *_0 vs classical * product at the coefficient level (exact)
    const vseries p{quat{}, {one, e1, e2}}, r{quat{}, {e3, one}};
    const auto pr = star_v(p, r);
    bool conv_exact = pr.coeffs.size() == 4;
    const quat want[4] = {e3, one + e1 * e3, e1 + e2 * e3, e2};
    for (int k = 0; conv_exact && k < 4; ++k)
        conv_exact = norm(pr.coeffs[static_cast<size_t>(k)] - want[k]) == 0.0;

    report(7, "series machinery", round_trip < 1e-8 && forms < 1e-12 && conv_exact,
           std::max(round_trip, forms));
}

void criterion_morera() {
    const quat v = e1;
    bool ok = true;
    double worst_member = 0.0;
    for (const auto& w : witness_catalog(v)) {
        const auto res = morera_membership(w.f, v, 20, +1.0);
        if (w.member) {
            ok = ok && res.max_integral < 1e-8;
            worst_member = std::max(worst_member, res.max_integral);
        } else {
            ok = ok && res.max_integral > 1e-2;
        }
    }
    report(8, "Morera membership", ok, worst_member);
}

void criterion_calibration() {
    const auto first = calibrate(suite_config{});
    const auto second = calibrate(suite_config{});
    bool same = first.config.kernel == second.config.kernel &&
                first.config.orientation_sign == second.config.orientation_sign &&
                first.config.morera_sign == second.config.morera_sign &&
                first.config.gamma_bracket == second.config.gamma_bracket;
    bool expected = first.config.kernel == kernel_variant::derived &&
                    first.config.orientation_sign == -1.0 &&
                    first.config.morera_sign == "plus" && first.config.gamma_bracket == "full";

    // selected candidates beat every rival by >= 2 orders of magnitude
    const std::string sel = to_string(first.config.kernel) + "/s=-1";
    const double best = first.kernel_residuals.at(sel);
    double rival = 1e300;
    for (const auto& [key, r] : first.kernel_residuals)
        if (key != sel) rival = std::min(rival, r);
    double margin = rival / best;
    margin = std::min(margin, first.morera_residuals.at("minus") /
                                  std::max(first.morera_residuals.at("plus"), 1e-300));
    margin = std::min(margin, first.gamma_residuals.at("bold-inside") /
                                  std::max(first.gamma_residuals.at("full"), 1e-300));
    report(9, "calibration determinism", same && expected && margin >= 100.0, margin);
}

} // namespace

int main() {
    criterion_bp();
    criterion_slice_cauchy();
    criterion_gexp();
    criterion_kernel_equiv();
    criterion_representation();
    criterion_covariance();
    criterion_series();
    criterion_morera();
    criterion_calibration();
    return failures == 0 ? 0 : 1;
}
