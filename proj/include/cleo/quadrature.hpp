#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "cleo/errors.hpp"

namespace cleo {

struct quad_options {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_depth = 55;
    std::int64_t max_evals = 8'000'000;
};

struct quad_result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evals = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK DQK15 nodes and weights).
struct gk15_rule {
    static constexpr std::array<double, 8> xgk = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr std::array<double, 8> wgk = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr std::array<double, 4> wg = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

template <class F>
std::pair<double, double> gk15_panel(F& f, double a, double b) {
    const double hlgth = 0.5 * (b - a);
    const double centr = 0.5 * (a + b);

    const double fc = f(centr);
    double resg = fc * gk15_rule::wg[3];
    double resk = fc * gk15_rule::wgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> fv1{}, fv2{};
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * gk15_rule::xgk[j];
        fv1[j] = f(centr - absc);
        fv2[j] = f(centr + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += gk15_rule::wg[j / 2] * fsum;
        resk += gk15_rule::wgk[j] * fsum;
        resabs += gk15_rule::wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = gk15_rule::wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += gk15_rule::wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {result, err};
}

template <class F>
struct adapt_ctx {
    F& f;
    std::int64_t evals = 0;
    std::int64_t max_evals;
    bool budget_ok = true;

    double call_panel(double a, double b, double& err) {
        evals += 15;
        if (evals > max_evals) budget_ok = false;
        auto [v, e] = gk15_panel(f, a, b);
        err = e;
        return v;
    }
};

template <class F>
void adapt_recurse(adapt_ctx<F>& ctx, double a, double b, double val, double err, double tol,
                   int depth, double& total, double& total_err) {
    if (err <= tol || depth <= 0 || !ctx.budget_ok) {
        total += val;
        total_err += err;
        return;
    }
    const double m = 0.5 * (a + b);
    double el, er;
    const double vl = ctx.call_panel(a, m, el);
    const double vr = ctx.call_panel(m, b, er);
    adapt_recurse(ctx, a, m, vl, el, 0.5 * tol, depth - 1, total, total_err);
    adapt_recurse(ctx, m, b, vr, er, 0.5 * tol, depth - 1, total, total_err);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class F>
quad_result integrate(F&& f, double a, double b, quad_options opt = {}) {
    detail::adapt_ctx<F> ctx{f, 0, opt.max_evals};
    double err0 = 0.0;
    const double v0 = ctx.call_panel(a, b, err0);

    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(v0));
    double total = 0.0, total_err = 0.0;
    detail::adapt_recurse(ctx, a, b, v0, err0, tol, opt.max_depth, total, total_err);

    // One refinement pass when the first whole-interval estimate was poor.
    if (std::abs(total) > 0 && std::abs(total - v0) > 0.5 * std::abs(total)) {
        tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        total = total_err = 0.0;
        detail::adapt_recurse(ctx, a, b, v0, err0, tol, opt.max_depth, total, total_err);
    }

    quad_result r;
    r.value = total;
    r.error_estimate = total_err;
    r.evals = ctx.evals;
    r.converged = ctx.budget_ok &&
                  total_err <= 10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) + 1e-300;
    return r;
}

} // namespace cleo
