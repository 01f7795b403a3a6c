#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cleo/algebra.hpp"
#include "cleo/coherent_states.hpp"
#include "cleo/special_functions.hpp"

namespace cleo {

/// Ratio Phi^{mu_num}_{mu_den}(y) = N_{mu_num}(|z|) / N_{mu_den}(|z|) of
/// sector normalization factors at the same y.
inline double phi_ratio(const algebra_params& p, int mu_num, int mu_den, double y) {
    if (y < 0.0) throw invalid_input("phi_ratio: y must be >= 0");
    if (mu_num < 0 || mu_num >= p.lambda() || mu_den < 0 || mu_den >= p.lambda())
        throw invalid_input("phi_ratio: sector indices must lie in [0, lambda)");
    return cs_norm_factor(p, mu_num, y) / cs_norm_factor(p, mu_den, y);
}

namespace detail {

inline double beta_bar_product(const algebra_params& p, int from, int to) {
    double prod = 1.0;
    for (int nu = from; nu <= to; ++nu) prod *= p.beta_bar(nu);
    return prod;
}

} // namespace detail

/// Mandel parameter Q = (<N^2> - <N>^2 - <N>)/<N> in |z; mu> from the
/// closed-form expressions, one branch per mu = 0, mu = 1 and mu >= 2.
/// The |z| -> 0 limits are lambda-1 (mu = 0) and -1 (mu >= 1).
inline double mandel_q_closed(const algebra_params& p, std::complex<double> z, int mu) {
    const int lambda = p.lambda();
    if (mu < 0 || mu >= lambda) throw invalid_input("mandel_q_closed: need 0 <= mu < lambda");
    const double y = std::norm(z) / std::pow(static_cast<double>(lambda), lambda - 2);
    const double inv_lambda = 1.0 / lambda;

    if (mu == 0) {
        const double bl1 = p.beta_bar(lambda - 1);
        const double prod_inv = 1.0 / detail::beta_bar_product(p, 1, lambda - 1);
        const double phi_l1_0 = phi_ratio(p, lambda - 1, 0, y);
        const double phi_l2_l1 = phi_ratio(p, lambda - 2, lambda - 1, y);
        return lambda * (1.0 - bl1 - prod_inv * y * phi_l1_0 + bl1 * phi_l2_l1) - 1.0;
    }
    if (mu == 1) {
        const double b1 = p.beta_bar(1);
        const double phi01 = phi_ratio(p, 0, 1, y);
        const double prod_inv = 1.0 / detail::beta_bar_product(p, 2, lambda - 1);
        const double phi_l1_1 = phi_ratio(p, lambda - 1, 1, y);
        const double num = (b1 - inv_lambda) * (1.0 + lambda * b1 * phi01) -
                           lambda * b1 * b1 * phi01 * phi01 + lambda * prod_inv * y * phi_l1_1;
        return num / (inv_lambda - b1 + b1 * phi01);
    }
    const double bm = p.beta_bar(mu);
    const double bm1 = p.beta_bar(mu - 1);
    const double phi_m1_m = phi_ratio(p, mu - 1, mu, y);
    const double phi_m2_m = phi_ratio(p, mu - 2, mu, y);
    const double num = bm - mu * inv_lambda + lambda * bm * (bm - bm1 - inv_lambda) * phi_m1_m -
                       lambda * bm * bm * phi_m1_m * phi_m1_m + lambda * bm1 * bm * phi_m2_m;
    return num / (mu * inv_lambda - bm + bm * phi_m1_m);
}

/// Ground-truth Mandel parameter from the coefficient series. Empty when
/// <N> = 0 (the z = 0, mu = 0 state), where the ratio is 0/0.
inline std::optional<double> mandel_q_oracle(const coherent_state& st, const algebra_params& p) {
    detail::compensated_sum sn, sn2;
    for (int k = 0; k <= st.k_max; ++k) {
        const long double w = std::norm(st.coeffs[static_cast<std::size_t>(k)]);
        const long double n = static_cast<long double>(k) * p.lambda() + st.mu;
        sn.add(w * n);
        sn2.add(w * n * n);
    }
    const long double mean = sn.value();
    if (mean == 0.0L) return std::nullopt;
    return static_cast<double>((sn2.value() - mean * mean - mean) / mean);
}

/// <H0> in |z; mu> from the closed two-branch form.
inline double h0_mean_closed(const algebra_params& p, std::complex<double> z, int mu) {
    const int lambda = p.lambda();
    const double y = std::norm(z) / std::pow(static_cast<double>(lambda), lambda - 2);
    if (mu == 0) {
        const double prod_inv = 1.0 / detail::beta_bar_product(p, 1, lambda - 1);
        return lambda * (0.5 * p.beta_bar(1) + prod_inv * y * phi_ratio(p, lambda - 1, 0, y));
    }
    return lambda * (0.5 * (p.beta_bar(mu + 1) - p.beta_bar(mu)) +
                     p.beta_bar(mu) * phi_ratio(p, mu - 1, mu, y));
}

/// <H0^2> in |z; 0>.
inline double h0_sq_mean_closed(const algebra_params& p, std::complex<double> z, int mu = 0) {
    if (mu != 0) throw unsupported_sector(mu);
    const int lambda = p.lambda();
    const double y = std::norm(z) / std::pow(static_cast<double>(lambda), lambda - 2);
    const double b1 = p.beta_bar(1);
    const double bl1 = p.beta_bar(lambda - 1);
    const double prod_inv = 1.0 / detail::beta_bar_product(p, 1, lambda - 1);
    return lambda * lambda *
           (0.25 * b1 * b1 + prod_inv * y *
                                 ((1.0 + b1 - bl1) * phi_ratio(p, lambda - 1, 0, y) +
                                  bl1 * phi_ratio(p, lambda - 2, 0, y)));
}

struct dispersion_result {
    double disp_x;
    double disp_p;
    double h0_mean;
};

/// Quadrature dispersions <(Dx)^2>, <(Dp)^2> in |z; mu>. The z-dependent
/// shift only survives at lambda = 2, where a^2 acts inside the sector.
inline dispersion_result dispersions(const algebra_params& p, std::complex<double> z, int mu) {
    const double h0 = h0_mean_closed(p, z, mu);
    const double shift = (p.lambda() == 2) ? 2.0 * z.real() : 0.0;
    return {h0 + shift, h0 - shift, h0};
}

/// Vacuum-state reference values of the sector: |mu> plays the vacuum role.
struct vacuum_reference {
    int mu;
    double disp0;   // <(Dx)^2>_0 = <(Dp)^2>_0 = gamma_mu + mu + 1/2
    double disp0_4; // <(Dx)^4>_0, defined for mu = 0
};

inline vacuum_reference vacuum_ref(const algebra_params& p, int mu) {
    vacuum_reference v;
    v.mu = mu;
    v.disp0 = p.gamma(mu) + mu + 0.5;
    v.disp0_4 = (mu == 0) ? 0.25 * p.lambda() * p.lambda() * p.beta_bar(1) *
                                (p.beta_bar(1) + p.beta_bar(2))
                          : std::numeric_limits<double>::quiet_NaN();
    return v;
}

/// Lower bound of the uncertainty product in F_mu:
/// (lambda^2/4)(bbar_{mu+1} - bbar_mu)^2 = (1 + alpha_mu)^2 / 4.
inline double uncertainty_bound(const algebra_params& p, int mu) {
    const double d = p.beta_bar(mu + 1) - p.beta_bar(mu);
    return 0.25 * p.lambda() * p.lambda() * d * d;
}

struct squeeze_result {
    double x_ratio; // X = <(Dx)^2> / <(Dx)^2>_0
    double p_ratio; // P = <(Dp)^2> / <(Dp)^2>_0
};

/// Squeezing ratios against the sector vacuum. mu = 0 is the only sector
/// whose vacuum saturates the uncertainty bound; other sectors are allowed
/// but the ratios then compare against a non-minimal reference.
inline squeeze_result squeeze_ratios(const algebra_params& p, std::complex<double> z, int mu) {
    const auto d = dispersions(p, z, mu);
    const double d0 = vacuum_ref(p, mu).disp0;
    return {d.disp_x / d0, d.disp_p / d0};
}

struct fourth_order_result {
    double x4; // <(Dx)^4>
    double p4; // <(Dp)^4>
    double y_ratio;
    double q4_ratio;
    double h0sq_mean;
};

/// Fourth-order quadrature moments in |z; 0>. The sign rule: the z-linear
/// lambda = 2 term enters <(Dx)^4> with + and <(Dp)^4> with -, while the
/// lambda = 4 term carries no sign flip.
inline fourth_order_result fourth_order(const algebra_params& p, std::complex<double> z, int mu = 0) {
    if (mu != 0) throw unsupported_sector(mu);
    const int lambda = p.lambda();
    const double h0 = h0_mean_closed(p, z, 0);
    const double h0sq = h0_sq_mean_closed(p, z, 0);
    const double b1 = p.beta_bar(1);
    const double b2 = p.beta_bar(2);
    const double bl1 = p.beta_bar(lambda - 1);

    double base = 1.5 * h0sq - 0.25 * lambda * (1.0 + b1 - b2 - bl1) * h0 +
                  0.125 * lambda * lambda * b1 * (1.0 + b2 - bl1);
    double x4 = base, p4 = base;
    if (lambda == 2) {
        const double zz = 2.0 * (z * z).real(); // z^2 + (z*)^2
        const double zr = 2.0 * z.real();       // z + z*
        x4 += zz + 2.0 * zr * (h0 + 1.0);
        p4 += zz - 2.0 * zr * (h0 + 1.0);
    }
    if (lambda == 4) {
        x4 += 2.0 * z.real();
        p4 += 2.0 * z.real();
    }
    const double d04 = vacuum_ref(p, 0).disp0_4;
    return {x4, p4, x4 / d04, p4 / d04, h0sq};
}

// ---------------------------------------------------------------------------
// Matrix/series oracles. These recompute every quantity from the operator
// action on the truncated space and are the regression baseline for the
// closed forms above.
// ---------------------------------------------------------------------------

inline int oracle_dim(const coherent_state& st, const algebra_params& p) {
    return p.lambda() * (st.k_max + 2) + 9;
}

inline double n_mean_oracle(const coherent_state& st, const algebra_params& p) {
    detail::compensated_sum s;
    for (int k = 0; k <= st.k_max; ++k)
        s.add(std::norm(st.coeffs[static_cast<std::size_t>(k)]) *
              (static_cast<long double>(k) * p.lambda() + st.mu));
    return static_cast<double>(s.value());
}

inline double n_var_oracle(const coherent_state& st, const algebra_params& p) {
    detail::compensated_sum sn, sn2;
    for (int k = 0; k <= st.k_max; ++k) {
        const long double w = std::norm(st.coeffs[static_cast<std::size_t>(k)]);
        const long double n = static_cast<long double>(k) * p.lambda() + st.mu;
        sn.add(w * n);
        sn2.add(w * n * n);
    }
    return static_cast<double>(sn2.value() - sn.value() * sn.value());
}

inline double h0_mean_oracle(const coherent_state& st, const algebra_params& p) {
    detail::compensated_sum s;
    for (int k = 0; k <= st.k_max; ++k)
        s.add(std::norm(st.coeffs[static_cast<std::size_t>(k)]) *
              static_cast<long double>(energy(p, static_cast<long>(k) * p.lambda() + st.mu)));
    return static_cast<double>(s.value());
}

inline double h0_sq_mean_oracle(const coherent_state& st, const algebra_params& p) {
    detail::compensated_sum s;
    for (int k = 0; k <= st.k_max; ++k) {
        const long double e = energy(p, static_cast<long>(k) * p.lambda() + st.mu);
        s.add(std::norm(st.coeffs[static_cast<std::size_t>(k)]) * e * e);
    }
    return static_cast<double>(s.value());
}

namespace detail {

struct quadrature_matrices {
    fock_matrix x;
    fock_matrix p;
};

inline quadrature_matrices build_quadratures(const algebra_params& par, int dim) {
    const auto ops = build_operators(par, dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    fock_matrix x = cplx(inv_sqrt2) * (ops.raise + ops.lower);
    fock_matrix p = cplx(0.0, inv_sqrt2) * (ops.raise - ops.lower);
    x.set_label("x");
    p.set_label("p");
    return {std::move(x), std::move(p)};
}

inline cplx vec_dot(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// <(M - <M>)^2> and <(M - <M>)^4> for a Hermitian matrix.
inline std::pair<double, double> central_moments24(const fock_matrix& m, std::span<const cplx> v) {
    const auto mv = m.apply(v);
    const double mean = vec_dot(v, mv).real();
    std::vector<cplx> w(mv.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = mv[i] - mean * v[i];
    const double m2 = vec_dot(w, w).real();
    const auto mw = m.apply(w);
    std::vector<cplx> w2(mw.size());
    for (std::size_t i = 0; i < w2.size(); ++i) w2[i] = mw[i] - mean * w[i];
    const double m4 = vec_dot(w2, w2).real();
    return {m2, m4};
}

} // namespace detail

inline dispersion_result dispersions_oracle(const coherent_state& st, const algebra_params& p) {
    const int dim = oracle_dim(st, p);
    const auto q = detail::build_quadratures(p, dim);
    const auto v = to_fock_vector(st, p, dim);
    const auto [dx, x4] = detail::central_moments24(q.x, v);
    const auto [dp, p4] = detail::central_moments24(q.p, v);
    (void)x4;
    (void)p4;
    return {dx, dp, h0_mean_oracle(st, p)};
}

inline fourth_order_result fourth_order_oracle(const coherent_state& st, const algebra_params& p) {
    if (st.mu != 0) throw unsupported_sector(st.mu);
    const int dim = oracle_dim(st, p);
    const auto q = detail::build_quadratures(p, dim);
    const auto v = to_fock_vector(st, p, dim);
    const auto [dx, x4] = detail::central_moments24(q.x, v);
    const auto [dp, p4] = detail::central_moments24(q.p, v);
    (void)dx;
    (void)dp;
    const double d04 = vacuum_ref(p, 0).disp0_4;
    return {x4, p4, x4 / d04, p4 / d04, h0_sq_mean_oracle(st, p)};
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct observable_report {
    enum class eval_route { closed_form, oracle };

    std::complex<double> z;
    int mu = 0;
    double n_mean = 0.0;
    double n_var = 0.0;
    double mandel_q = std::numeric_limits<double>::quiet_NaN();
    double h0_mean = 0.0;
    double h0sq_mean = std::numeric_limits<double>::quiet_NaN(); // mu = 0 only
    double disp_x = 0.0;
    double disp_p = 0.0;
    double x_ratio = 0.0;
    double p_ratio = 0.0;
    double x4 = std::numeric_limits<double>::quiet_NaN(); // mu = 0 only
    double p4 = std::numeric_limits<double>::quiet_NaN();
    double y_ratio = std::numeric_limits<double>::quiet_NaN();
    double q4_ratio = std::numeric_limits<double>::quiet_NaN();
    eval_route route = eval_route::closed_form;
};

inline observable_report report_closed(const algebra_params& p, std::complex<double> z, int mu) {
    observable_report r;
    r.z = z;
    r.mu = mu;
    r.route = observable_report::eval_route::closed_form;
    r.h0_mean = h0_mean_closed(p, z, mu);
    r.n_mean = r.h0_mean - p.gamma(mu) - 0.5;
    r.mandel_q = mandel_q_closed(p, z, mu);
    r.n_var = r.n_mean * (r.mandel_q + 1.0);
    const auto d = dispersions(p, z, mu);
    r.disp_x = d.disp_x;
    r.disp_p = d.disp_p;
    const auto s = squeeze_ratios(p, z, mu);
    r.x_ratio = s.x_ratio;
    r.p_ratio = s.p_ratio;
    if (mu == 0) {
        const auto f4 = fourth_order(p, z, 0);
        r.h0sq_mean = f4.h0sq_mean;
        r.x4 = f4.x4;
        r.p4 = f4.p4;
        r.y_ratio = f4.y_ratio;
        r.q4_ratio = f4.q4_ratio;
    }
    return r;
}

inline observable_report report_oracle(const algebra_params& p, const coherent_state& st) {
    observable_report r;
    r.z = st.z;
    r.mu = st.mu;
    r.route = observable_report::eval_route::oracle;
    r.n_mean = n_mean_oracle(st, p);
    r.n_var = n_var_oracle(st, p);
    const auto q = mandel_q_oracle(st, p);
    r.mandel_q = q ? *q : std::numeric_limits<double>::quiet_NaN();
    r.h0_mean = h0_mean_oracle(st, p);
    const auto d = dispersions_oracle(st, p);
    r.disp_x = d.disp_x;
    r.disp_p = d.disp_p;
    const double d0 = vacuum_ref(p, st.mu).disp0;
    r.x_ratio = r.disp_x / d0;
    r.p_ratio = r.disp_p / d0;
    if (st.mu == 0) {
        const auto f4 = fourth_order_oracle(st, p);
        r.h0sq_mean = f4.h0sq_mean;
        r.x4 = f4.x4;
        r.p4 = f4.p4;
        r.y_ratio = f4.y_ratio;
        r.q4_ratio = f4.q4_ratio;
    }
    return r;
}

struct sweep_point {
    observable_report closed;
    observable_report oracle;
    double q_disagreement = std::numeric_limits<double>::quiet_NaN();
    std::string error; // empty on success
};

/// Evaluates both routes on every z of the path. Per-point failures are
/// recorded and do not abort the sweep.
inline std::vector<sweep_point> sweep(const algebra_params& p, int mu,
                                      std::span<const std::complex<double>> z_path) {
    std::vector<sweep_point> out;
    out.reserve(z_path.size());
    for (const auto z : z_path) {
        sweep_point pt;
        try {
            pt.closed = report_closed(p, z, mu);
            const auto st = make_coherent_state(p, z, mu);
            pt.oracle = report_oracle(p, st);
            if (!std::isnan(pt.oracle.mandel_q))
                pt.q_disagreement = std::abs(pt.closed.mandel_q - pt.oracle.mandel_q);
        } catch (const error& e) {
            pt.error = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace cleo
