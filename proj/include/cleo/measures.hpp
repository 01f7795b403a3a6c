#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "cleo/algebra.hpp"
#include "cleo/coherent_states.hpp"
#include "cleo/quadrature.hpp"
#include "cleo/special_functions.hpp"

namespace cleo {

/// Families of the radial density h_mu(y) of the unity-resolution measure.
/// The closed forms cover lambda = 2 with any admissible alpha (modified
/// Bessel K) and arbitrary lambda with alpha = 0 (stretched exponential).
/// The general case is an inverse Mellin transform (a Meijer G-function):
/// representable here, deliberately not evaluable.
enum class weight_family { lambda2_any_alpha, alpha_zero_any_lambda, general_meijer_g };

struct weight_spec {
    weight_family family;
    algebra_params params;
    int mu;

    /// Picks the evaluable family when one applies.
    static weight_spec select(const algebra_params& p, int mu) {
        if (p.lambda() == 2) return {weight_family::lambda2_any_alpha, p, mu};
        if (p.alpha_is_zero()) return {weight_family::alpha_zero_any_lambda, p, mu};
        return {weight_family::general_meijer_g, p, mu};
    }
};

/// Bessel-K order of the lambda = 2 density: nu = (alpha_0 - 1 + 2 mu)/2.
inline double lambda2_bessel_order(const algebra_params& p, int mu) {
    return p.beta_bar(1) - 1.0 + mu;
}

/// Radial density h_mu(y), y > 0. Normalized so that its k-th moment equals
/// moment_rhs(params, mu, k).
inline double weight_density(const weight_spec& spec, double y) {
    if (!(y > 0.0)) throw invalid_input("weight_density: y must be > 0");
    const auto& p = spec.params;
    const int lambda = p.lambda();
    const int mu = spec.mu;
    switch (spec.family) {
    case weight_family::alpha_zero_any_lambda: {
        const double mu_fact = std::tgamma(static_cast<double>(mu) + 1.0);
        return std::pow(static_cast<double>(lambda), mu - lambda + 2) / (M_PI * mu_fact) *
               std::pow(y, (mu - lambda + 1.0) / lambda) *
               std::exp(-lambda * std::pow(y, 1.0 / lambda));
    }
    case weight_family::lambda2_any_alpha: {
        const double nu = lambda2_bessel_order(p, mu);
        const double r = std::sqrt(y);
        return (2.0 / M_PI) * std::pow(y, 0.5 * nu) * bessel_k(nu, 2.0 * r) / std::tgamma(nu + 1.0);
    }
    case weight_family::general_meijer_g:
        throw not_supported("weight_density: general Meijer-G family is not evaluable");
    }
    throw invalid_input("weight_density: bad family");
}

/// Right-hand side of the moment condition on h_mu:
///   integral y^k h_mu(y) dy = k!/(pi lambda^{lambda-2})
///                             prod_{nu<=mu} (bbar_nu+1)_k prod_{nu'>mu} (bbar_nu')_k,
/// evaluated in log space.
inline double moment_rhs(const algebra_params& p, int mu, int k) {
    if (k < 0) throw out_of_range_error("moment_rhs: k must be >= 0");
    constexpr long double pi_ld = 3.141592653589793238462643383279503L;
    const auto b = cs_denominator_params(p, mu);
    long double lg = std::lgamma(static_cast<long double>(k) + 1.0L) - std::log(pi_ld) -
                     (p.lambda() - 2) * std::log(static_cast<long double>(p.lambda()));
    for (double bi : b) lg += static_cast<long double>(log_pochhammer(bi, k));
    return static_cast<double>(std::exp(lg));
}

namespace detail {

// Moment integral of an evaluable family, in a substituted variable that
// removes the algebraic endpoint singularity:
//   alpha = 0 family:  y = u^lambda   (integrand ~ u^(lambda k + mu) e^{-lambda u})
//   lambda = 2 family: y = v^4        (kills the K_nu short-distance power)
// plus an exponential-majorant bound for the truncated tail.
inline double weight_moment(const weight_spec& spec, int k, quad_options opt = {.rel_tol = 1e-11}) {
    const auto& p = spec.params;
    const int lambda = p.lambda();
    const int mu = spec.mu;

    std::function<double(double)> f;
    std::function<double(double)> tail_bound; // upper bound for the integral beyond the cut
    double cut = 0.0;

    if (spec.family == weight_family::alpha_zero_any_lambda) {
        const double m = lambda * k + mu;
        f = [spec, k, lambda](double u) {
            const double y = std::pow(u, lambda);
            return weight_density(spec, y) * std::pow(y, k) * lambda * std::pow(u, lambda - 1.0);
        };
        const double c = std::pow(static_cast<double>(lambda), mu - lambda + 3.0) /
                         (M_PI * std::tgamma(static_cast<double>(mu) + 1.0));
        tail_bound = [c, m, lambda](double u) {
            const double rate = lambda - m / u;
            if (rate <= 0.0) return std::numeric_limits<double>::infinity();
            return c * std::pow(u, m) * std::exp(-lambda * u) / rate;
        };
        cut = std::max(4.0, 2.0 * m / lambda + 4.0);
    } else if (spec.family == weight_family::lambda2_any_alpha) {
        const double nu = lambda2_bessel_order(p, mu);
        const double q = 4.0 * k + 2.0 * nu + 3.0;
        f = [spec, k](double v) {
            const double y = std::pow(v, 4);
            return weight_density(spec, y) * std::pow(y, k) * 4.0 * std::pow(v, 3);
        };
        const double c = 8.0 / (M_PI * std::tgamma(nu + 1.0));
        tail_bound = [c, q, nu](double v) {
            // K_nu(2 v^2) <= 2 sqrt(pi/(4 v^2)) e^{-2 v^2} once 2 v^2 >= max(2, nu^2)
            if (2.0 * v * v < std::max(2.0, nu * nu)) return std::numeric_limits<double>::infinity();
            const double rate = 4.0 * v - (q - 1.0) / v;
            if (rate <= 0.0) return std::numeric_limits<double>::infinity();
            const double g = c * std::pow(v, q - 1.0) * std::sqrt(M_PI) * std::exp(-2.0 * v * v);
            return g / rate;
        };
        cut = std::max({2.0, std::abs(nu), std::sqrt(q)});
    } else {
        throw not_supported("weight_moment: general Meijer-G family is not evaluable");
    }

    for (int attempt = 0; attempt < 12; ++attempt) {
        const auto r = integrate(f, 0.0, cut, opt);
        const double bound = tail_bound(cut);
        if (r.converged && bound < 1e-12 * std::abs(r.value)) return r.value;
        cut *= 1.6;
    }
    throw quadrature_failure("weight_moment: tail bound did not reach tolerance");
}

} // namespace detail

/// Relative errors |I_k - rhs_k| / rhs_k of the moment condition for
/// k = 0..k_hi, with I_k obtained by adaptive quadrature of the density.
inline std::vector<double> verify_moments(const weight_spec& spec, int k_hi) {
    std::vector<double> errs;
    errs.reserve(static_cast<std::size_t>(k_hi) + 1);
    for (int k = 0; k <= k_hi; ++k) {
        const double lhs = detail::weight_moment(spec, k);
        const double rhs = moment_rhs(spec.params, spec.mu, k);
        errs.push_back(std::abs(lhs - rhs) / rhs);
    }
    return errs;
}

/// Max deviation from the identity of sum_mu \int drho_mu |z;mu><z;mu|
/// projected on the first dim_check Fock states. The angular integral is
/// exact and kills every off-diagonal entry, so the deviation reduces to the
/// radial moment condition per diagonal entry.
inline double verify_unity(const algebra_params& p, int dim_check,
                           quad_options opts = {.rel_tol = 1e-11}) {
    double worst = 0.0;
    for (int n = 0; n < dim_check; ++n) {
        const int mu = p.sector(n);
        const int k = (n - mu) / p.lambda();
        const auto spec = weight_spec::select(p, mu);
        const double lhs = detail::weight_moment(spec, k, opts);
        const double rhs = moment_rhs(p, mu, k);
        worst = std::max(worst, std::abs(lhs / rhs - 1.0));
    }
    return worst;
}

/// Experimental check for non-evaluable families: fit an n-point discrete
/// measure (Gauss rule) to the first n closed-form moments and test that it
/// is positive and reproduces the remaining n-1 moments. Off by default;
/// nothing in the verification flows calls it.
struct discrete_moment_fit {
    std::vector<double> nodes;
    std::vector<double> weights;
    double max_rel_error = 0.0; // over moments n..2n-2
    bool positive = false;
};

inline discrete_moment_fit fit_discrete_measure(const algebra_params& p, int mu, int n) {
    if (n < 1 || n > 7) throw out_of_range_error("fit_discrete_measure: need 1 <= n <= 7");
    std::vector<long double> m(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < 2 * n; ++k) m[static_cast<std::size_t>(k)] = moment_rhs(p, mu, k);

    // monic orthogonal polynomial p_n from the Hankel system
    std::vector<std::vector<long double>> a(static_cast<std::size_t>(n),
                                            std::vector<long double>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[static_cast<std::size_t>(i + j)];
        a[i][static_cast<std::size_t>(n)] = -m[static_cast<std::size_t>(i + n)];
    }
    for (int col = 0; col < n; ++col) { // Gaussian elimination with partial pivoting
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[static_cast<std::size_t>(piv)]);
        if (a[col][col] == 0.0L) throw quadrature_failure("fit_discrete_measure: singular Hankel system");
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const long double fac = a[r][col] / a[col][col];
            for (int c = col; c <= n; ++c) a[r][c] -= fac * a[col][c];
        }
    }
    std::vector<long double> coef(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) coef[static_cast<std::size_t>(i)] = a[i][static_cast<std::size_t>(n)] / a[i][i];
    coef[static_cast<std::size_t>(n)] = 1.0L;

    auto poly = [&](long double x) {
        long double v = coef[static_cast<std::size_t>(n)];
        for (int i = n - 1; i >= 0; --i) v = v * x + coef[static_cast<std::size_t>(i)];
        return v;
    };

    // all roots are real and positive for a Stieltjes moment sequence; they
    // spread over orders of magnitude, so bracket on a log grid
    long double hi = 1.0L;
    for (int i = 0; i < n; ++i) hi = std::max(hi, 1.0L + std::abs(coef[static_cast<std::size_t>(i)]));
    discrete_moment_fit fit;
    const int samples = 60000;
    const long double lo_x = hi * 1e-9L;
    const long double ratio = std::pow(hi / lo_x, 1.0L / samples);
    long double x_prev = lo_x, f_prev = poly(lo_x);
    for (int s = 1; s <= samples && static_cast<int>(fit.nodes.size()) < n; ++s) {
        const long double x = lo_x * std::pow(ratio, static_cast<long double>(s));
        const long double fx = poly(x);
        if ((f_prev < 0) != (fx < 0)) {
            long double lo = x_prev, up = x;
            for (int it = 0; it < 200; ++it) {
                const long double mid = 0.5L * (lo + up);
                if ((poly(lo) < 0) != (poly(mid) < 0))
                    up = mid;
                else
                    lo = mid;
            }
            fit.nodes.push_back(static_cast<double>(0.5L * (lo + up)));
        }
        x_prev = x;
        f_prev = fx;
    }
    if (static_cast<int>(fit.nodes.size()) != n)
        throw quadrature_failure("fit_discrete_measure: failed to isolate all nodes");

    // weights from the Vandermonde system over moments 0..n-1
    std::vector<std::vector<long double>> v(static_cast<std::size_t>(n),
                                            std::vector<long double>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            v[i][j] = std::pow(static_cast<long double>(fit.nodes[static_cast<std::size_t>(j)]),
                               static_cast<long double>(i));
        v[i][static_cast<std::size_t>(n)] = m[static_cast<std::size_t>(i)];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(v[r][col]) > std::abs(v[piv][col])) piv = r;
        std::swap(v[col], v[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const long double fac = v[r][col] / v[col][col];
            for (int c = col; c <= n; ++c) v[r][c] -= fac * v[col][c];
        }
    }
    fit.weights.resize(static_cast<std::size_t>(n));
    fit.positive = true;
    for (int i = 0; i < n; ++i) {
        fit.weights[static_cast<std::size_t>(i)] = static_cast<double>(v[i][static_cast<std::size_t>(n)] / v[i][i]);
        if (!(fit.weights[static_cast<std::size_t>(i)] > 0.0) || !(fit.nodes[static_cast<std::size_t>(i)] > 0.0))
            fit.positive = false;
    }

    for (int k = n; k <= 2 * n - 2; ++k) {
        long double s = 0.0L;
        for (int i = 0; i < n; ++i)
            s += static_cast<long double>(fit.weights[static_cast<std::size_t>(i)]) *
                 std::pow(static_cast<long double>(fit.nodes[static_cast<std::size_t>(i)]),
                          static_cast<long double>(k));
        fit.max_rel_error = std::max(
            fit.max_rel_error,
            static_cast<double>(std::abs(s - m[static_cast<std::size_t>(k)]) / m[static_cast<std::size_t>(k)]));
    }
    return fit;
}

} // namespace cleo
