#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cleo/detail/compensated.hpp"
#include "cleo/errors.hpp"
#include "cleo/quadrature.hpp"

namespace cleo {

inline double log_gamma(double x) { return static_cast<double>(std::lgamma(static_cast<long double>(x))); }

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
inline double pochhammer(double a, int k) {
    if (k < 0) throw out_of_range_error("pochhammer: k must be >= 0");
    if (k == 0) return 1.0;
    if (a <= 0.0) throw nonpositive_base(a);
    if (k <= 48) {
        long double p = 1.0L;
        for (int j = 0; j < k; ++j) p *= (a + j);
        return static_cast<double>(p);
    }
    return static_cast<double>(std::exp(std::lgamma(static_cast<long double>(a) + k) -
                                        std::lgamma(static_cast<long double>(a))));
}

/// log (a)_k for positive a.
inline double log_pochhammer(double a, int k) {
    if (k < 0) throw out_of_range_error("log_pochhammer: k must be >= 0");
    if (k == 0) return 0.0;
    if (a <= 0.0) throw nonpositive_base(a);
    return static_cast<double>(std::lgamma(static_cast<long double>(a) + k) -
                               std::lgamma(static_cast<long double>(a)));
}

/// Parameter block of a 0Fq series: q positive denominator parameters.
struct hypergeom_params {
    std::vector<double> denominator_params;
};

namespace detail {

inline void check_denominator_params(std::span<const double> b) {
    for (double bi : b)
        if (!(bi > 0.0)) throw invalid_input("hyp0fq: denominator parameters must be positive");
}

// Generic 0Fq series driver. The term recurrence is
//   t_{k+1} = t_k * y / ((k+1) * prod_i (b_i + k)),
// summed until the term is below 1e-16 of the running sum twice in a row.
template <class T>
T hyp0fq_series(std::span<const double> b, T y, std::vector<double>* partials) {
    check_denominator_params(b);
    using LD = long double;
    std::complex<LD> t(1.0L, 0.0L);
    std::complex<LD> yc;
    if constexpr (std::is_same_v<T, double>)
        yc = std::complex<LD>(y, 0.0L);
    else
        yc = std::complex<LD>(y.real(), y.imag());

    compensated_sum sre, sim;
    sre.add(1.0L);
    if (partials) partials->push_back(1.0);

    int small_streak = 0;
    for (int k = 0; k < 100000; ++k) {
        LD denom = k + 1.0L;
        for (double bi : b) denom *= (static_cast<LD>(bi) + k);
        t *= yc / denom;
        sre.add(t.real());
        sim.add(t.imag());
        if (partials) partials->push_back(static_cast<double>(sre.value()));
        const LD mag = std::abs(t);
        const LD smag = std::abs(std::complex<LD>(sre.value(), sim.value()));
        if (mag < 1e-16L * smag)
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 2) break;
    }
    if constexpr (std::is_same_v<T, double>)
        return static_cast<double>(sre.value());
    else
        return T(static_cast<double>(sre.value()), static_cast<double>(sim.value()));
}

} // namespace detail

/// Generalized hypergeometric 0Fq(b_1,...,b_q; y). Entire in y, so the series
/// always converges.
inline double hyp0fq(std::span<const double> b, double y) {
    return detail::hyp0fq_series(b, y, nullptr);
}

inline std::complex<double> hyp0fq(std::span<const double> b, std::complex<double> y) {
    return detail::hyp0fq_series(b, y, nullptr);
}

inline double hyp0fq(const hypergeom_params& hp, double y) {
    return hyp0fq(std::span<const double>(hp.denominator_params), y);
}

inline std::complex<double> hyp0fq(const hypergeom_params& hp, std::complex<double> y) {
    return hyp0fq(std::span<const double>(hp.denominator_params), y);
}

/// Partial sums of the 0Fq series, mainly for convergence diagnostics.
inline std::vector<double> hyp0fq_partial_sums(std::span<const double> b, double y) {
    std::vector<double> p;
    detail::hyp0fq_series(b, y, &p);
    return p;
}

namespace detail {

constexpr long double euler_gamma_ld = 0.5772156649015328606065120900824024L;

inline long double digamma_int(int m) {
    // psi(m) = -gamma + sum_{j<m} 1/j for integer m >= 1
    long double s = -euler_gamma_ld;
    for (int j = 1; j < m; ++j) s += 1.0L / j;
    return s;
}

// Ascending series for I_nu, long double with compensation. Caller has
// screened x and nu.
inline long double bessel_i_series(long double nu, long double x) {
    const long double q = x * x / 4.0L;
    // first index whose gamma argument nu+k+1 is safely positive
    int k0 = 0;
    while (nu + k0 + 1.0L <= 0.5L) ++k0;

    compensated_sum s;
    // leading terms with possibly negative gamma arguments, computed directly
    for (int k = 0; k < k0; ++k) {
        const long double g = std::tgamma(nu + k + 1.0L);
        const long double t =
            std::pow(x / 2.0L, nu + 2.0L * k) / (std::tgamma(static_cast<long double>(k) + 1.0L) * g);
        s.add(t);
    }
    long double t = std::exp((nu + 2.0L * k0) * std::log(x / 2.0L) -
                             std::lgamma(static_cast<long double>(k0) + 1.0L) -
                             std::lgamma(nu + k0 + 1.0L));
    s.add(t);
    int streak = 0;
    for (int k = k0; k < 100000; ++k) {
        t *= q / ((k + 1.0L) * (nu + k + 1.0L));
        s.add(t);
        if (std::abs(t) < 1e-19L * std::abs(s.value()))
            ++streak;
        else
            streak = 0;
        if (streak >= 2) break;
    }
    return s.value();
}

// K_n for integer n >= 0 via the logarithmic (limit) series. Accurate for
// x <= ~6; beyond that the ln(x/2) I_n term cancels against the psi series.
inline long double bessel_k_int_series(int n, long double x) {
    const long double xh = x / 2.0L;
    const long double q = xh * xh;

    compensated_sum s;
    // finite sum: (1/2)(x/2)^{-n} sum_{k<n} (n-k-1)!/k! (-q)^k
    long double fin = 0.5L * std::pow(xh, static_cast<long double>(-n));
    long double t = std::tgamma(static_cast<long double>(n)); // (n-1)! ; n=0 skips the loop
    for (int k = 0; k < n; ++k) {
        s.add(fin * t);
        // t_{k+1}/t_k = -q / ((k+1)(n-k-1)) applied via factorial bookkeeping
        if (k + 1 < n) t *= -q / ((k + 1.0L) * (n - k - 1.0L));
    }

    const long double in = bessel_i_series(static_cast<long double>(n), x);
    const long double sgn = (n % 2 == 0) ? 1.0L : -1.0L;
    s.add(-sgn * std::log(xh) * in);

    // psi series
    long double c = 0.5L * sgn * std::pow(xh, static_cast<long double>(n)) /
                    std::tgamma(static_cast<long double>(n) + 1.0L);
    int streak = 0;
    for (int k = 0; k < 100000; ++k) {
        const long double term = c * (digamma_int(k + 1) + digamma_int(n + k + 1));
        s.add(term);
        if (std::abs(term) < 1e-19L * std::abs(s.value()))
            ++streak;
        else
            streak = 0;
        if (streak >= 2) break;
        c *= q / ((k + 1.0L) * (n + k + 1.0L));
    }
    return s.value();
}

inline long double bessel_k_i_reflection(long double nu, long double x) {
    const long double pi = 3.141592653589793238462643383279503L;
    const long double im = bessel_i_series(-nu, x);
    const long double ip = bessel_i_series(nu, x);
    return 0.5L * pi * (im - ip) / std::sin(pi * nu);
}

// Exponentially scaled integral representation, the workhorse for x > 6:
//   K_nu(x) = e^{-x} \int_0^T e^{-x(cosh t - 1)} cosh(nu t) dt
inline long double bessel_k_integral(double nu, double x) {
    const double anu = std::abs(nu);
    double t_cut = std::acosh(1.0 + 47.0 / x);
    for (int it = 0; it < 4; ++it) t_cut = std::acosh(1.0 + (47.0 + anu * t_cut) / x);

    auto f = [=](double t) {
        const double c = 2.0 * std::pow(std::sinh(0.5 * t), 2); // cosh t - 1, no cancellation
        return std::exp(-x * c) * std::cosh(anu * t);
    };
    quad_options opt;
    opt.rel_tol = 5e-14;
    auto r = integrate(f, 0.0, t_cut, opt);
    if (!r.converged) throw quadrature_failure("bessel_k: integral representation did not converge");
    return std::exp(-static_cast<long double>(x)) * static_cast<long double>(r.value);
}

inline long double bessel_k_impl(double nu, double x);

// dK_nu/dnu at integer order n >= 0 (used for the first-order correction of
// near-integer orders): (n!/2)(x/2)^{-n} sum_{k<n} (x/2)^k K_k(x) / (k! (n-k))
inline long double bessel_k_dnu_int(int n, double x) {
    if (n == 0) return 0.0L;
    const long double xh = static_cast<long double>(x) / 2.0L;
    compensated_sum s;
    for (int k = 0; k < n; ++k) {
        const long double kk = bessel_k_int_series(k, x);
        s.add(std::pow(xh, static_cast<long double>(k)) * kk /
              (std::tgamma(static_cast<long double>(k) + 1.0L) * (n - k)));
    }
    return 0.5L * std::tgamma(static_cast<long double>(n) + 1.0L) *
           std::pow(xh, static_cast<long double>(-n)) * s.value();
}

inline long double bessel_k_impl(double nu, double x) {
    nu = std::abs(nu); // K_{-nu} = K_nu
    if (x > 6.0) return bessel_k_integral(nu, x);

    const double nr = std::round(nu);
    if (std::abs(nu - nr) < 1e-6) {
        const int n = static_cast<int>(nr);
        long double k = bessel_k_int_series(n, x);
        if (nu != nr) k += (static_cast<long double>(nu) - nr) * bessel_k_dnu_int(n, x);
        return k;
    }
    return bessel_k_i_reflection(nu, x);
}

} // namespace detail

/// Modified Bessel function of the first kind, ascending series.
/// Valid for x in [0, 700]; larger arguments overflow and are rejected.
inline double bessel_i(double nu, double x) {
    if (x < 0.0) throw invalid_input("bessel_i: x must be >= 0");
    if (x > 700.0) throw not_implemented("bessel_i: x above overflow threshold 700");
    if (nu < 0.0 && nu == std::floor(nu)) nu = -nu; // I_{-n} = I_n
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw invalid_input("bessel_i: divergent at x=0 for negative non-integer order");
    }
    return static_cast<double>(detail::bessel_i_series(nu, x));
}

/// Modified Bessel function of the second kind. Series routes below x = 6
/// (I_{-nu}/I_nu reflection away from integer orders, the logarithmic limit
/// series plus a first-order d/dnu correction near them), exponentially
/// scaled integral representation above.
inline double bessel_k(double nu, double x) {
    if (x <= 0.0) throw invalid_input("bessel_k: x must be > 0");
    if (x > 700.0) throw not_implemented("bessel_k: x above underflow threshold 700");
    return static_cast<double>(detail::bessel_k_impl(nu, x));
}

/// Generalized Mittag-Leffler function E_{alpha,beta}(x) = sum_k x^k / Gamma(alpha k + beta).
inline double mittag_leffler(double alpha, double beta, double x) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw invalid_input("mittag_leffler: alpha and beta must be positive");
    detail::compensated_sum s;
    const long double lx = std::log(std::abs(static_cast<long double>(x)));
    const int sgn = x < 0 ? -1 : 1;
    int streak = 0;
    for (int k = 0; k < 100000; ++k) {
        long double term;
        if (x == 0.0) {
            term = (k == 0) ? 1.0L / std::tgamma(static_cast<long double>(beta)) : 0.0L;
        } else {
            term = std::exp(k * lx - std::lgamma(static_cast<long double>(alpha) * k + beta));
            if (sgn < 0 && (k % 2 == 1)) term = -term;
        }
        s.add(term);
        if (std::abs(term) < 1e-16L * std::abs(s.value()))
            ++streak;
        else
            streak = 0;
        if (streak >= 2) break;
    }
    return static_cast<double>(s.value());
}

/// Signed Stirling numbers of the first kind, normalized so that
/// x(x-1)...(x-lambda+1) = sum_i S(i,lambda) x^i. Exact in 64-bit integers
/// for lambda <= 20.
inline std::int64_t stirling_first(int i, int lambda) {
    constexpr int max_n = 20;
    if (lambda < 0 || lambda > max_n || i < 0 || i > lambda)
        throw out_of_range_error("stirling_first: need 0 <= i <= lambda <= 20");
    static const auto table = [] {
        std::vector<std::vector<std::int64_t>> t(max_n + 1);
        t[0] = {1};
        for (int n = 0; n < max_n; ++n) {
            t[n + 1].assign(n + 2, 0);
            for (int k = 0; k <= n; ++k) {
                t[n + 1][k + 1] += t[n][k];
                t[n + 1][k] -= static_cast<std::int64_t>(n) * t[n][k];
            }
        }
        return t;
    }();
    return table[lambda][i];
}

/// n!! in exact integer arithmetic; n <= 33 to stay within 64 bits.
inline std::int64_t double_factorial(int n) {
    if (n < -1 || n > 33) throw out_of_range_error("double_factorial: need -1 <= n <= 33");
    std::int64_t p = 1;
    for (int k = n; k > 1; k -= 2) p *= k;
    return p;
}

} // namespace cleo
