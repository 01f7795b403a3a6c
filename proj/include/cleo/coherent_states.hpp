#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "cleo/algebra.hpp"
#include "cleo/sga.hpp"
#include "cleo/special_functions.hpp"

namespace cleo {

/// Eigenstate |z; mu> of J- inside the sector F_mu, held as its normalized
/// coefficient sequence on the basis states |k*lambda + mu>.
struct coherent_state {
    std::complex<double> z;
    int mu = 0;
    int k_max = 0;
    std::vector<std::complex<double>> coeffs; // c_k for k = 0..k_max, sum |c_k|^2 = 1
    double norm_factor = 1.0;                 // N_mu(|z|), the 0F_{lambda-1} value
    double series_norm = 1.0;                 // sum_k |u_k|^2 over the retained terms
    double y = 0.0;                           // |z|^2 / lambda^(lambda-2)
};

/// Denominator parameters of the sector-mu normalization series:
/// (bbar_1+1, ..., bbar_mu+1, bbar_{mu+1}, ..., bbar_{lambda-1}).
inline std::vector<double> cs_denominator_params(const algebra_params& p, int mu) {
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(p.lambda() - 1));
    for (int nu = 1; nu <= mu; ++nu) b.push_back(p.beta_bar(nu) + 1.0);
    for (int nu = mu + 1; nu <= p.lambda() - 1; ++nu) b.push_back(p.beta_bar(nu));
    return b;
}

/// Normalization factor N_mu(|z|) as a function of y = |z|^2/lambda^(lambda-2).
inline double cs_norm_factor(const algebra_params& p, int mu, double y) {
    const auto b = cs_denominator_params(p, mu);
    return hyp0fq(b, y);
}

/// Build |z; mu>. Coefficients are computed in log space and the truncation
/// index is chosen adaptively: the first k whose unnormalized |term|^2 drops
/// below 1e-18 of the running sum, plus 5 guard terms. The overall phase is
/// fixed by c_0 real positive.
inline coherent_state make_coherent_state(const algebra_params& p, std::complex<double> z, int mu) {
    const int lambda = p.lambda();
    if (mu < 0 || mu >= lambda) throw invalid_input("make_coherent_state: need 0 <= mu < lambda");

    coherent_state st;
    st.z = z;
    st.mu = mu;
    const double scale = std::pow(static_cast<double>(lambda), 0.5 * (lambda - 2));
    const std::complex<double> t = z / scale;
    st.y = std::norm(z) / std::pow(static_cast<double>(lambda), lambda - 2);

    const auto b = cs_denominator_params(p, mu);
    st.norm_factor = hyp0fq(b, st.y);

    if (z == std::complex<double>(0.0)) {
        st.k_max = 0;
        st.coeffs = {1.0};
        st.series_norm = 1.0;
        return st;
    }

    const long double log_abs_t = std::log(std::abs(std::complex<long double>(t.real(), t.imag())));
    const double arg_t = std::arg(t);

    std::vector<long double> log_mag; // log |u_k|
    long double log_rho = 0.0L;       // log rho_k, rho_k = k! prod (b_i)_k
    detail::compensated_sum weight;   // sum of |u_k|^2
    int k_stop = -1;
    for (int k = 0; k < 100000; ++k) {
        if (k > 0) {
            long double step = std::log(static_cast<long double>(k));
            for (double bi : b) step += std::log(static_cast<long double>(bi) + (k - 1));
            log_rho += step;
        }
        const long double lu = k * log_abs_t - 0.5L * log_rho;
        log_mag.push_back(lu);
        const long double w = std::exp(2.0L * lu);
        weight.add(w);
        if (k_stop < 0 && w < 1e-18L * weight.value()) k_stop = k;
        if (k_stop >= 0 && k >= k_stop + 5) break;
    }
    st.k_max = static_cast<int>(log_mag.size()) - 1;
    st.series_norm = static_cast<double>(weight.value());

    const long double inv_norm = 1.0L / std::sqrt(weight.value());
    st.coeffs.resize(log_mag.size());
    for (std::size_t k = 0; k < log_mag.size(); ++k) {
        const double mag = static_cast<double>(std::exp(log_mag[k]) * inv_norm);
        const double ph = arg_t * static_cast<double>(k);
        st.coeffs[k] = std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
    return st;
}

/// Embed the state into the first `dim` Fock amplitudes.
inline std::vector<std::complex<double>> to_fock_vector(const coherent_state& st,
                                                        const algebra_params& p, int dim) {
    std::vector<std::complex<double>> v(static_cast<std::size_t>(dim));
    for (int k = 0; k <= st.k_max; ++k) {
        const long n = static_cast<long>(k) * p.lambda() + st.mu;
        if (n >= dim) throw dim_too_small(dim, static_cast<int>(n) + 1);
        v[static_cast<std::size_t>(n)] = st.coeffs[static_cast<std::size_t>(k)];
    }
    return v;
}

/// || (J- - z) |z; mu> || on the truncated space.
inline double eigen_residual(const coherent_state& st, const algebra_params& p, int dim) {
    if (dim <= p.lambda() * (st.k_max + 2)) throw dim_too_small(dim, p.lambda() * (st.k_max + 2) + 1);
    const auto gen = build_generators(p, dim);
    const auto v = to_fock_vector(st, p, dim);
    auto w = gen.minus.apply(v);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::complex<double> r = w[i] - st.z * v[i];
        acc += static_cast<long double>(std::norm(r));
    }
    return static_cast<double>(std::sqrt(acc));
}

/// Reproducing kernel <z1; mu1 | z2; mu2>.
inline std::complex<double> kernel(const algebra_params& p, std::complex<double> z1, int mu1,
                                   std::complex<double> z2, int mu2) {
    if (mu1 < 0 || mu1 >= p.lambda() || mu2 < 0 || mu2 >= p.lambda())
        throw invalid_input("kernel: sector indices must lie in [0, lambda)");
    if (mu1 != mu2) return 0.0;
    const auto b = cs_denominator_params(p, mu1);
    const double scale = std::pow(static_cast<double>(p.lambda()), p.lambda() - 2);
    const double y1 = std::norm(z1) / scale;
    const double y2 = std::norm(z2) / scale;
    const std::complex<double> arg = std::conj(z1) * z2 / scale;
    return hyp0fq(b, arg) / std::sqrt(hyp0fq(b, y1) * hyp0fq(b, y2));
}

/// Coherent-state representation of an arbitrary Fock-space element:
/// psi_tilde_mu(z, z*) = <z; mu | psi>.
inline std::complex<double> expand_state(const algebra_params& p,
                                         std::span<const std::complex<double>> psi,
                                         std::complex<double> z, int mu) {
    const auto st = make_coherent_state(p, z, mu);
    std::complex<double> acc = 0.0;
    for (int k = 0; k <= st.k_max; ++k) {
        const std::size_t n = static_cast<std::size_t>(k) * p.lambda() + st.mu;
        if (n >= psi.size()) break;
        acc += std::conj(st.coeffs[static_cast<std::size_t>(k)]) * psi[n];
    }
    return acc;
}

} // namespace cleo
