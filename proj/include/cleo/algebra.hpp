#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "cleo/errors.hpp"
#include "cleo/fock_matrix.hpp"

namespace cleo {

/// Validated parameter set of the C_lambda-extended oscillator: the grading
/// order lambda >= 2 and the real vector alpha_0..alpha_{lambda-1} with
/// sum(alpha) = 0 and the admissibility condition beta_mu + mu > 0 for
/// mu = 1..lambda-1, where beta_mu are the partial sums of alpha.
///
/// Derived sequences are cached on construction:
///   beta_mu  = sum_{nu < mu} alpha_nu            (periodic mod lambda)
///   bbar_mu  = (beta_mu + mu) / lambda           (bbar_{mu+lambda} = bbar_mu + 1)
///   gamma_mu = (beta_mu + beta_{mu+1}) / 2
class algebra_params {
public:
    algebra_params(int lambda, std::vector<double> alpha) : lambda_(lambda), alpha_(std::move(alpha)) {
        if (lambda_ < 2) throw invalid_input("algebra_params: lambda must be >= 2");
        if (static_cast<int>(alpha_.size()) != lambda_)
            throw invalid_input("algebra_params: alpha must have length lambda");

        const double sum = std::accumulate(alpha_.begin(), alpha_.end(), 0.0);
        if (std::abs(sum) > 1e-9) throw sum_not_zero(sum);
        // close the sum exactly through the last component
        double head = 0.0;
        for (int mu = 0; mu + 1 < lambda_; ++mu) head += alpha_[static_cast<std::size_t>(mu)];
        alpha_[static_cast<std::size_t>(lambda_ - 1)] = -head;

        beta_.assign(static_cast<std::size_t>(lambda_), 0.0);
        for (int mu = 1; mu < lambda_; ++mu)
            beta_[static_cast<std::size_t>(mu)] =
                beta_[static_cast<std::size_t>(mu - 1)] + alpha_[static_cast<std::size_t>(mu - 1)];
        for (int mu = 1; mu < lambda_; ++mu) {
            const double f = beta_[static_cast<std::size_t>(mu)] + mu;
            if (!(f > 0.0)) throw condition_violated(mu, f);
        }
        gamma_.assign(static_cast<std::size_t>(lambda_), 0.0);
        for (int mu = 0; mu < lambda_; ++mu) {
            const double next = (mu + 1 < lambda_) ? beta_[static_cast<std::size_t>(mu + 1)] : 0.0;
            gamma_[static_cast<std::size_t>(mu)] = 0.5 * (beta_[static_cast<std::size_t>(mu)] + next);
        }
    }

    int lambda() const { return lambda_; }
    const std::vector<double>& alpha() const { return alpha_; }

    int sector(long n) const { return static_cast<int>(((n % lambda_) + lambda_) % lambda_); }

    /// beta with the periodic index convention.
    double beta(long mu) const { return beta_[static_cast<std::size_t>(sector(mu))]; }

    /// bbar at an unreduced index: bbar_{mu + lambda} = bbar_mu + 1.
    double beta_bar(long mu) const { return (beta(mu) + static_cast<double>(mu)) / lambda_; }

    double gamma(long mu) const { return gamma_[static_cast<std::size_t>(sector(mu))]; }

    /// gamma recomputed in extended precision from the stored betas.
    long double gamma_ld(long mu) const {
        const long double b0 = beta_[static_cast<std::size_t>(sector(mu))];
        const long double b1 = beta_[static_cast<std::size_t>(sector(mu + 1))];
        return 0.5L * (b0 + b1);
    }

    bool alpha_is_zero() const {
        for (double a : alpha_)
            if (a != 0.0) return false;
        return true;
    }

private:
    int lambda_;
    std::vector<double> alpha_;
    std::vector<double> beta_;
    std::vector<double> gamma_;
};

/// Structure function F(n) = n + beta_{n mod lambda}; F(0) = 0 and F(n) > 0
/// for n >= 1 on any valid parameter set.
inline double structure_function(const algebra_params& p, long n) {
    return static_cast<double>(n) + p.beta(n);
}

inline long double structure_function_ld(const algebra_params& p, long n) {
    return static_cast<long double>(n) + static_cast<long double>(p.beta(n));
}

/// Energy of |n>: E_n = n + gamma_{n mod lambda} + 1/2.
inline double energy(const algebra_params& p, long n) {
    return static_cast<double>(n) + p.gamma(n) + 0.5;
}

inline long double energy_ld(const algebra_params& p, long n) {
    return static_cast<long double>(n) + p.gamma_ld(n) + 0.5L;
}

/// Truncated matrix realizations of N, a, a^dag, the sector projectors and H0.
/// H0 is assembled from the products (a a^dag + a^dag a)/2, so its top
/// diagonal entry is truncation-corrupted; h0_top_corrupted records that.
struct fock_operators {
    fock_matrix number;
    fock_matrix lower;
    fock_matrix raise;
    std::vector<fock_matrix> projectors;
    fock_matrix h0;
    bool h0_top_corrupted = true;
};

inline fock_operators build_operators(const algebra_params& p, int dim = 64) {
    const int lambda = p.lambda();
    if (dim < 2 * lambda) throw dim_too_small(dim, 2 * lambda);

    fock_matrix n_op(dim, "N");
    for (int n = 0; n < dim; ++n) n_op(n, n) = static_cast<double>(n);

    fock_matrix a(dim, "a");
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(structure_function_ld(p, n));
    fock_matrix adag = a.adjoint();
    adag.set_label("a_dag");

    std::vector<fock_matrix> proj;
    proj.reserve(static_cast<std::size_t>(lambda));
    for (int mu = 0; mu < lambda; ++mu) {
        fock_matrix pm(dim, "P_" + std::to_string(mu));
        for (int n = mu; n < dim; n += lambda) pm(n, n) = 1.0;
        proj.push_back(std::move(pm));
    }

    fock_matrix h0 = cplx(0.5) * (a * adag + adag * a);
    h0.set_label("H0 (top diagonal entry truncation-corrupted)");

    return fock_operators{std::move(n_op), std::move(a), std::move(adag), std::move(proj),
                          std::move(h0), true};
}

} // namespace cleo
