#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cleo/algebra.hpp"
#include "cleo/special_functions.hpp"

namespace cleo {

/// Polynomial in J0 whose coefficients carry a sector index: as an operator
/// it is sum_mu P_mu sum_i coeffs(i, mu) J0^i, diagonal in the Fock basis.
/// Coefficients are kept in extended precision so that operator-level
/// residual checks are not limited by coefficient rounding.
class projector_polynomial {
public:
    projector_polynomial(int lambda, int degree)
        : lambda_(lambda), degree_(degree),
          coeffs_(static_cast<std::size_t>(degree + 1) * lambda, 0.0L) {}

    int lambda() const { return lambda_; }
    int degree() const { return degree_; }

    long double& coeff_ld(int power, int mu) {
        return coeffs_[static_cast<std::size_t>(power) * lambda_ + mu];
    }
    long double coeff_ld(int power, int mu) const {
        return coeffs_[static_cast<std::size_t>(power) * lambda_ + mu];
    }
    double coeff(int power, int mu) const { return static_cast<double>(coeff_ld(power, mu)); }

    long double evaluate_ld(int mu, long double j0) const {
        long double v = coeff_ld(degree_, mu);
        for (int i = degree_ - 1; i >= 0; --i) v = v * j0 + coeff_ld(i, mu);
        return v;
    }

    double evaluate(int mu, double j0) const {
        return static_cast<double>(evaluate_ld(mu, static_cast<long double>(j0)));
    }

    /// Diagonal operator realization on the first `dim` Fock states.
    fock_matrix to_operator(const algebra_params& p, int dim) const {
        fock_matrix m(dim);
        for (int n = 0; n < dim; ++n) {
            const long double j0 = energy_ld(p, n) / p.lambda();
            m(n, n) = evaluate_ld(p.sector(n), j0);
        }
        return m;
    }

private:
    int lambda_;
    int degree_;
    std::vector<long double> coeffs_;
};

struct sga_generators {
    fock_matrix plus;  // J+ = (a^dag)^lambda / lambda
    fock_matrix minus; // J- = a^lambda / lambda
    fock_matrix zero;  // J0 = H0 / lambda
};

inline sga_generators build_generators(const algebra_params& p, int dim = 64) {
    const int lambda = p.lambda();
    if (dim < 3 * lambda) throw dim_too_small(dim, 3 * lambda);
    const auto ops = build_operators(p, dim);
    const lcplx inv_lambda(1.0L / lambda);
    fock_matrix jp = inv_lambda * matrix_power(ops.raise, lambda);
    fock_matrix jm = inv_lambda * matrix_power(ops.lower, lambda);
    fock_matrix j0 = inv_lambda * ops.h0;
    jp.set_label("J+");
    jm.set_label("J-");
    j0.set_label("J0");
    return sga_generators{std::move(jp), std::move(jm), std::move(j0)};
}

namespace detail {

// Ascending-coefficient polynomial in u = lambda*J0, long double throughout.
// With alpha = 0 every factor constant is a half-integer, so the expansion is
// exact in binary floating point well past the tested lambda range.
using upoly = std::vector<long double>;

inline void multiply_linear(upoly& p, long double c) {
    // p(u) <- p(u) * (u + c)
    p.push_back(0.0L);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i - 1] + c * p[i];
    p[0] *= c;
}

inline void add_scaled(upoly& p, const upoly& q, long double s) {
    if (p.size() < q.size()) p.resize(q.size(), 0.0L);
    for (std::size_t i = 0; i < q.size(); ++i) p[i] += s * q[i];
}

// Factor constants of the deformation polynomials, per sector mu. All index
// arithmetic on alpha is mod lambda.
struct sector_constants {
    std::vector<long double> a; // a_l, l = 0..lambda-2
    std::vector<long double> b; // b_j, j = 1..lambda-2 (stored from index 1)
    long double d;              // (1 + alpha_mu)/2
    long double big_a;          // (2*lambda - 1 - alpha_mu)/2
};

inline sector_constants make_sector_constants(const algebra_params& p, int mu) {
    const int lambda = p.lambda();
    auto alpha_at = [&](long idx) {
        return static_cast<long double>(p.alpha()[static_cast<std::size_t>(p.sector(idx))]);
    };
    sector_constants sc;
    sc.a.resize(static_cast<std::size_t>(lambda - 1));
    for (int l = 0; l <= lambda - 2; ++l) {
        long double s = 2.0L * l + 1.0L + alpha_at(mu);
        for (int m = 1; m <= l; ++m) s += 2.0L * alpha_at(mu + m);
        sc.a[static_cast<std::size_t>(l)] = 0.5L * s;
    }
    sc.b.resize(static_cast<std::size_t>(lambda - 1)); // b[0] unused
    for (int j = 1; j <= lambda - 2; ++j) {
        long double s = -2.0L * j - 1.0L + alpha_at(mu);
        for (int k = 1; k <= lambda - j - 1; ++k) s += 2.0L * alpha_at(mu + k);
        sc.b[static_cast<std::size_t>(j)] = 0.5L * s;
    }
    sc.d = 0.5L * (1.0L + alpha_at(mu));
    sc.big_a = 0.5L * (2.0L * lambda - 1.0L - alpha_at(mu));
    return sc;
}

} // namespace detail

/// Commutator polynomial f with [J+, J-] = f(J0, P_mu), degree lambda-1.
inline projector_polynomial f_polynomial(const algebra_params& p) {
    const int lambda = p.lambda();
    projector_polynomial f(lambda, lambda - 1);
    for (int mu = 0; mu < lambda; ++mu) {
        const auto sc = detail::make_sector_constants(p, mu);

        detail::upoly total{1.0L};
        for (int l = 0; l <= lambda - 2; ++l) detail::multiply_linear(total, sc.a[static_cast<std::size_t>(l)]);

        for (int i = 1; i <= lambda - 1; ++i) {
            detail::upoly term{1.0L};
            detail::multiply_linear(term, -sc.d);
            for (int j = 1; j <= i - 1; ++j) detail::multiply_linear(term, sc.b[static_cast<std::size_t>(j)]);
            for (int l = 0; l <= lambda - i - 2; ++l)
                detail::multiply_linear(term, sc.a[static_cast<std::size_t>(l)]);
            detail::add_scaled(total, term, 1.0L);
        }

        // substitute u = lambda*J0 and apply the overall -1/lambda
        long double scale = -1.0L / lambda;
        for (int power = 0; power <= lambda - 1; ++power) {
            f.coeff_ld(power, mu) = scale * total[static_cast<std::size_t>(power)];
            scale *= lambda;
        }
    }
    return f;
}

/// Casimir polynomial h with C = J- J+ + h(J0, P_mu), degree lambda. The
/// constant term vanishes identically.
inline projector_polynomial h_polynomial(const algebra_params& p) {
    const int lambda = p.lambda();
    projector_polynomial h(lambda, lambda);
    for (int mu = 0; mu < lambda; ++mu) {
        const auto sc = detail::make_sector_constants(p, mu);

        detail::upoly prod{1.0L};
        long double gk_prod = 1.0L;
        for (int k = 1; k <= lambda - 1; ++k) {
            const long double gk = sc.a[static_cast<std::size_t>(k - 1)];
            detail::multiply_linear(prod, gk);
            gk_prod *= gk;
        }
        // full = -(u + A) * prod(u) + A * prod(0)
        detail::upoly full{0.0L};
        detail::upoly up_a = prod;
        detail::multiply_linear(up_a, sc.big_a);
        detail::add_scaled(full, up_a, -1.0L);
        full[0] += sc.big_a * gk_prod;

        long double scale = 1.0L / (static_cast<long double>(lambda) * lambda);
        for (int power = 0; power <= lambda; ++power) {
            h.coeff_ld(power, mu) = scale * full[static_cast<std::size_t>(power)];
            scale *= lambda;
        }
    }
    return h;
}

/// The alpha = 0 specialization of (f, h), built from binomial/Stirling sums
/// instead of factor expansion. f then has parity opposite to lambda.
inline std::pair<projector_polynomial, projector_polynomial> alpha_zero_polynomials(int lambda) {
    if (lambda < 2 || lambda > 20) throw out_of_range_error("alpha_zero_polynomials: need 2 <= lambda <= 20");

    auto binom = [](int n, int k) -> std::int64_t {
        std::int64_t r = 1;
        for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
        return r;
    };

    projector_polynomial f(lambda, lambda - 1);
    projector_polynomial h(lambda, lambda);

    const long double lam2 = static_cast<long double>(lambda) * lambda;
    for (int j = 0; j <= lambda; ++j) {
        // numerators accumulated exactly over a common denominator 2^(lambda-j)
        __int128 fnum = 0, hnum = 0;
        for (int i = j; i <= lambda; ++i) {
            const __int128 base =
                static_cast<__int128>(binom(i, j)) * (static_cast<__int128>(1) << (lambda - i)) *
                stirling_first(i, lambda);
            fnum += ((i - j) % 2 == 0) ? base : -base;                // (-1/2)^{i-j}
            hnum += ((lambda - i) % 2 == 0) ? base : -base;           // (-1)^{lambda-i} (1/2)^{i-j}
        }
        const long double den = std::pow(2.0L, static_cast<long double>(lambda - j));
        const long double lam_j = std::pow(static_cast<long double>(lambda), static_cast<long double>(j));

        const int parity_factor = ((lambda - j) % 2 == 0) ? 0 : 2;
        if (j <= lambda - 1 && parity_factor != 0) {
            const long double c =
                parity_factor * static_cast<long double>(fnum) / den * lam_j / lam2;
            for (int mu = 0; mu < lambda; ++mu) f.coeff_ld(j, mu) = c;
        }
        if (j >= 1) {
            const long double c = -static_cast<long double>(hnum) / den * lam_j / lam2;
            for (int mu = 0; mu < lambda; ++mu) h.coeff_ld(j, mu) = c;
        }
    }
    return {std::move(f), std::move(h)};
}

/// Unirrep label data of the sector F_mu: the Casimir eigenvalue and the
/// lowest J0 eigenvalue (mu + gamma_mu + 1/2)/lambda.
struct unirrep_data {
    int mu;
    double casimir_value;
    double lowest_j0;
};

inline double casimir_eigenvalue(const algebra_params& p, int mu) {
    const auto sc = detail::make_sector_constants(p, mu);
    long double prod = sc.big_a;
    for (int k = 1; k <= p.lambda() - 1; ++k) prod *= sc.a[static_cast<std::size_t>(k - 1)];
    return static_cast<double>(prod / (static_cast<long double>(p.lambda()) * p.lambda()));
}

inline std::vector<unirrep_data> unirrep_info(const algebra_params& p) {
    std::vector<unirrep_data> out;
    out.reserve(static_cast<std::size_t>(p.lambda()));
    for (int mu = 0; mu < p.lambda(); ++mu)
        out.push_back({mu, casimir_eigenvalue(p, mu),
                       (mu + p.gamma(mu) + 0.5) / p.lambda()});
    return out;
}

/// Casimir operator C = J- J+ + h(J0, P_mu). The J- J+ form keeps the
/// truncation corruption confined to the top lambda rows.
inline fock_matrix casimir(const algebra_params& p, int dim = 64) {
    if (dim < 3 * p.lambda()) throw dim_too_small(dim, 3 * p.lambda());
    const auto gen = build_generators(p, dim);
    const auto h = h_polynomial(p);
    fock_matrix c = gen.minus * gen.plus + h.to_operator(p, dim);
    c.set_label("C");
    return c;
}

/// Diagonal of C = J- J+ + h(J0, P_mu) on the first dim - lambda states,
/// contracted in extended precision. The double matmul loses digits to the
/// F(n)^lambda cancellation at large n; here J- J+ is the explicit entry
/// product and h is evaluated from its factored form.
inline std::vector<double> casimir_diagonal(const algebra_params& p, int dim) {
    const int lambda = p.lambda();
    if (dim < 3 * lambda) throw dim_too_small(dim, 3 * lambda);
    std::vector<double> out(static_cast<std::size_t>(dim - lambda));
    for (int mu = 0; mu < lambda; ++mu) {
        const auto sc = detail::make_sector_constants(p, mu);
        for (int n = mu; n + lambda < dim; n += lambda) {
            long double jmjp = 1.0L;
            for (int j = 1; j <= lambda; ++j) jmjp *= structure_function_ld(p, n + j);
            const long double u = energy_ld(p, n); // lambda * j0
            long double poly = u + sc.big_a;
            long double gk_prod = 1.0L;
            for (int k = 1; k <= lambda - 1; ++k) {
                poly *= u + sc.a[static_cast<std::size_t>(k - 1)];
                gk_prod *= sc.a[static_cast<std::size_t>(k - 1)];
            }
            const long double hv = -poly + sc.big_a * gk_prod;
            out[static_cast<std::size_t>(n)] = static_cast<double>(
                (jmjp + hv) / (static_cast<long double>(lambda) * lambda));
        }
    }
    return out;
}

} // namespace cleo
