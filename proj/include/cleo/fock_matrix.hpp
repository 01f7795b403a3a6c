#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "cleo/errors.hpp"

namespace cleo {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

/// Dense operator on a truncated Fock space. Entries are kept in extended
/// precision: ladder-operator products reach magnitudes of F(n)^lambda and
/// the algebra identities cancel them back down to O(1), which double
/// arithmetic cannot survive at dim = 64, lambda = 5. Dimensions stay small
/// (a few hundred states), so no sparsity tricks.
class fock_matrix {
public:
    explicit fock_matrix(int dim, std::string label = {})
        : dim_(dim), label_(std::move(label)), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw invalid_input("fock_matrix: dim must be >= 1");
    }

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    lcplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const lcplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    cplx entry(int r, int c) const {
        const lcplx& v = (*this)(r, c);
        return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }

    static fock_matrix identity(int dim) {
        fock_matrix m(dim, "I");
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0L;
        return m;
    }

    static fock_matrix diagonal(std::span<const double> d, std::string label = {}) {
        fock_matrix m(static_cast<int>(d.size()), std::move(label));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = static_cast<long double>(d[static_cast<std::size_t>(i)]);
        return m;
    }

    fock_matrix adjoint() const {
        fock_matrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    std::vector<cplx> apply(std::span<const cplx> v) const {
        if (static_cast<int>(v.size()) != dim_) throw invalid_input("fock_matrix::apply: size mismatch");
        std::vector<cplx> out(static_cast<std::size_t>(dim_));
        for (int r = 0; r < dim_; ++r) {
            lcplx acc = 0.0L;
            for (int c = 0; c < dim_; ++c)
                acc += (*this)(r, c) * lcplx(v[static_cast<std::size_t>(c)].real(),
                                             v[static_cast<std::size_t>(c)].imag());
            out[static_cast<std::size_t>(r)] = {static_cast<double>(acc.real()),
                                                static_cast<double>(acc.imag())};
        }
        return out;
    }

    /// Max |entry| over the leading (dim-cut) x (dim-cut) block. Identity
    /// checks on truncated ladder operators exclude the corrupted top rows
    /// this way.
    double max_abs(int cut = 0) const {
        const int n = dim_ - cut;
        long double m = 0.0L;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m = std::max(m, std::abs((*this)(r, c)));
        return static_cast<double>(m);
    }

    friend fock_matrix operator*(const fock_matrix& x, const fock_matrix& y) {
        check_same(x, y);
        const int n = x.dim_;
        fock_matrix out(n);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                const lcplx xv = x(r, k);
                if (xv == lcplx(0.0L)) continue;
                for (int c = 0; c < n; ++c) out(r, c) += xv * y(k, c);
            }
        return out;
    }

    friend fock_matrix operator+(const fock_matrix& x, const fock_matrix& y) {
        check_same(x, y);
        fock_matrix out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
        return out;
    }

    friend fock_matrix operator-(const fock_matrix& x, const fock_matrix& y) {
        check_same(x, y);
        fock_matrix out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
        return out;
    }

    friend fock_matrix operator*(cplx s, const fock_matrix& x) {
        return lcplx(s.real(), s.imag()) * x;
    }

    friend fock_matrix operator*(lcplx s, const fock_matrix& x) {
        fock_matrix out = x;
        for (auto& v : out.a_) v *= s;
        return out;
    }

private:
    static void check_same(const fock_matrix& x, const fock_matrix& y) {
        if (x.dim_ != y.dim_) throw invalid_input("fock_matrix: dimension mismatch");
    }

    int dim_;
    std::string label_;
    std::vector<lcplx> a_;
};

inline fock_matrix commutator(const fock_matrix& x, const fock_matrix& y) {
    return x * y - y * x;
}

inline fock_matrix matrix_power(const fock_matrix& x, int p) {
    fock_matrix out = fock_matrix::identity(x.dim());
    for (int i = 0; i < p; ++i) out = out * x;
    return out;
}

} // namespace cleo
