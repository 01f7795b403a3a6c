#pragma once

#include <stdexcept>
#include <string>

namespace cleo {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter vector does not sum to zero within the closure tolerance.
class sum_not_zero : public error {
public:
    explicit sum_not_zero(double sum)
        : error("alpha parameters must sum to zero, got " + std::to_string(sum)), sum_(sum) {}
    double sum() const { return sum_; }

private:
    double sum_;
};

/// A partial-sum condition beta_mu + mu > 0 is violated.
class condition_violated : public error {
public:
    condition_violated(int mu, double value)
        : error("parameter condition violated at mu=" + std::to_string(mu) +
                ": beta_mu + mu = " + std::to_string(value) + " <= 0"),
          mu_(mu), value_(value) {}
    int mu() const { return mu_; }
    double value() const { return value_; }

private:
    int mu_;
    double value_;
};

/// Requested truncation dimension is too small for the operation.
class dim_too_small : public error {
public:
    dim_too_small(int dim, int required)
        : error("truncation dimension " + std::to_string(dim) + " too small, need >= " +
                std::to_string(required)) {}
};

class nonpositive_base : public error {
public:
    explicit nonpositive_base(double a)
        : error("Pochhammer base must be positive, got " + std::to_string(a)) {}
};

class out_of_range_error : public error {
public:
    using error::error;
};

class not_implemented : public error {
public:
    using error::error;
};

class not_supported : public error {
public:
    using error::error;
};

class quadrature_failure : public error {
public:
    using error::error;
};

class unsupported_sector : public error {
public:
    explicit unsupported_sector(int mu)
        : error("operation restricted to sector mu=0, got mu=" + std::to_string(mu)) {}
};

class invalid_input : public error {
public:
    using error::error;
};

} // namespace cleo
