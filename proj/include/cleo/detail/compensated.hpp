#pragma once

namespace cleo::detail {

/// Neumaier-compensated accumulator in extended precision. Series with
/// cancellation (alternating hypergeometric tails, Bessel K differences)
/// keep full working precision this way.
class compensated_sum {
public:
    void add(long double x) {
        const long double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

} // namespace cleo::detail
