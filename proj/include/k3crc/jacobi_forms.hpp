#pragma once

#include <k3crc/laurent_series.hpp>

namespace k3crc {

/// Number of q-exponents requested: coefficients for exponents < q_order.
class FormOrder {
public:
    explicit FormOrder(int q_order);
    int value() const { return q_order_; }

private:
    int q_order_;
};

/// Delta(tau) = q prod_{m>=1} (1 - q^m)^24, valuation 1, known below q_order.
QLaurentSeries discriminant_series(FormOrder ord);

/// F(z, tau) = (y^{1/2} + y^{-1/2}) prod_{m>=1} (1 + y q^m)(1 + y^{-1} q^m) / (1 - q^m)^2,
/// known below q_order. Every q-coefficient is odd in s = y^{1/2}.
QLaurentSeries theta_series(FormOrder ord);

/// K_n = F^{2n-2} / Delta, valuation -1, known below q_order. The factors are
/// expanded two orders further so that the quotient reaches the requested
/// precision. Throws std::invalid_argument for n < 1.
QLaurentSeries kernel_series(int n, FormOrder ord);

} // namespace k3crc
