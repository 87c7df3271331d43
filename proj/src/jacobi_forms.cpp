#include <k3crc/jacobi_forms.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace k3crc {

FormOrder::FormOrder(int q_order) : q_order_(q_order)
{
    if (q_order < 1)
        throw std::invalid_argument("q_order must be >= 1, got " + std::to_string(q_order));
}

namespace {

// Sparse series sum_j c_j q^{m j} with scalar coefficients, known below trunc.
QLaurentSeries stride_series(int m, int trunc, auto coefficient)
{
    std::vector<HalfLaurent> v(static_cast<std::size_t>(std::max(trunc, 0)));
    for (int j = 0; m * j < trunc; ++j)
        v[static_cast<std::size_t>(m * j)] = HalfLaurent(coefficient(j));
    return {0, std::move(v), trunc};
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

QLaurentSeries discriminant_series(FormOrder ord)
{
    // Factors with m >= q_order - 1 only touch exponents beyond the truncation
    // once the overall q is applied.
    const int inner = ord.value() - 1;
    auto product = QLaurentSeries::one(inner);
    for (int m = 1; m < inner; ++m) {
        product = product * stride_series(m, inner, [](int j) {
            mpq_class c(binomial(24, static_cast<unsigned long>(j)));
            return GaussianRational(j % 2 ? mpq_class(-c) : c);
        });
    }
    return product.shifted(1);
}

QLaurentSeries theta_series(FormOrder ord)
{
    const int trunc = ord.value();
    HalfLaurent lead = HalfLaurent::monomial(1, 1) + HalfLaurent::monomial(1, -1);
    auto product = QLaurentSeries::monomial(lead, 0, trunc);
    for (int m = 1; m < trunc; ++m) {
        std::vector<HalfLaurent> pair_factor(static_cast<std::size_t>(std::min(trunc, 2 * m + 1)));
        // (1 + y q^m)(1 + y^{-1} q^m) = 1 + (y + y^{-1}) q^m + q^{2m}
        pair_factor[0] = HalfLaurent(1);
        pair_factor[static_cast<std::size_t>(m)] = HalfLaurent::y_power(1) + HalfLaurent::y_power(-1);
        if (2 * m < trunc)
            pair_factor[static_cast<std::size_t>(2 * m)] = HalfLaurent(1);
        product = product * QLaurentSeries(0, std::move(pair_factor), trunc);
        // 1/(1 - q^m)^2 = sum_j (j + 1) q^{m j}
        product = product * stride_series(m, trunc, [](int j) { return GaussianRational(j + 1); });
    }
    return product;
}

QLaurentSeries kernel_series(int n, FormOrder ord)
{
    if (n < 1)
        throw std::invalid_argument("kernel_series needs n >= 1, got " + std::to_string(n));
    const FormOrder wide(ord.value() + 2);
    const auto theta_power = theta_series(wide).pow(static_cast<unsigned>(2 * n - 2));
    return (theta_power * discriminant_series(wide).inverse()).truncated(ord.value());
}

} // namespace k3crc
