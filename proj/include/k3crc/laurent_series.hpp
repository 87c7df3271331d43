#pragma once

#include <k3crc/errors.hpp>
#include <k3crc/gaussian_rational.hpp>
#include <k3crc/half_laurent.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3crc {

namespace detail {

inline GaussianRational scale(const GaussianRational &c, const GaussianRational &k) { return c * k; }
inline HalfLaurent scale(const HalfLaurent &c, const GaussianRational &k) { return c.scaled(k); }

} // namespace detail

// Truncated Laurent series sum_{e >= valuation} c_e x^e + O(x^trunc).
//
// Truncation is explicit state: coefficients at exponents >= trunc are
// unknown, and every operation propagates the precision it can actually
// guarantee. Storage starts at the valuation; leading and trailing zeros are
// stripped, so the zero series is an empty vector (its valuation() reports
// trunc, since the series is O(x^trunc)).
//
// Coeff must model a commutative ring with c.is_zero() and invert_unit(c)
// overloads; GaussianRational and HalfLaurent both do.
template <typename Coeff>
class TruncatedLaurentSeries {
public:
    TruncatedLaurentSeries() = default;

    /// coeffs[i] is the coefficient of x^{valuation + i}. Entries at
    /// exponents >= trunc are discarded.
    TruncatedLaurentSeries(int valuation, std::vector<Coeff> coeffs, int trunc)
        : valuation_(valuation), coeffs_(std::move(coeffs)), trunc_(trunc)
    {
        normalize();
    }

    static TruncatedLaurentSeries zero(int trunc) { return {trunc, {}, trunc}; }
    static TruncatedLaurentSeries one(int trunc) { return monomial(Coeff(1), 0, trunc); }
    static TruncatedLaurentSeries monomial(Coeff c, int exponent, int trunc)
    {
        std::vector<Coeff> v;
        v.push_back(std::move(c));
        return {exponent, std::move(v), trunc};
    }

    bool is_zero() const { return coeffs_.empty(); }
    int valuation() const { return is_zero() ? trunc_ : valuation_; }
    int trunc() const { return trunc_; }
    /// Nonzero stretch, starting at valuation().
    const std::vector<Coeff> &stored() const { return coeffs_; }
    /// One past the highest stored exponent (== valuation() when zero).
    int stored_end() const { return valuation() + static_cast<int>(coeffs_.size()); }

    Coeff coefficient(int e) const
    {
        if (e >= trunc_)
            throw PrecisionExceeded("coefficient of exponent " + std::to_string(e) + " requested, series known below "
                                    + std::to_string(trunc_));
        if (e < valuation_ || e >= stored_end())
            return Coeff{};
        return coeffs_[static_cast<std::size_t>(e - valuation_)];
    }

    const Coeff &leading_coefficient() const
    {
        if (is_zero())
            throw std::domain_error("leading coefficient of a zero series");
        return coeffs_.front();
    }

    /// Multiplication by the exact monomial x^k.
    TruncatedLaurentSeries shifted(int k) const { return {valuation_ + k, coeffs_, trunc_ + k}; }

    /// Forgets every coefficient at exponent >= t (no-op if t >= trunc).
    TruncatedLaurentSeries truncated(int t) const { return {valuation_, coeffs_, std::min(t, trunc_)}; }

    TruncatedLaurentSeries scaled(const GaussianRational &k) const
    {
        std::vector<Coeff> v;
        v.reserve(coeffs_.size());
        for (const auto &c : coeffs_)
            v.push_back(detail::scale(c, k));
        return {valuation_, std::move(v), trunc_};
    }

    template <typename F>
    auto map_coefficients(F f) const
    {
        using Out = std::decay_t<decltype(f(std::declval<const Coeff &>()))>;
        std::vector<Out> v;
        v.reserve(coeffs_.size());
        for (const auto &c : coeffs_)
            v.push_back(f(c));
        return TruncatedLaurentSeries<Out>(valuation_, std::move(v), trunc_);
    }

    TruncatedLaurentSeries operator-() const { return scaled(-1); }

    friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b)
    {
        return add(a, b, false);
    }

    friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b)
    {
        return add(a, b, true);
    }

    /// Naive convolution. The result is known below
    /// min(trunc_a + val_b, trunc_b + val_a).
    friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b)
    {
        const int trunc = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
        if (a.is_zero() || b.is_zero())
            return zero(trunc);
        const int val = a.valuation_ + b.valuation_;
        const int len = std::min(trunc - val, static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1);
        if (len <= 0)
            return zero(trunc);
        std::vector<Coeff> out(static_cast<std::size_t>(len));
        for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<int>(i) < len; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < len; ++j) {
                if (b.coeffs_[j].is_zero())
                    continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return {val, std::move(out), trunc};
    }

    /// Back-substitution inverse. Requires an invertible leading coefficient;
    /// the result has valuation -valuation() and is known below
    /// trunc - 2 * valuation().
    TruncatedLaurentSeries inverse() const
    {
        if (is_zero())
            throw NonUnitLeadingCoefficient("cannot invert a series that is zero to its precision");
        auto lead_inv = invert_unit(coeffs_.front());
        if (!lead_inv)
            throw NonUnitLeadingCoefficient("leading coefficient is not a unit");
        const int precision = trunc_ - valuation_;
        std::vector<Coeff> out;
        out.reserve(static_cast<std::size_t>(precision));
        out.push_back(*lead_inv);
        for (int k = 1; k < precision; ++k) {
            Coeff acc{};
            const int upto = std::min(k, static_cast<int>(coeffs_.size()) - 1);
            for (int j = 1; j <= upto; ++j)
                acc += coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
            out.push_back(-(acc * *lead_inv));
        }
        return {-valuation_, std::move(out), trunc_ - 2 * valuation_};
    }

    /// Repeated squaring; A^k is known below trunc + (k - 1) * valuation.
    TruncatedLaurentSeries pow(unsigned k) const
    {
        TruncatedLaurentSeries result = one(trunc_ - valuation());
        TruncatedLaurentSeries base = *this;
        while (k > 0) {
            if (k & 1u)
                result = result * base;
            k >>= 1u;
            if (k > 0)
                base = base * base;
        }
        return result;
    }

    /// Structural equality: same precision and same known coefficients.
    friend bool operator==(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b)
    {
        return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_ && (a.is_zero() || a.valuation_ == b.valuation_);
    }

private:
    static TruncatedLaurentSeries add(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b, bool negate)
    {
        const int trunc = std::min(a.trunc_, b.trunc_);
        if (a.is_zero() && b.is_zero())
            return zero(trunc);
        const int lo = std::min(a.valuation(), b.valuation());
        const int hi = std::min(trunc, std::max(a.stored_end(), b.stored_end()));
        if (hi <= lo)
            return zero(trunc);
        std::vector<Coeff> out(static_cast<std::size_t>(hi - lo));
        for (int e = std::max(lo, a.valuation()); e < std::min(hi, a.stored_end()); ++e)
            out[static_cast<std::size_t>(e - lo)] += a.coeffs_[static_cast<std::size_t>(e - a.valuation_)];
        for (int e = std::max(lo, b.valuation()); e < std::min(hi, b.stored_end()); ++e) {
            const auto &c = b.coeffs_[static_cast<std::size_t>(e - b.valuation_)];
            if (negate)
                out[static_cast<std::size_t>(e - lo)] -= c;
            else
                out[static_cast<std::size_t>(e - lo)] += c;
        }
        return {lo, std::move(out), trunc};
    }

    void normalize()
    {
        const int keep = std::max(0, std::min(static_cast<int>(coeffs_.size()), trunc_ - valuation_));
        coeffs_.resize(static_cast<std::size_t>(keep));
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero())
            ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            valuation_ += static_cast<int>(lead);
        }
        if (coeffs_.empty())
            valuation_ = trunc_;
    }

    int valuation_ = 0;
    std::vector<Coeff> coeffs_;
    int trunc_ = 0;
};

/// Agreement on every exponent both series know, i.e. below min(trunc_a, trunc_b).
template <typename Coeff>
bool equal_up_to_truncation(const TruncatedLaurentSeries<Coeff> &a, const TruncatedLaurentSeries<Coeff> &b)
{
    const int t = std::min(a.trunc(), b.trunc());
    return a.truncated(t) == b.truncated(t);
}

/// Series in q whose coefficients are Laurent polynomials in y^{1/2}.
using QLaurentSeries = TruncatedLaurentSeries<HalfLaurent>;
/// Series in u over Q(i).
using USeries = TruncatedLaurentSeries<GaussianRational>;

} // namespace k3crc
