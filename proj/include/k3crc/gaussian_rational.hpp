#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace k3crc {

/// Renders a rational in lowest terms: "p/q", or "p" when the denominator is 1.
std::string format_rational(const mpq_class &x);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
mpq_class parse_rational(std::string_view text);

/// Exact element re + i*im of Q(i). gmpxx keeps both parts in lowest terms
/// with positive denominators, so equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(int re) : re_(re) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }
    /// (-i)^k for any integer k; cycles through 1, -i, -1, i.
    static GaussianRational minus_i_pow(long k);

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// Throws std::domain_error for zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "a", "a+bi", "bi" with rationals formatted by format_rational.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

inline bool is_zero(const GaussianRational &z) { return z.is_zero(); }

/// Inverse of a series lead coefficient; every nonzero element is a unit.
inline std::optional<GaussianRational> invert_unit(const GaussianRational &z)
{
    if (z.is_zero())
        return std::nullopt;
    return z.inverse();
}

} // namespace k3crc
