#pragma once

#include <k3crc/gaussian_rational.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace k3crc {

enum class Parity { zero, even, odd, mixed };

const char *to_string(Parity p);

/// Laurent polynomial in s = y^{1/2} over Q(i). Exponents are s-exponents:
/// y^k is stored at 2k, y^{1/2} at 1. Zero coefficients are never stored.
class HalfLaurent {
public:
    using Terms = std::map<int, GaussianRational>;

    HalfLaurent() = default;
    HalfLaurent(GaussianRational constant);
    HalfLaurent(int constant) : HalfLaurent(GaussianRational(constant)) {}
    /// Drops zero entries.
    explicit HalfLaurent(Terms terms);

    static HalfLaurent monomial(GaussianRational c, int s_exp);
    static HalfLaurent y_power(int k, GaussianRational c = 1) { return monomial(std::move(c), 2 * k); }

    const Terms &terms() const { return terms_; }
    GaussianRational coefficient(int s_exp) const;
    /// Coefficient of y^k, i.e. of s^{2k}.
    GaussianRational y_coefficient(int k) const { return coefficient(2 * k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    Parity parity() const;
    bool is_palindromic() const;
    bool is_real() const;
    bool has_integer_coefficients() const;

    /// Multiplies by s^shift.
    HalfLaurent shifted(int shift) const;
    HalfLaurent scaled(const GaussianRational &c) const;

    HalfLaurent operator-() const { return scaled(-1); }
    HalfLaurent &operator+=(const HalfLaurent &o);
    HalfLaurent &operator-=(const HalfLaurent &o);

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent &b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent &b) { return a -= b; }
    /// Exact convolution product.
    friend HalfLaurent operator*(const HalfLaurent &a, const HalfLaurent &b);
    HalfLaurent &operator*=(const HalfLaurent &o) { return *this = *this * o; }

    friend bool operator==(const HalfLaurent &a, const HalfLaurent &b) { return a.terms_ == b.terms_; }

    /// Human-readable form in y, e.g. "y^-1 + 2 + y" or "y^1/2 + y^-1/2".
    std::string to_string() const;

private:
    void add_term(int s_exp, const GaussianRational &c);

    Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const HalfLaurent &p);

inline bool is_zero(const HalfLaurent &p) { return p.is_zero(); }

/// Only monomials c*s^k are invertible in the Laurent ring.
std::optional<HalfLaurent> invert_unit(const HalfLaurent &p);

} // namespace k3crc
