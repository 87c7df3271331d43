#include <k3crc/half_laurent.hpp>

#include <sstream>

namespace k3crc {

const char *to_string(Parity p)
{
    switch (p) {
        case Parity::zero:
            return "zero";
        case Parity::even:
            return "even";
        case Parity::odd:
            return "odd";
        case Parity::mixed:
            return "mixed";
    }
    return "?";
}

HalfLaurent::HalfLaurent(GaussianRational constant)
{
    add_term(0, constant);
}

HalfLaurent::HalfLaurent(Terms terms)
{
    for (auto &[e, c] : terms)
        add_term(e, c);
}

HalfLaurent HalfLaurent::monomial(GaussianRational c, int s_exp)
{
    HalfLaurent p;
    p.add_term(s_exp, c);
    return p;
}

void HalfLaurent::add_term(int s_exp, const GaussianRational &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(s_exp, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

GaussianRational HalfLaurent::coefficient(int s_exp) const
{
    auto it = terms_.find(s_exp);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

std::optional<int> HalfLaurent::min_exponent() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> HalfLaurent::max_exponent() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

Parity HalfLaurent::parity() const
{
    bool even = false, odd = false;
    for (const auto &[e, c] : terms_)
        (e % 2 == 0 ? even : odd) = true;
    if (even && odd)
        return Parity::mixed;
    if (even)
        return Parity::even;
    return odd ? Parity::odd : Parity::zero;
}

bool HalfLaurent::is_palindromic() const
{
    for (const auto &[e, c] : terms_) {
        auto it = terms_.find(-e);
        if (it == terms_.end() || !(it->second == c))
            return false;
    }
    return true;
}

bool HalfLaurent::is_real() const
{
    for (const auto &[e, c] : terms_)
        if (!c.is_real())
            return false;
    return true;
}

bool HalfLaurent::has_integer_coefficients() const
{
    for (const auto &[e, c] : terms_)
        if (!c.is_integer())
            return false;
    return true;
}

HalfLaurent HalfLaurent::shifted(int shift) const
{
    HalfLaurent r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
}

HalfLaurent HalfLaurent::scaled(const GaussianRational &k) const
{
    HalfLaurent r;
    if (k.is_zero())
        return r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e, c * k);
    return r;
}

HalfLaurent &HalfLaurent::operator+=(const HalfLaurent &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

HalfLaurent &HalfLaurent::operator-=(const HalfLaurent &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

HalfLaurent operator*(const HalfLaurent &a, const HalfLaurent &b)
{
    HalfLaurent r;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

std::string HalfLaurent::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::string coeff = c.to_string();
        const bool negative = c.is_real() && sgn(c.re()) < 0;
        if (!first)
            os << (negative ? " - " : " + ");
        else if (negative)
            os << "-";
        if (negative)
            coeff = (-c).to_string();
        if (!c.is_real())
            coeff = "(" + coeff + ")";
        if (e == 0) {
            os << coeff;
        } else {
            if (coeff != "1")
                os << coeff << "*";
            os << "y";
            if (e != 2)
                os << "^" << (e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2");
        }
        first = false;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const HalfLaurent &p)
{
    return os << p.to_string();
}

std::optional<HalfLaurent> invert_unit(const HalfLaurent &p)
{
    if (!p.is_monomial())
        return std::nullopt;
    const auto &[e, c] = *p.terms().begin();
    return HalfLaurent::monomial(c.inverse(), -e);
}

} // namespace k3crc
