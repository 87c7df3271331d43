#include <k3crc/gaussian_rational.hpp>

#include <cctype>
#include <stdexcept>

namespace k3crc {

std::string format_rational(const mpq_class &x)
{
    mpq_class c(x);
    c.canonicalize();
    return c.get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

mpq_class parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::minus_i_pow(long k)
{
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, -1};
        case 2:
            return {-1, 0};
        default:
            return {0, 1};
    }
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero in Q(i)");
    const mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (is_real())
        return format_rational(re_);
    std::string im_part = im_ == 1 ? "" : im_ == -1 ? "-" : format_rational(im_);
    if (sgn(re_) == 0)
        return im_part + "i";
    return format_rational(re_) + (sgn(im_) > 0 ? "+" : "") + im_part + "i";
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
    return os << z.to_string();
}

} // namespace k3crc
