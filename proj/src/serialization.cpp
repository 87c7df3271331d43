#include <k3crc/serialization.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace k3crc {

Json to_json(const GaussianRational &z)
{
    Json j;
    j["re"] = format_rational(z.re());
    j["im"] = format_rational(z.im());
    return j;
}

Json to_json(const HalfLaurent &p)
{
    Json arr = Json::array();
    for (const auto &[e, c] : p.terms()) {
        Json t;
        t["s_exp"] = e;
        t["re"] = format_rational(c.re());
        t["im"] = format_rational(c.im());
        arr.push_back(std::move(t));
    }
    return arr;
}

namespace {

template <typename Coeff>
Json series_to_json(const TruncatedLaurentSeries<Coeff> &s)
{
    Json j;
    j["valuation"] = s.valuation();
    j["trunc"] = s.trunc();
    Json arr = Json::array();
    for (int e = s.valuation(); e < s.trunc(); ++e)
        arr.push_back(to_json(s.coefficient(e)));
    j["coeffs"] = std::move(arr);
    return j;
}

void require(bool ok, const char *what)
{
    if (!ok)
        throw std::invalid_argument(std::string("malformed series JSON: ") + what);
}

template <typename Coeff, typename Reader>
TruncatedLaurentSeries<Coeff> series_from_json(const Json &j, Reader read)
{
    require(j.is_object(), "expected an object");
    require(j.contains("valuation") && j["valuation"].is_number_integer(), "integer 'valuation'");
    require(j.contains("trunc") && j["trunc"].is_number_integer(), "integer 'trunc'");
    require(j.contains("coeffs") && j["coeffs"].is_array(), "array 'coeffs'");
    const int valuation = j["valuation"].get<int>();
    const int trunc = j["trunc"].get<int>();
    require(valuation + static_cast<int>(j["coeffs"].size()) <= trunc, "coefficients beyond trunc");
    std::vector<Coeff> coeffs;
    for (const auto &c : j["coeffs"])
        coeffs.push_back(read(c));
    return {valuation, std::move(coeffs), trunc};
}

} // namespace

Json to_json(const QLaurentSeries &s)
{
    return series_to_json(s);
}

Json to_json(const USeries &s)
{
    return series_to_json(s);
}

GaussianRational gaussian_from_json(const Json &j)
{
    require(j.is_object() && j.contains("re") && j.contains("im"), "expected {\"re\", \"im\"}");
    require(j["re"].is_string() && j["im"].is_string(), "rationals must be strings");
    return {parse_rational(j["re"].get<std::string>()), parse_rational(j["im"].get<std::string>())};
}

HalfLaurent half_laurent_from_json(const Json &j)
{
    require(j.is_array(), "Laurent polynomial must be an array");
    HalfLaurent::Terms terms;
    for (const auto &t : j) {
        require(t.contains("s_exp") && t["s_exp"].is_number_integer(), "integer 's_exp'");
        const int e = t["s_exp"].get<int>();
        require(terms.find(e) == terms.end(), "duplicate s_exp");
        terms.emplace(e, gaussian_from_json(t));
    }
    return HalfLaurent(std::move(terms));
}

QLaurentSeries q_series_from_json(const Json &j)
{
    return series_from_json<HalfLaurent>(j, half_laurent_from_json);
}

USeries u_series_from_json(const Json &j)
{
    return series_from_json<GaussianRational>(j, gaussian_from_json);
}

} // namespace k3crc
