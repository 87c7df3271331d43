#pragma once

#include <k3crc/gaussian_rational.hpp>
#include <k3crc/half_laurent.hpp>
#include <k3crc/laurent_series.hpp>

#include <json.hpp>

namespace k3crc {

// Canonical JSON. Keys keep insertion order; rationals are "p/q" strings
// (or "p" for integers); exponents ascend.
//
//   GaussianRational  {"re": "p/q", "im": "p/q"}
//   HalfLaurent       [{"s_exp": k, "re": ..., "im": ...}, ...]
//   QLaurentSeries    {"valuation": v, "trunc": t, "coeffs": [HalfLaurent, ...]}
//   USeries           {"valuation": v, "trunc": t, "coeffs": [GaussianRational, ...]}
//
// Series coefficient arrays cover every known exponent from the valuation
// up to trunc - 1, so entry i is the coefficient of x^{valuation + i}.
using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational &z);
Json to_json(const HalfLaurent &p);
Json to_json(const QLaurentSeries &s);
Json to_json(const USeries &s);

// The readers throw std::invalid_argument on schema violations.
GaussianRational gaussian_from_json(const Json &j);
HalfLaurent half_laurent_from_json(const Json &j);
QLaurentSeries q_series_from_json(const Json &j);
USeries u_series_from_json(const Json &j);

} // namespace k3crc
