#pragma once

#include <k3crc/half_laurent.hpp>
#include <k3crc/invariants.hpp>
#include <k3crc/laurent_series.hpp>

#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace k3crc {

/// num / den with integer powers of y, kept in canonical form: den is a
/// polynomial with constant term 1 and gcd(num, den) = 1 over Q(i)[y, 1/y].
class RationalFunction {
public:
    /// Canonicalizes. Throws HalfIntegerPower on odd or mixed parity and
    /// ZeroDenominator when den is zero.
    RationalFunction(HalfLaurent num, HalfLaurent den = HalfLaurent(1));

    const HalfLaurent &num() const { return num_; }
    const HalfLaurent &den() const { return den_; }
    bool is_laurent_polynomial() const { return den_ == HalfLaurent(1); }

    /// First `terms` Taylor coefficients at y = 0. Throws std::domain_error if
    /// the numerator has negative y-powers (pole at the origin).
    std::vector<GaussianRational> taylor(int terms) const;

    friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

private:
    HalfLaurent num_;
    HalfLaurent den_;
};

/// Exact Padé reconstruction: the rational function with numerator degree
/// <= d_num and denominator degree <= d_den whose Taylor expansion matches
/// every supplied coefficient. Data that is already a polynomial of degree
/// <= d_num short-circuits to den = 1.
/// Throws std::invalid_argument if taylor.size() < d_num + d_den + 1 and
/// NoSolution if no rational function within the budget matches.
RationalFunction pade_reconstruct(std::span<const GaussianRational> taylor, int d_num, int d_den);

/// Padé reconstruction with a square budget (d, d) starting at `initial` and
/// doubling on NoSolution while d <= cap and the data is long enough.
RationalFunction reconstruct_rational(std::span<const GaussianRational> taylor, int initial, int cap);

/// Random canonical rational function with numerator and denominator degree
/// <= max_degree, small Gaussian-rational coefficients and den(0) != 0.
RationalFunction random_rational_function(std::mt19937_64 &rng, int max_degree);

/// Order of vanishing of p at y = -1, by exact division by (1 + y).
/// p must be nonzero with integer y-powers.
int vanishing_order_at_minus_one(const HalfLaurent &p);

/// p(y) at y = -e^{iu}, expanded at u = 0 and known below u^{u_order}:
/// c y^k contributes c (-1)^k sum_j (i k u)^j / j!.
/// Throws HalfIntegerPower unless p has integer y-powers.
USeries substitute_exponential(const HalfLaurent &p, int u_order);

/// R(y) at y = -e^{iu} as a u-series known below u^{u_order}; poles at
/// y = -1 give a negative valuation. Throws ZeroDenominator if the
/// substituted denominator vanishes to the working order.
USeries substitute_rational(const RationalFunction &r, int u_order);

/// Reads T = u^{total_age - 2n} sum_h N_h u^{2h - 2}: every nonzero
/// coefficient of u^e becomes N_h with h = (e - total_age + 2n + 2) / 2.
/// Throws ParityViolation if some e has the wrong parity.
std::map<int, GaussianRational> sym_invariants_from_useries(const USeries &t, int total_age, int n);

/// Hilb-to-Sym transform for the (nu, eta, nu) insertions in class beta_h:
/// Padé-reconstructs P_h(y) (detecting the Laurent-polynomial case) and
/// substitutes -y = e^{iu}. beta_h is primitive, so the divisibility <= 2
/// hypothesis always holds here.
USeries crc_transform(int n, int h, int u_order);

struct SymInvariantTable {
    int n = 0;
    int h_max = 0;
    int u_order = 0;
    SignConvention sign = SignConvention::paper;
    GaussianRational scalar;
    /// (h, sym genus index) -> invariant.
    std::map<std::pair<int, int>, GaussianRational> entries;
};

/// Sym^n-side invariants <lambda(nu), lambda(eta), lambda(nu)> in class
/// beta_h for h <= h_max, i.e. scalar * crc_transform read through
/// sym_invariants_from_useries with total age 0.
SymInvariantTable sym_three_point_table(int n, int h_max, SignConvention sign, int u_order);

} // namespace k3crc
