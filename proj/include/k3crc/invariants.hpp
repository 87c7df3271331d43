#pragma once

#include <k3crc/gaussian_rational.hpp>
#include <k3crc/half_laurent.hpp>
#include <k3crc/jacobi_forms.hpp>
#include <k3crc/laurent_series.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3crc {

/// Curve class beta_h + m A in H_2(S) + Z, where beta_h = B + h F on the
/// elliptic K3 (beta_h^2 = 2h - 2) and A spans the second summand; m is
/// the exponent of y in the Hilb-side generating series.
struct HilbCurveClass {
    HilbCurveClass(int h, int m);
    int h;
    int m;
};

/// Reduced genus-0 Hilb^n invariants keyed by (h, k), k being the
/// coefficient of A. Missing keys with h <= h_max are zero.
class InvariantTable {
public:
    InvariantTable(int n, int h_max);

    int n() const { return n_; }
    int h_max() const { return h_max_; }
    const std::map<std::pair<int, int>, GaussianRational> &entries() const { return entries_; }

    /// Throws std::out_of_range for h outside [0, h_max].
    GaussianRational at(int h, int k) const;
    GaussianRational at(const HilbCurveClass &beta) const { return at(beta.h, beta.m); }
    /// Smallest and largest k with a nonzero entry at this h.
    std::optional<std::pair<int, int>> k_support(int h) const;

    void set(int h, int k, const GaussianRational &value);
    InvariantTable scaled(const GaussianRational &c) const;

private:
    int n_;
    int h_max_;
    std::map<std::pair<int, int>, GaussianRational> entries_;
};

/// <theta(nu), theta(nu)>_{0, (beta_h, k)}: coefficient of y^k q^{h-1} in K_n.
InvariantTable hilb_two_point_table(int n, int h_max);

/// <theta(nu), theta(eta), theta(nu)>_{0, (beta_h, k)}. The eta insertion
/// pairs to 1/n with every beta_h + kA, so the divisor equation scales the
/// two-point table by 1/n.
InvariantTable hilb_three_point_table(int n, int h_max);

/// P_h(y) = sum_k <theta(nu), theta(eta), theta(nu)>_{0, (beta_h, k)} y^k.
HalfLaurent hilb_generating_polynomial(int n, int h);
/// P_0, ..., P_{ord-1} from a single kernel expansion.
std::vector<HalfLaurent> hilb_generating_polynomials(int n, FormOrder ord);

/// True when every entry is a positive integer (expected for n = 1).
bool entries_are_positive_integers(const InvariantTable &table);

/// Global factor relating lambda-basis insertions to the Hilb series.
///   paper:       (-i)^{3n}, verbatim.
///   age_literal: inverse product of the L^{-1} coefficients of theta(nu),
///                theta(eta), theta(nu), i.e. (-i)^{sum of ages} = 1.
enum class SignConvention { paper, age_literal };

const char *to_string(SignConvention s);
/// Accepts "paper" and "age-literal"; throws std::invalid_argument otherwise.
SignConvention parse_sign_convention(const std::string &s);

GaussianRational lambda_insertion_scalar(int n, SignConvention sign);

/// Coefficients of prod_{m>=1} (1 - q^m)^{-exponent} for q^0..q^{terms-1},
/// from the divisor-sum recurrence k a_k = exponent * sum_j sigma(j) a_{k-j}.
std::vector<mpz_class> inverse_euler_power(int exponent, int terms);

struct Thm2Mismatch {
    int h;
    int u_power;
    GaussianRational expected;
    GaussianRational actual;
};

struct Thm2Report {
    int n = 0;
    int q_order = 0;
    int u_order = 0;
    SignConvention sign = SignConvention::paper;
    GaussianRational scalar;
    int terms_checked = 0;
    bool parity_ok = true;
    bool reality_ok = true;
    std::optional<Thm2Mismatch> mismatch;
    /// scalar * substituted P_h for each h < q_order: the Sym-side series.
    std::vector<USeries> sym_series;

    bool consistent() const { return !mismatch && parity_ok && reality_ok; }
};

/// substitute_exponential(P_h) for h < ord.
std::vector<USeries> reassembled_substituted_kernel(int n, FormOrder ord, int u_order);

/// (1/n) K_n at y = -e^{iu}, one u-series per q^{h-1}, h < ord. Evaluated
/// from the product formula in cos u without passing through y:
///   q^{-1} (2 - 2 cos u)^{n-1} prod_m (1 - 2 cos u q^m + q^{2m})^{2n-2} (1 - q^m)^{-4n-20}.
std::vector<USeries> direct_substituted_kernel(int n, FormOrder ord, int u_order);

/// First (h, u-power) where the two per-h series disagree.
std::optional<Thm2Mismatch> first_mismatch(const std::vector<USeries> &expected, const std::vector<USeries> &actual);

/// Checks the reassembled sum_h q^{h-1} substitute(P_h) against the direct
/// substitution of (1/n) K_n term by term, plus reality and u-evenness.
Thm2Report verify_theorem_2(int n, FormOrder ord, SignConvention sign, int u_order = 16);
/// Same check against caller-provided reassembled series.
Thm2Report check_theorem_2(int n, FormOrder ord, SignConvention sign, int u_order, std::vector<USeries> reassembled);

struct YauZaslowEntry {
    int h;
    GaussianRational table_value;
    mpz_class reference;
};

struct YauZaslowReport {
    std::vector<YauZaslowEntry> entries;
    /// Nonzero n = 1 entries off the k = 0 column.
    std::vector<std::pair<int, int>> stray_keys;
    std::optional<int> first_mismatch_h() const;
    bool ok() const { return stray_keys.empty() && !first_mismatch_h(); }
};

/// Compares an n = 1 table with the divisor-sum expansion of 1/Delta.
YauZaslowReport check_yau_zaslow(const InvariantTable &table);
YauZaslowReport verify_yau_zaslow(int h_max);

} // namespace k3crc
