#include <k3crc/crc_transform.hpp>
#include <k3crc/invariants.hpp>
#include <k3crc/weighted_partitions.hpp>

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace k3crc {

HilbCurveClass::HilbCurveClass(int h_, int m_) : h(h_), m(m_)
{
    if (h < 0)
        throw std::invalid_argument("beta_h needs h >= 0");
}

InvariantTable::InvariantTable(int n, int h_max) : n_(n), h_max_(h_max)
{
    if (n < 1 || h_max < 0)
        throw std::invalid_argument("invariant table needs n >= 1 and h_max >= 0");
}

GaussianRational InvariantTable::at(int h, int k) const
{
    if (h < 0 || h > h_max_)
        throw std::out_of_range("h = " + std::to_string(h) + " outside table range [0, " + std::to_string(h_max_) + "]");
    auto it = entries_.find({h, k});
    return it == entries_.end() ? GaussianRational{} : it->second;
}

std::optional<std::pair<int, int>> InvariantTable::k_support(int h) const
{
    auto lo = entries_.lower_bound({h, std::numeric_limits<int>::min()});
    if (lo == entries_.end() || lo->first.first != h)
        return std::nullopt;
    auto hi = std::prev(entries_.upper_bound({h, std::numeric_limits<int>::max()}));
    return std::make_pair(lo->first.second, hi->first.second);
}

void InvariantTable::set(int h, int k, const GaussianRational &value)
{
    if (h < 0 || h > h_max_)
        throw std::out_of_range("h outside table range");
    if (value.is_zero())
        entries_.erase({h, k});
    else
        entries_[{h, k}] = value;
}

InvariantTable InvariantTable::scaled(const GaussianRational &c) const
{
    InvariantTable r(n_, h_max_);
    for (const auto &[key, v] : entries_)
        r.set(key.first, key.second, v * c);
    return r;
}

InvariantTable hilb_two_point_table(int n, int h_max)
{
    InvariantTable table(n, h_max);
    const auto kernel = kernel_series(n, FormOrder(h_max + 1));
    for (int h = 0; h <= h_max; ++h) {
        const auto coeff = kernel.coefficient(h - 1);
        if (coeff.parity() == Parity::odd || coeff.parity() == Parity::mixed)
            throw std::logic_error("kernel coefficient with half-integer powers of y");
        for (const auto &[e, c] : coeff.terms()) {
            if (!c.is_real())
                throw std::logic_error("non-real Hilb invariant at h = " + std::to_string(h));
            table.set(h, e / 2, c);
        }
    }
    return table;
}

InvariantTable hilb_three_point_table(int n, int h_max)
{
    return hilb_two_point_table(n, h_max).scaled(GaussianRational(mpq_class(1, n)));
}

std::vector<HalfLaurent> hilb_generating_polynomials(int n, FormOrder ord)
{
    const auto kernel = kernel_series(n, ord);
    const GaussianRational divisor_factor(mpq_class(1, n));
    std::vector<HalfLaurent> out;
    for (int h = 0; h < ord.value(); ++h)
        out.push_back(kernel.coefficient(h - 1).scaled(divisor_factor));
    return out;
}

HalfLaurent hilb_generating_polynomial(int n, int h)
{
    if (h < 0)
        throw std::invalid_argument("h must be >= 0");
    return hilb_generating_polynomials(n, FormOrder(h + 1)).back();
}

bool entries_are_positive_integers(const InvariantTable &table)
{
    for (const auto &[key, v] : table.entries())
        if (!v.is_integer() || sgn(v.re()) <= 0)
            return false;
    return true;
}

const char *to_string(SignConvention s)
{
    return s == SignConvention::paper ? "paper" : "age-literal";
}

SignConvention parse_sign_convention(const std::string &s)
{
    if (s == "paper")
        return SignConvention::paper;
    if (s == "age-literal")
        return SignConvention::age_literal;
    throw std::invalid_argument("unknown sign convention '" + s + "' (expected paper or age-literal)");
}

GaussianRational lambda_insertion_scalar(int n, SignConvention sign)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (sign == SignConvention::paper)
        return GaussianRational::minus_i_pow(3L * n);
    GaussianRational product = 1;
    for (const auto &mu : {nu_partition(n), eta_partition(n), nu_partition(n)})
        product *= apply_L_inverse(FockVector(FockBasis::theta, mu)).coefficient(mu);
    return product.inverse();
}

std::vector<mpz_class> inverse_euler_power(int exponent, int terms)
{
    if (terms < 0)
        throw std::invalid_argument("terms must be >= 0");
    std::vector<mpz_class> sigma(static_cast<std::size_t>(terms), 0);
    for (int d = 1; d < terms; ++d)
        for (int m = d; m < terms; m += d)
            sigma[static_cast<std::size_t>(m)] += d;
    std::vector<mpz_class> a(static_cast<std::size_t>(terms), 0);
    if (terms > 0)
        a[0] = 1;
    for (int k = 1; k < terms; ++k) {
        mpz_class acc = 0;
        for (int j = 1; j <= k; ++j)
            acc += sigma[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k - j)];
        acc *= exponent;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
        a[static_cast<std::size_t>(k)] = acc;
    }
    return a;
}

std::vector<USeries> reassembled_substituted_kernel(int n, FormOrder ord, int u_order)
{
    std::vector<USeries> out;
    for (const auto &p : hilb_generating_polynomials(n, ord))
        out.push_back(substitute_exponential(p, u_order));
    return out;
}

namespace {

// Dense grid g[q][u] of rationals, truncated in both variables.
using Grid = std::vector<std::vector<mpq_class>>;

Grid grid(int rows, int cols)
{
    return Grid(static_cast<std::size_t>(rows), std::vector<mpq_class>(static_cast<std::size_t>(cols), 0));
}

std::vector<mpq_class> u_product(const std::vector<mpq_class> &a, const std::vector<mpq_class> &b)
{
    std::vector<mpq_class> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < r.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace

std::vector<USeries> direct_substituted_kernel(int n, FormOrder ord, int u_order)
{
    if (n < 1 || u_order < 1)
        throw std::invalid_argument("need n >= 1 and u_order >= 1");
    const int rows = ord.value();
    const auto cols = static_cast<std::size_t>(u_order);

    std::vector<mpq_class> cos_u(cols, 0);
    mpz_class factorial = 1;
    for (std::size_t j = 0; j < cols; ++j) {
        if (j > 0)
            factorial *= static_cast<unsigned long>(j);
        if (j % 2 == 0)
            cos_u[j] = mpq_class((j / 2) % 2 ? -1 : 1, factorial);
    }
    std::vector<mpq_class> minus_two_cos(cols, 0);
    for (std::size_t j = 0; j < cols; ++j)
        minus_two_cos[j] = -2 * cos_u[j];
    std::vector<mpq_class> two_minus_two_cos = minus_two_cos;
    two_minus_two_cos[0] += 2;

    // Row r holds the coefficient of q^{r-1}.
    Grid g = grid(rows, u_order);
    g[0][0] = 1;
    for (int k = 0; k < n - 1; ++k)
        g[0] = u_product(g[0], two_minus_two_cos);

    for (int m = 1; m < rows; ++m) {
        for (int rep = 0; rep < 2 * n - 2; ++rep) {
            // multiply by 1 - 2 cos(u) q^m + q^{2m}, highest rows first
            for (int r = rows - 1; r >= m; --r) {
                const auto shifted = u_product(g[static_cast<std::size_t>(r - m)], minus_two_cos);
                for (std::size_t j = 0; j < cols; ++j)
                    g[static_cast<std::size_t>(r)][j] += shifted[j];
                if (r >= 2 * m)
                    for (std::size_t j = 0; j < cols; ++j)
                        g[static_cast<std::size_t>(r)][j] += g[static_cast<std::size_t>(r - 2 * m)][j];
            }
        }
    }

    const auto eta = inverse_euler_power(4 * n + 20, rows);
    Grid out = grid(rows, u_order);
    for (int r = 0; r < rows; ++r)
        for (int s = 0; s <= r; ++s)
            for (std::size_t j = 0; j < cols; ++j)
                out[static_cast<std::size_t>(r)][j]
                    += mpq_class(eta[static_cast<std::size_t>(s)]) * g[static_cast<std::size_t>(r - s)][j];

    std::vector<USeries> series;
    for (int r = 0; r < rows; ++r) {
        std::vector<GaussianRational> coeffs;
        for (auto &c : out[static_cast<std::size_t>(r)])
            coeffs.emplace_back(mpq_class(c / n));
        series.emplace_back(0, std::move(coeffs), u_order);
    }
    return series;
}

std::optional<Thm2Mismatch> first_mismatch(const std::vector<USeries> &expected, const std::vector<USeries> &actual)
{
    const std::size_t rows = std::max(expected.size(), actual.size());
    for (std::size_t h = 0; h < rows; ++h) {
        if (h >= expected.size() || h >= actual.size())
            return Thm2Mismatch{static_cast<int>(h), 0, {}, {}};
        const auto &a = expected[h];
        const auto &b = actual[h];
        const int trunc = std::min(a.trunc(), b.trunc());
        const int lo = std::min(a.valuation(), b.valuation());
        for (int e = lo; e < trunc; ++e) {
            const auto ca = a.coefficient(e);
            const auto cb = b.coefficient(e);
            if (!(ca == cb))
                return Thm2Mismatch{static_cast<int>(h), e, ca, cb};
        }
    }
    return std::nullopt;
}

Thm2Report check_theorem_2(int n, FormOrder ord, SignConvention sign, int u_order, std::vector<USeries> reassembled)
{
    Thm2Report report;
    report.n = n;
    report.q_order = ord.value();
    report.u_order = u_order;
    report.sign = sign;
    report.scalar = lambda_insertion_scalar(n, sign);

    const auto direct = direct_substituted_kernel(n, ord, u_order);
    report.mismatch = first_mismatch(direct, reassembled);
    for (const auto &s : reassembled) {
        for (int e = s.valuation(); e < s.stored_end(); ++e) {
            const auto c = s.coefficient(e);
            if (c.is_zero())
                continue;
            if (!c.is_real())
                report.reality_ok = false;
            if (e % 2 != 0)
                report.parity_ok = false;
            ++report.terms_checked;
        }
        report.sym_series.push_back(s.scaled(report.scalar));
    }
    return report;
}

Thm2Report verify_theorem_2(int n, FormOrder ord, SignConvention sign, int u_order)
{
    return check_theorem_2(n, ord, sign, u_order, reassembled_substituted_kernel(n, ord, u_order));
}

std::optional<int> YauZaslowReport::first_mismatch_h() const
{
    for (const auto &e : entries)
        if (!(e.table_value == GaussianRational(mpq_class(e.reference))))
            return e.h;
    return std::nullopt;
}

YauZaslowReport check_yau_zaslow(const InvariantTable &table)
{
    if (table.n() != 1)
        throw std::invalid_argument("Yau-Zaslow check applies to the n = 1 table");
    const auto reference = inverse_euler_power(24, table.h_max() + 1);
    YauZaslowReport report;
    for (int h = 0; h <= table.h_max(); ++h)
        report.entries.push_back({h, table.at(h, 0), reference[static_cast<std::size_t>(h)]});
    for (const auto &[key, v] : table.entries())
        if (key.second != 0)
            report.stray_keys.push_back(key);
    return report;
}

YauZaslowReport verify_yau_zaslow(int h_max)
{
    return check_yau_zaslow(hilb_two_point_table(1, h_max));
}

} // namespace k3crc
