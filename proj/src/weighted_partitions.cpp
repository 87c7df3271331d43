#include <k3crc/errors.hpp>
#include <k3crc/laurent_series.hpp>
#include <k3crc/weighted_partitions.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3crc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int age(const Partition &mu)
{
    return mu.size() - mu.length();
}

BasisClass BasisClass::divisor(int k)
{
    if (k < 1)
        throw std::invalid_argument("divisor classes are numbered from 1");
    return BasisClass(Kind::divisor, k);
}

int BasisClass::degree() const
{
    switch (kind_) {
        case Kind::unit:
            return 0;
        case Kind::divisor:
            return 2;
        case Kind::point:
            return 4;
    }
    return -1;
}

std::string BasisClass::label() const
{
    switch (kind_) {
        case Kind::unit:
            return "unit";
        case Kind::divisor:
            return "D_" + std::to_string(index_);
        case Kind::point:
            return "point";
    }
    return "?";
}

std::vector<BasisClass> cohomology_basis(int basis_size)
{
    if (basis_size < 1)
        throw std::invalid_argument("basis size must be >= 1");
    std::vector<BasisClass> basis{BasisClass::unit()};
    for (int k = 1; k <= basis_size - 2; ++k)
        basis.push_back(BasisClass::divisor(k));
    if (basis_size >= 2)
        basis.push_back(BasisClass::point());
    return basis;
}

BasisClass parse_basis_class(const std::string &label)
{
    if (label == "unit")
        return BasisClass::unit();
    if (label == "point")
        return BasisClass::point();
    if (label.rfind("D_", 0) == 0 && label.size() > 2
        && std::all_of(label.begin() + 2, label.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return BasisClass::divisor(std::stoi(label.substr(2)));
    throw std::invalid_argument("unknown basis class '" + label + "'");
}

namespace {

bool canonical_less(const WeightedPartition::Pair &a, const WeightedPartition::Pair &b)
{
    if (a.first != b.first)
        return a.first > b.first;
    return a.second < b.second;
}

} // namespace

WeightedPartition::WeightedPartition(std::vector<Pair> pairs) : pairs_(std::move(pairs))
{
    for (const auto &[part, cls] : pairs_)
        if (part <= 0)
            throw std::invalid_argument("weighted partition parts must be positive");
    std::sort(pairs_.begin(), pairs_.end(), canonical_less);
}

int WeightedPartition::size() const
{
    int n = 0;
    for (const auto &[part, cls] : pairs_)
        n += part;
    return n;
}

Partition WeightedPartition::partition() const
{
    std::vector<int> parts;
    parts.reserve(pairs_.size());
    for (const auto &[part, cls] : pairs_)
        parts.push_back(part);
    return Partition(std::move(parts));
}

std::string WeightedPartition::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        os << (i ? "," : "") << "(" << pairs_[i].first << "," << pairs_[i].second.label() << ")";
    os << ")";
    return os.str();
}

std::strong_ordering operator<=>(const WeightedPartition &a, const WeightedPartition &b)
{
    return std::lexicographical_compare_three_way(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(), b.pairs_.end());
}

WeightedPartition nu_partition(int n)
{
    return WeightedPartition(std::vector<WeightedPartition::Pair>(static_cast<std::size_t>(n), {1, BasisClass::fiber()}));
}

WeightedPartition eta_partition(int n)
{
    if (n < 1)
        throw std::invalid_argument("eta needs n >= 1");
    std::vector<WeightedPartition::Pair> pairs{{1, BasisClass::fiber()}};
    pairs.resize(static_cast<std::size_t>(n), {1, BasisClass::point()});
    return WeightedPartition(std::move(pairs));
}

void for_each_weighted(int n, int basis_size,
                       const std::function<void(const std::vector<WeightedPartition::Pair> &)> &visit)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    const auto basis = cohomology_basis(basis_size);
    const int b = basis_size;
    // Keys in canonical order: key k is (part n - k / b, basis[k % b]).
    // Pairs are emitted with non-decreasing keys.
    std::vector<WeightedPartition::Pair> buffer;
    buffer.reserve(static_cast<std::size_t>(n));
    auto recurse = [&](auto &self, int remaining, int first_key) -> void {
        if (remaining == 0) {
            visit(buffer);
            return;
        }
        for (int key = std::max(first_key, (n - remaining) * b); key < n * b; ++key) {
            buffer.emplace_back(n - key / b, basis[static_cast<std::size_t>(key % b)]);
            self(self, remaining - buffer.back().first, key);
            buffer.pop_back();
        }
    };
    recurse(recurse, n, 0);
}

std::vector<WeightedPartition> enumerate_weighted(int n, int basis_size)
{
    std::vector<WeightedPartition> out;
    for_each_weighted(n, basis_size, [&](const auto &pairs) { out.emplace_back(pairs); });
    return out;
}

std::uint64_t count_weighted(int n, int basis_size)
{
    std::uint64_t count = 0;
    for_each_weighted(n, basis_size, [&](const auto &) { ++count; });
    return count;
}

std::vector<mpz_class> weighted_partition_generating_counts(int n_max, int basis_size)
{
    if (n_max < 0 || basis_size < 1)
        throw std::invalid_argument("need n_max >= 0 and basis_size >= 1");
    const int trunc = n_max + 1;
    auto product = USeries::one(trunc);
    for (int m = 1; m <= n_max; ++m) {
        // (1 - q^m)^basis_size by the binomial theorem.
        std::vector<GaussianRational> factor(static_cast<std::size_t>(trunc));
        for (int j = 0; j <= basis_size && m * j < trunc; ++j) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(basis_size), static_cast<unsigned long>(j));
            factor[static_cast<std::size_t>(m * j)] = GaussianRational(mpq_class(j % 2 ? mpz_class(-c) : c));
        }
        product = product * USeries(0, std::move(factor), trunc);
    }
    const auto inverse = product.inverse();
    std::vector<mpz_class> counts;
    for (int k = 0; k <= n_max; ++k) {
        const auto c = inverse.coefficient(k);
        if (!c.is_integer())
            throw std::logic_error("non-integral partition count");
        counts.push_back(c.re().get_num());
    }
    return counts;
}

bool GottscheReport::ok() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const GottscheEntry &e) { return mpz_class(static_cast<unsigned long>(e.enumerated)) == e.expected; });
}

GottscheReport gottsche_check(int n_max, int basis_size)
{
    if (n_max < 0)
        throw std::invalid_argument("n_max must be >= 0");
    const auto expected = weighted_partition_generating_counts(n_max, basis_size);
    GottscheReport report;
    for (int n = 0; n <= n_max; ++n)
        report.entries.push_back({n, count_weighted(n, basis_size), expected[static_cast<std::size_t>(n)]});
    return report;
}

const char *to_string(FockBasis b)
{
    return b == FockBasis::lambda ? "lambda" : "theta";
}

FockVector::FockVector(FockBasis basis, const WeightedPartition &mu, GaussianRational c) : basis_(basis)
{
    add(mu, c);
}

GaussianRational FockVector::coefficient(const WeightedPartition &mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

void FockVector::add(const WeightedPartition &mu, const GaussianRational &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

FockVector operator+(const FockVector &a, const FockVector &b)
{
    if (a.basis_ != b.basis_)
        throw MixedBasis("cannot add a lambda-basis vector to a theta-basis vector");
    FockVector r = a;
    for (const auto &[mu, c] : b.terms_)
        r.add(mu, c);
    return r;
}

namespace {

FockVector rescale_by_age(const FockVector &v, FockBasis expected, FockBasis target, int sign)
{
    if (v.basis() != expected)
        throw MixedBasis(std::string("expected a ") + to_string(expected) + "-basis vector, got "
                         + to_string(v.basis()));
    FockVector r(target);
    for (const auto &[mu, c] : v.terms())
        r.add(mu, c * GaussianRational::minus_i_pow(sign * mu.age()));
    return r;
}

} // namespace

FockVector apply_L(const FockVector &v)
{
    return rescale_by_age(v, FockBasis::lambda, FockBasis::theta, 1);
}

FockVector apply_L_inverse(const FockVector &v)
{
    return rescale_by_age(v, FockBasis::theta, FockBasis::lambda, -1);
}

} // namespace k3crc
