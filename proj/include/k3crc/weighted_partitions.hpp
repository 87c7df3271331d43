#pragma once

#include <k3crc/gaussian_rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3crc {

/// Partition of n: parts sorted non-increasing, all positive.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws std::invalid_argument on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// age(mu) = n - l(mu).
int age(const Partition &mu);

/// Label of a graded basis element of H*(S): the unit (degree 0), a middle
/// class D_k (degree 2), or the point class (degree 4). The designated
/// elliptic-K3 classes are D_1 = B (section) and D_2 = F (fiber).
class BasisClass {
public:
    enum class Kind { unit, divisor, point };

    static BasisClass unit() { return BasisClass(Kind::unit, 0); }
    static BasisClass point() { return BasisClass(Kind::point, 0); }
    /// D_k, k >= 1.
    static BasisClass divisor(int k);
    static BasisClass section() { return divisor(1); }
    static BasisClass fiber() { return divisor(2); }

    Kind kind() const { return kind_; }
    int degree() const;
    std::string label() const;

    /// Ordering unit < D_1 < D_2 < ... < point.
    friend auto operator<=>(const BasisClass &, const BasisClass &) = default;

private:
    BasisClass(Kind kind, int index) : kind_(kind), index_(index) {}

    Kind kind_;
    int index_;
};

/// Basis of size b: unit, D_1, ..., D_{b-2}, point (b = 24 is the K3 lattice
/// 1 + 22 + 1). Size 1 is just the unit, size 2 is unit and point.
std::vector<BasisClass> cohomology_basis(int basis_size);

/// Parse "unit", "point" or "D_k".
BasisClass parse_basis_class(const std::string &label);

/// Multiset of (part, class) pairs held in canonical order: part descending,
/// then class ascending.
class WeightedPartition {
public:
    using Pair = std::pair<int, BasisClass>;

    WeightedPartition() = default;
    explicit WeightedPartition(std::vector<Pair> pairs);

    const std::vector<Pair> &pairs() const { return pairs_; }
    int size() const;
    Partition partition() const;
    int age() const { return k3crc::age(partition()); }

    std::string to_string() const;

    friend bool operator==(const WeightedPartition &, const WeightedPartition &) = default;
    friend std::strong_ordering operator<=>(const WeightedPartition &a, const WeightedPartition &b);

private:
    std::vector<Pair> pairs_;
};

/// n copies of (1, F).
WeightedPartition nu_partition(int n);
/// (1, F) followed by n - 1 copies of (1, point).
WeightedPartition eta_partition(int n);

/// Visits every weighted partition of n over a basis of the given size once,
/// in canonical order, reusing one buffer.
void for_each_weighted(int n, int basis_size, const std::function<void(const std::vector<WeightedPartition::Pair> &)> &visit);
std::vector<WeightedPartition> enumerate_weighted(int n, int basis_size);
std::uint64_t count_weighted(int n, int basis_size);

/// Coefficients of prod_{m>=1} (1 - q^m)^{-basis_size} for q^0..q^{n_max},
/// obtained by inverting the truncated product in the series ring.
std::vector<mpz_class> weighted_partition_generating_counts(int n_max, int basis_size);

struct GottscheEntry {
    int n;
    std::uint64_t enumerated;
    mpz_class expected;
};

struct GottscheReport {
    std::vector<GottscheEntry> entries;
    bool ok() const;
};

/// Compares enumeration counts with the product generating function for
/// every n <= n_max.
GottscheReport gottsche_check(int n_max, int basis_size = 24);

enum class FockBasis { lambda, theta };

const char *to_string(FockBasis b);

/// Formal Q(i)-combination of lambda(mu) labels (orbifold side) or theta(mu)
/// labels (Nakajima side, 1/prod mu_i already absorbed into the label).
/// A vector lives in exactly one of the two bases.
class FockVector {
public:
    explicit FockVector(FockBasis basis) : basis_(basis) {}
    FockVector(FockBasis basis, const WeightedPartition &mu, GaussianRational c = 1);

    FockBasis basis() const { return basis_; }
    const std::map<WeightedPartition, GaussianRational> &terms() const { return terms_; }
    GaussianRational coefficient(const WeightedPartition &mu) const;

    void add(const WeightedPartition &mu, const GaussianRational &c);

    /// Throws MixedBasis when the bases differ.
    friend FockVector operator+(const FockVector &a, const FockVector &b);
    friend bool operator==(const FockVector &, const FockVector &) = default;

private:
    FockBasis basis_;
    std::map<WeightedPartition, GaussianRational> terms_;
};

/// L(lambda(mu)) = (-i)^{age(mu)} theta(mu). Throws MixedBasis on theta input.
FockVector apply_L(const FockVector &v);
/// Inverse of apply_L. Throws MixedBasis on lambda input.
FockVector apply_L_inverse(const FockVector &v);

} // namespace k3crc
