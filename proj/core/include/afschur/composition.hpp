#pragma once

#include <string>
#include <vector>

#include "afschur/errors.hpp"

namespace afschur {

/// An element of Z_delta^n: an n-periodic integer vector, stored as one period.
class ZVector {
public:
    explicit ZVector(int n) : parts_(static_cast<size_t>(n), 0) {}
    explicit ZVector(std::vector<long> parts) : parts_(std::move(parts)) {}

    int period() const { return static_cast<int>(parts_.size()); }
    const std::vector<long>& parts() const { return parts_; }

    /// Periodic access, 1-based: at(i) = parts[(i-1) mod n].
    long at(long i) const;
    void set(long i, long value);

    long sum() const;  // sum over one period

    ZVector operator+(const ZVector& o) const;
    ZVector operator-(const ZVector& o) const;
    ZVector operator-() const;
    bool operator==(const ZVector& o) const { return parts_ == o.parts_; }
    bool operator<(const ZVector& o) const;

    bool is_nonneg() const;

    static ZVector unit(int n, long i);  // e_i
    static ZVector ones(int n);

    std::string str() const;

private:
    std::vector<long> parts_;
};

/// The bilinear form <lambda, mu> = sum_i lambda_i mu_i - sum_i lambda_i mu_{i+1}
/// over one period.
long bilinear(const ZVector& a, const ZVector& b);

/// A composition lambda in Lambda_delta(n, r): n-periodic with nonnegative
/// parts, sigma(lambda) = sum of one period.  Carries the index-block
/// combinatorics R^lambda_{i+kn} partitioning Z.
class Composition {
public:
    explicit Composition(std::vector<long> parts);
    Composition(int n);  // zero composition  NOLINT(google-explicit-constructor)

    int period() const { return static_cast<int>(parts_.size()); }
    const std::vector<long>& parts() const { return parts_; }
    long at(long i) const;  // periodic, 1-based
    long sigma() const;

    ZVector to_zvector() const;
    static Composition from_zvector(const ZVector& z);

    /// End of block k: for k = i + qn (1 <= i <= n), q*r + lambda_1+...+lambda_i.
    long block_end(long k) const;
    /// The block index k in Z with j in R^lambda_k.  Pre: sigma() > 0.
    long block_of(long j) const;
    /// 1-based position of j inside its block.
    long pos_in_block(long j) const;

    /// Generators s_i (i in 1..sigma-1) of the Young subgroup: the i that are
    /// not partial sums of lambda.
    std::vector<int> young_generators() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const;

    std::string str() const;

private:
    std::vector<long> parts_;
};

/// All compositions of r into n periodic parts (Lambda_delta(n, r)),
/// in lexicographic order.
std::vector<Composition> enumerate_compositions(int n, long r);

}  // namespace afschur
