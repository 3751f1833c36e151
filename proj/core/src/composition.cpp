#include "afschur/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace afschur {

namespace {
long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

long ZVector::at(long i) const {
    const long n = period();
    long q = floordiv(i - 1, n);
    return parts_[static_cast<size_t>(i - 1 - q * n)];
}

void ZVector::set(long i, long value) {
    const long n = period();
    long q = floordiv(i - 1, n);
    parts_[static_cast<size_t>(i - 1 - q * n)] = value;
}

long ZVector::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

ZVector ZVector::operator+(const ZVector& o) const {
    if (period() != o.period()) throw PeriodMismatch("ZVector periods differ");
    ZVector z = *this;
    for (size_t i = 0; i < parts_.size(); ++i) z.parts_[i] += o.parts_[i];
    return z;
}

ZVector ZVector::operator-(const ZVector& o) const { return *this + (-o); }

ZVector ZVector::operator-() const {
    ZVector z = *this;
    for (auto& x : z.parts_) x = -x;
    return z;
}

bool ZVector::operator<(const ZVector& o) const {
    if (period() != o.period()) return period() < o.period();
    return parts_ < o.parts_;
}

bool ZVector::is_nonneg() const {
    return std::all_of(parts_.begin(), parts_.end(), [](long x) { return x >= 0; });
}

ZVector ZVector::unit(int n, long i) {
    ZVector z(n);
    z.set(i, 1);
    return z;
}

ZVector ZVector::ones(int n) {
    ZVector z(n);
    for (long i = 1; i <= n; ++i) z.set(i, 1);
    return z;
}

std::string ZVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

long bilinear(const ZVector& a, const ZVector& b) {
    if (a.period() != b.period()) throw PeriodMismatch("bilinear form needs equal periods");
    long s = 0;
    for (long i = 1; i <= a.period(); ++i) s += a.at(i) * (b.at(i) - b.at(i + 1));
    return s;
}

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long x : parts_)
        if (x < 0) throw Error("composition parts must be nonnegative");
}

Composition::Composition(int n) : parts_(static_cast<size_t>(n), 0) {}

long Composition::at(long i) const {
    const long n = period();
    long q = floordiv(i - 1, n);
    return parts_[static_cast<size_t>(i - 1 - q * n)];
}

long Composition::sigma() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

ZVector Composition::to_zvector() const { return ZVector(parts_); }

Composition Composition::from_zvector(const ZVector& z) {
    if (!z.is_nonneg()) throw Error("negative part in composition");
    return Composition(z.parts());
}

long Composition::block_end(long k) const {
    const long n = period();
    long q = floordiv(k - 1, n);
    long i = k - q * n;
    long partial = 0;
    for (long t = 1; t <= i; ++t) partial += parts_[static_cast<size_t>(t - 1)];
    return q * sigma() + partial;
}

long Composition::block_of(long j) const {
    const long r = sigma();
    if (r == 0) throw Error("block_of on an empty composition");
    const long n = period();
    long q = floordiv(j - 1, r);
    for (long i = 1; i <= n; ++i) {
        long k = i + q * n;
        if (block_end(k) >= j) return k;
    }
    throw Error("block_of: internal scan failure");
}

long Composition::pos_in_block(long j) const {
    long k = block_of(j);
    return j - (block_end(k) - at(k));
}

std::vector<int> Composition::young_generators() const {
    const long r = sigma();
    std::vector<int> gens;
    long partial = 0;
    std::vector<bool> boundary(static_cast<size_t>(r + 1), false);
    for (long i = 1; i <= period(); ++i) {
        partial += parts_[static_cast<size_t>(i - 1)];
        if (partial >= 1 && partial <= r) boundary[static_cast<size_t>(partial)] = true;
    }
    for (long i = 1; i < r; ++i)
        if (!boundary[static_cast<size_t>(i)]) gens.push_back(static_cast<int>(i));
    return gens;
}

bool Composition::operator<(const Composition& o) const {
    if (period() != o.period()) return period() < o.period();
    return parts_ < o.parts_;
}

std::string Composition::str() const { return to_zvector().str(); }

std::vector<Composition> enumerate_compositions(int n, long r) {
    std::vector<Composition> out;
    std::vector<long> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, long rest) -> void {
        if (pos == n) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.emplace_back(cur);
            cur[static_cast<size_t>(pos)] = 0;
            return;
        }
        for (long x = 0; x <= rest; ++x) {
            cur[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, rest - x);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    if (n > 0) rec(rec, 0, r);
    return out;
}

}  // namespace afschur
