#include "afschur/periodic_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace afschur {

namespace {
long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}
long ceildiv(long a, long b) { return -floordiv(-a, b); }
}  // namespace

PeriodicMatrix PeriodicMatrix::unit(int n, long i, long j, long a) {
    PeriodicMatrix m(n);
    m.add_at(i, j, a);
    return m;
}

PeriodicMatrix PeriodicMatrix::diagonal(const ZVector& d) {
    PeriodicMatrix m(d.period());
    for (long i = 1; i <= d.period(); ++i) m.add_at(i, i, d.at(i));
    return m;
}

PeriodicMatrix PeriodicMatrix::diagonal(const Composition& d) {
    return diagonal(d.to_zvector());
}

PeriodicMatrix PeriodicMatrix::identity(int n) { return diagonal(ZVector::ones(n)); }

long PeriodicMatrix::at(long i, long j) const {
    long q = floordiv(i - 1, n_);
    auto it = band_.find({i - q * n_, j - q * n_});
    return it == band_.end() ? 0 : it->second;
}

void PeriodicMatrix::add_at(long i, long j, long delta) {
    if (delta == 0) return;
    long q = floordiv(i - 1, n_);
    auto key = std::make_pair(i - q * n_, j - q * n_);
    long v = (band_[key] += delta);
    if (v == 0) band_.erase(key);
}

long PeriodicMatrix::sigma() const {
    long s = 0;
    for (const auto& [k, v] : band_) s += v;
    return s;
}

ZVector PeriodicMatrix::row_sums() const {
    ZVector ro(n_);
    for (const auto& [k, v] : band_) ro.set(k.first, ro.at(k.first) + v);
    return ro;
}

ZVector PeriodicMatrix::col_sums() const {
    ZVector co(n_);
    for (const auto& [k, v] : band_) co.set(k.second, co.at(k.second) + v);
    return co;
}

bool PeriodicMatrix::is_theta() const {
    return std::all_of(band_.begin(), band_.end(),
                       [](const auto& e) { return e.second > 0; });
}

bool PeriodicMatrix::is_theta_plus() const {
    return is_theta() && std::all_of(band_.begin(), band_.end(), [](const auto& e) {
               return e.first.first < e.first.second;
           });
}

ZVector PeriodicMatrix::hook_sums() const {
    if (!is_theta_plus()) throw NotUpperTriangular("hook sums need A in Theta_delta^+");
    ZVector d(n_);
    for (const auto& [key, v] : band_) {
        const auto& [s0, t0] = key;
        // Copies (s0 + kn, t0 + kn) contribute to d_i exactly when
        // s0 + kn <= i < t0 + kn.
        for (long i = 1; i <= n_; ++i) {
            long kmax = floordiv(i - s0, n_);
            long kmin = ceildiv(i + 1 - t0, n_);
            if (kmax >= kmin) d.set(i, d.at(i) + v * (kmax - kmin + 1));
        }
    }
    return d;
}

bool PeriodicMatrix::is_aperiodic() const {
    std::set<long> diagonals;
    for (const auto& [k, v] : band_)
        if (k.second != k.first) diagonals.insert(k.second - k.first);
    for (long l : diagonals) {
        bool has_zero = false;
        for (long i = 1; i <= n_; ++i)
            if (at(i, i + l) == 0) {
                has_zero = true;
                break;
            }
        if (!has_zero) return false;
    }
    return true;
}

bool PeriodicMatrix::in_script_y() const {
    if (!is_aperiodic()) return false;
    for (long i = 1; i <= n_; ++i)
        if (at(i, i) == 0) return true;
    return false;
}

PeriodicMatrix PeriodicMatrix::eta(long m) const {
    PeriodicMatrix out(n_);
    for (const auto& [k, v] : band_) out.add_at(k.first, k.second - m * n_, v);
    return out;
}

PeriodicMatrix PeriodicMatrix::tilde(int N) const {
    if (N < n_) throw BadRanks("tilde requires N >= n");
    PeriodicMatrix out(N);
    for (const auto& [key, v] : band_) {
        const auto& [i, j] = key;  // 1 <= i <= n
        long m = floordiv(j - 1, n_);
        long l = j - m * n_;  // 1 <= l <= n
        out.add_at(i, l + m * N, v);
    }
    return out;
}

PeriodicMatrix PeriodicMatrix::operator+(const PeriodicMatrix& o) const {
    if (n_ != o.n_) throw PeriodMismatch("matrix periods differ");
    PeriodicMatrix out = *this;
    for (const auto& [k, v] : o.band_) out.add_at(k.first, k.second, v);
    return out;
}

PeriodicMatrix PeriodicMatrix::plus_diag(const ZVector& d) const {
    return *this + diagonal(d);
}

PeriodicMatrix PeriodicMatrix::scaled(long c) const {
    PeriodicMatrix out(n_);
    if (c != 0)
        for (const auto& [k, v] : band_) out.add_at(k.first, k.second, c * v);
    return out;
}

bool PeriodicMatrix::operator<(const PeriodicMatrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return band_ < o.band_;
}

std::string PeriodicMatrix::str() const {
    std::ostringstream os;
    os << "{n=" << n_;
    for (const auto& [k, v] : band_) os << " (" << k.first << "," << k.second << ")=" << v;
    os << "}";
    return os.str();
}

namespace {

// Corner sum sum_{s <= i, t >= j} a_{s,t}, finite for j > i when A has finite
// band support.
long upper_corner(const PeriodicMatrix& A, long i, long j) {
    long s = 0;
    for (const auto& [k, v] : A.band()) {
        long kmax = floordiv(i - k.first, A.period());
        long kmin = ceildiv(j - k.second, A.period());
        if (kmax >= kmin) s += v * (kmax - kmin + 1);
    }
    return s;
}

// Corner sum sum_{s >= i, t <= j} a_{s,t}, finite for j < i.
long lower_corner(const PeriodicMatrix& A, long i, long j) {
    long s = 0;
    for (const auto& [k, v] : A.band()) {
        long kmin = ceildiv(i - k.first, A.period());
        long kmax = floordiv(j - k.second, A.period());
        if (kmax >= kmin) s += v * (kmax - kmin + 1);
    }
    return s;
}

long band_reach(const PeriodicMatrix& A) {
    long reach = 0;
    for (const auto& [k, v] : A.band())
        reach = std::max(reach, std::abs(k.second - k.first));
    return reach;
}

}  // namespace

bool order_leq(const PeriodicMatrix& B, const PeriodicMatrix& A) {
    if (B.period() != A.period()) throw PeriodMismatch("matrix periods differ");
    if (!(B.row_sums() == A.row_sums()) || !(B.col_sums() == A.col_sums()))
        throw ProfileMismatch("order_leq requires equal row and column sums");
    const long n = A.period();
    const long reach = std::max(band_reach(A), band_reach(B)) + 1;
    for (long i = 1; i <= n; ++i) {
        for (long j = i + 1; j <= i + reach; ++j)
            if (upper_corner(B, i, j) > upper_corner(A, i, j)) return false;
        for (long j = i - reach; j < i; ++j)
            if (lower_corner(B, i, j) > lower_corner(A, i, j)) return false;
    }
    return true;
}

std::vector<PeriodicMatrix> enumerate_theta(int n, long r, long spread) {
    // Cells in row-major order; assignments generated in lexicographic order.
    std::vector<std::pair<long, long>> cells;
    for (long i = 1; i <= n; ++i)
        for (long j = i - spread; j <= i + spread; ++j) cells.emplace_back(i, j);
    std::vector<PeriodicMatrix> out;
    std::vector<long> cur(cells.size(), 0);
    auto rec = [&](auto&& self, size_t pos, long rest) -> void {
        if (pos == cells.size()) {
            if (rest == 0) {
                PeriodicMatrix m(n);
                for (size_t c = 0; c < cells.size(); ++c)
                    m.add_at(cells[c].first, cells[c].second, cur[c]);
                out.push_back(std::move(m));
            }
            return;
        }
        for (long x = 0; x <= rest; ++x) {
            cur[pos] = x;
            self(self, pos + 1, rest - x);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, r);
    return out;
}

std::vector<PeriodicMatrix> enumerate_theta_plus_hooks(int n, const ZVector& d, long spread) {
    std::vector<std::pair<long, long>> cells;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= i + spread; ++j) cells.emplace_back(i, j);
    // Entries are bounded by max d_i, so a plain product scan is fine here.
    long cap = 0;
    for (long x : d.parts()) cap = std::max(cap, x);
    std::vector<PeriodicMatrix> out;
    std::vector<long> cur(cells.size(), 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == cells.size()) {
            PeriodicMatrix m(n);
            for (size_t c = 0; c < cells.size(); ++c)
                m.add_at(cells[c].first, cells[c].second, cur[c]);
            if (m.is_theta_plus() && m.hook_sums() == d) out.push_back(std::move(m));
            return;
        }
        for (long x = 0; x <= cap; ++x) {
            cur[pos] = x;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    if (d.is_nonneg()) rec(rec, 0);
    return out;
}

std::vector<PeriodicMatrix> enumerate_theta_plus_aperiodic(int n, long sigma_max, long spread) {
    std::vector<std::pair<long, long>> cells;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= i + spread; ++j) cells.emplace_back(i, j);
    std::vector<PeriodicMatrix> out;
    std::vector<long> cur(cells.size(), 0);
    auto rec = [&](auto&& self, size_t pos, long rest) -> void {
        if (pos == cells.size()) {
            PeriodicMatrix m(n);
            for (size_t c = 0; c < cells.size(); ++c)
                m.add_at(cells[c].first, cells[c].second, cur[c]);
            if (m.is_aperiodic()) out.push_back(std::move(m));
            return;
        }
        for (long x = 0; x <= rest; ++x) {
            cur[pos] = x;
            self(self, pos + 1, rest - x);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, sigma_max);
    return out;
}

}  // namespace afschur
