#include "afschur/affine_perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace afschur {

namespace {
long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

AffinePerm::AffinePerm(int r) : window_(static_cast<size_t>(r)) {
    std::iota(window_.begin(), window_.end(), 1L);
}

AffinePerm AffinePerm::from_window(std::vector<long> window) {
    const int r = static_cast<int>(window.size());
    std::set<long> residues;
    for (long x : window) residues.insert(((x % r) + r) % (r == 0 ? 1 : r));
    if (r > 0 && static_cast<int>(residues.size()) != r)
        throw Error("window entries must have distinct residues mod r");
    AffinePerm w(r);
    w.window_ = std::move(window);
    return w;
}

AffinePerm AffinePerm::simple(int r, int i) {
    if (i < 1 || i > r) throw Error("simple reflection index out of range");
    AffinePerm w(r);
    if (i < r) {
        std::swap(w.window_[i - 1], w.window_[i]);
    } else {
        w.window_[0] = 0;
        w.window_[r - 1] = r + 1;
    }
    return w;
}

AffinePerm AffinePerm::rho(int r, long m) {
    AffinePerm w(r);
    for (auto& x : w.window_) x += m;
    return w;
}

long AffinePerm::operator()(long i) const {
    const long r = period();
    long q = floordiv(i - 1, r);
    return window_[static_cast<size_t>(i - 1 - q * r)] + q * r;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
    if (period() != o.period()) throw PeriodMismatch("affine permutation periods differ");
    AffinePerm w(period());
    for (int k = 1; k <= period(); ++k)
        w.window_[static_cast<size_t>(k - 1)] = (*this)(o(k));
    return w;
}

AffinePerm AffinePerm::inverse() const {
    const long r = period();
    AffinePerm w(period());
    for (int i = 1; i <= r; ++i) {
        long target = window_[static_cast<size_t>(i - 1)];
        long q = floordiv(target - 1, r);
        long k = target - q * r;  // residue position in 1..r
        // w(i + mr) = target + mr; so the inverse sends k to i - qr.
        w.window_[static_cast<size_t>(k - 1)] = i - q * r;
    }
    return w;
}

bool AffinePerm::is_identity() const {
    for (int i = 1; i <= period(); ++i)
        if (window_[static_cast<size_t>(i - 1)] != i) return false;
    return true;
}

long AffinePerm::length() const {
    const long r = period();
    long len = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            len += std::abs(floordiv(window_[static_cast<size_t>(j - 1)] -
                                         window_[static_cast<size_t>(i - 1)],
                                     r));
    return len;
}

long AffinePerm::rho_shift() const {
    const long r = period();
    if (r == 0) return 0;
    long s = 0;
    for (int i = 1; i <= r; ++i) s += window_[static_cast<size_t>(i - 1)] - i;
    if (s % r != 0) throw Error("window sum not a multiple of r");
    return s / r;
}

bool AffinePerm::right_descent(int i) const {
    return (*this)(i) > (*this)(i + 1);
}

AffinePerm AffinePerm::right_simple(int i) const {
    const int r = period();
    AffinePerm w = *this;
    if (i < r) {
        std::swap(w.window_[static_cast<size_t>(i - 1)], w.window_[static_cast<size_t>(i)]);
    } else {
        long first = window_[static_cast<size_t>(r - 1)] - r;
        long last = window_[0] + r;
        w.window_[0] = first;
        w.window_[static_cast<size_t>(r - 1)] = last;
    }
    return w;
}

AffinePerm AffinePerm::left_simple(int i) const {
    const long r = period();
    AffinePerm w = *this;
    long ri = ((i % r) + r) % r;              // residue class of i
    long rj = (((i + 1) % r) + r) % r;        // residue class of i+1
    for (auto& x : w.window_) {
        long res = ((x % r) + r) % r;
        if (res == ri)
            x += 1;
        else if (res == rj)
            x -= 1;
    }
    return w;
}

AffinePerm AffinePerm::rho_right(long m) const {
    AffinePerm w(period());
    for (int k = 1; k <= period(); ++k) w.window_[static_cast<size_t>(k - 1)] = (*this)(k + m);
    return w;
}

AffinePerm AffinePerm::rho_left(long m) const {
    AffinePerm w = *this;
    for (auto& x : w.window_) x += m;
    return w;
}

std::vector<int> AffinePerm::strip_word(bool last_descent) const {
    const int r = period();
    AffinePerm u = rho_left(-rho_shift());  // rho^{-m} w lies in the affine Weyl group
    std::vector<int> word;
    long len = u.length();
    while (len > 0) {
        int found = 0;
        for (int i = 1; i <= r; ++i) {
            if (u.right_descent(i)) {
                found = i;
                if (!last_descent) break;
            }
        }
        if (found == 0) throw Error("no descent on a positive-length element");
        word.insert(word.begin(), found);
        u = u.right_simple(found);
        --len;
    }
    return word;
}

std::vector<int> AffinePerm::reduced_word() const { return strip_word(false); }
std::vector<int> AffinePerm::reduced_word_alt() const { return strip_word(true); }

bool AffinePerm::operator<(const AffinePerm& o) const {
    if (period() != o.period()) return period() < o.period();
    return window_ < o.window_;
}

std::string AffinePerm::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < window_.size(); ++k) {
        if (k) os << ",";
        os << window_[k];
    }
    os << "]";
    return os.str();
}

}  // namespace afschur
