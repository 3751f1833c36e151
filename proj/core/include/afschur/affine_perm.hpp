#pragma once

#include <compare>
#include <string>
#include <vector>

#include "afschur/errors.hpp"

namespace afschur {

/// An element of the extended affine symmetric group of period r: a bijection
/// w of Z with w(i + r) = w(i) + r, stored by its window (w(1), ..., w(r)).
/// Any window with pairwise distinct residues mod r is allowed; the length-zero
/// shift rho (j -> j+1) is the window (2, ..., r+1).
class AffinePerm {
public:
    /// Identity of period r (r >= 0).
    explicit AffinePerm(int r);

    /// Validates that the entries have distinct residues mod r.
    static AffinePerm from_window(std::vector<long> window);

    /// Simple reflection s_i for 1 <= i <= r; i == r is the wrap-around
    /// reflection exchanging r and r+1 (often written s_0).
    static AffinePerm simple(int r, int i);

    /// rho^m, the window (1+m, ..., r+m).
    static AffinePerm rho(int r, long m = 1);

    int period() const { return static_cast<int>(window_.size()); }
    const std::vector<long>& window() const { return window_; }

    /// Evaluation at any integer via w(i + kr) = w(i) + kr.
    long operator()(long i) const;

    /// Composition of functions: (a * b)(i) = a(b(i)).
    AffinePerm operator*(const AffinePerm& o) const;
    AffinePerm inverse() const;

    bool is_identity() const;

    /// Coxeter length of the extended group:
    ///   l(w) = sum_{1<=i<j<=r} |floor((w(j) - w(i)) / r)|.
    long length() const;

    /// The m with w = rho^m * u, u in the non-extended affine Weyl group.
    long rho_shift() const;

    /// Right descent at i in 1..r: w(i) > w(i+1) (periodically for i == r).
    bool right_descent(int i) const;

    AffinePerm right_simple(int i) const;  // w * s_i
    AffinePerm left_simple(int i) const;   // s_i * w
    AffinePerm rho_right(long m) const;    // w * rho^m
    AffinePerm rho_left(long m) const;     // rho^m * w

    /// Letters i_1...i_k (each in 1..r) with w = rho^{rho_shift()} s_{i_1}...s_{i_k},
    /// k = length(w).  Found by greedy descent stripping (first descent).
    std::vector<int> reduced_word() const;

    /// A second reduced word (last-descent stripping), used to cross-check
    /// word independence of Hecke products.
    std::vector<int> reduced_word_alt() const;

    bool operator==(const AffinePerm& o) const { return window_ == o.window_; }
    bool operator<(const AffinePerm& o) const;

    std::string str() const;

private:
    std::vector<long> window_;

    std::vector<int> strip_word(bool last_descent) const;
};

}  // namespace afschur
