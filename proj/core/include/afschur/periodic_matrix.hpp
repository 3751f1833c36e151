#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "afschur/composition.hpp"
#include "afschur/errors.hpp"

namespace afschur {

/// A matrix A = (a_{i,j})_{i,j in Z} with a_{i+n,j+n} = a_{i,j} and finite
/// support per row and column, stored as the fundamental band of rows 1..n.
/// Entries are integers; membership in Theta_delta(n) (all entries >= 0) and
/// Theta_delta^+(n) (strictly upper triangular) are predicates, not invariants
/// of the type.
class PeriodicMatrix {
public:
    explicit PeriodicMatrix(int n) : n_(n) {}

    /// a * E^delta_{i,j}; the row index is reduced into 1..n.
    static PeriodicMatrix unit(int n, long i, long j, long a = 1);
    static PeriodicMatrix diagonal(const ZVector& d);
    static PeriodicMatrix diagonal(const Composition& d);
    /// The identity matrix E.
    static PeriodicMatrix identity(int n);

    int period() const { return n_; }
    long at(long i, long j) const;
    void add_at(long i, long j, long delta);

    /// Band entries (i, j, a_ij) with 1 <= i <= n, sorted row-major.
    const std::map<std::pair<long, long>, long>& band() const { return band_; }

    long sigma() const;
    ZVector row_sums() const;  // ro(A)
    ZVector col_sums() const;  // co(A)

    bool is_theta() const;        // all entries >= 0
    bool is_theta_plus() const;   // in Theta and a_{i,j} = 0 for i >= j
    /// Hook sums d(A)_i = sum_{s<=i, t>=i+1} a_{s,t}; throws NotUpperTriangular
    /// unless A lies in Theta_delta^+.
    ZVector hook_sums() const;

    bool is_aperiodic() const;
    /// A aperiodic and A - E not in Theta_delta(n) (some diagonal entry zero).
    bool in_script_y() const;

    /// eta_m: (a_{i,j}) -> (a_{i, j+mn}); shifts the support by -mn columns.
    PeriodicMatrix eta(long m) const;
    /// The widening map into Theta_delta(N): a~_{k, l+mN} = a_{k, l+mn} for
    /// 1 <= k, l <= n, zero on the new rows/columns.  Throws BadRanks if N < n.
    PeriodicMatrix tilde(int N) const;

    PeriodicMatrix operator+(const PeriodicMatrix& o) const;
    PeriodicMatrix plus_diag(const ZVector& d) const;
    PeriodicMatrix scaled(long c) const;

    bool operator==(const PeriodicMatrix& o) const {
        return n_ == o.n_ && band_ == o.band_;
    }
    bool operator<(const PeriodicMatrix& o) const;

    std::string str() const;

private:
    int n_;
    std::map<std::pair<long, long>, long> band_;  // keys (i, j), 1 <= i <= n, value != 0
};

/// The Bruhat-type partial order on Theta_delta(n, r): B <= A iff all
/// upper-right corner sums (i < j) and lower-left corner sums (i > j) of B are
/// dominated by those of A.  Requires ro(B) = ro(A) and co(B) = co(A).
bool order_leq(const PeriodicMatrix& B, const PeriodicMatrix& A);

/// All A in Theta_delta(n, r) with support in the window |j - i| <= spread,
/// in lexicographic order of the band read row-major.
std::vector<PeriodicMatrix> enumerate_theta(int n, long r, long spread);

/// All A in Theta_delta^+(n) with hook-sum vector d(A) = d and support in
/// |j - i| <= spread (spread >= 1 for nonzero d), lexicographic order.
std::vector<PeriodicMatrix> enumerate_theta_plus_hooks(int n, const ZVector& d, long spread);

/// All aperiodic A in Theta_delta^+(n) with sigma(A) <= sigma_max and support
/// in |j - i| <= spread.
std::vector<PeriodicMatrix> enumerate_theta_plus_aperiodic(int n, long sigma_max, long spread);

}  // namespace afschur
