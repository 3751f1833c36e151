#pragma once

#include <string>
#include <vector>

#include "afschur/schur.hpp"

namespace afschur {

/// An element of X = Z_delta^n / Z.1, stored by the representative whose
/// minimal entry is zero.
class XWeight {
public:
    explicit XWeight(const ZVector& v);

    int period() const { return rep_.period(); }
    /// The canonical representative (minimal entry 0).
    const ZVector& rep() const { return rep_; }

    XWeight operator+(const XWeight& o) const;
    bool operator==(const XWeight& o) const { return rep_ == o.rep_; }
    bool operator<(const XWeight& o) const { return rep_ < o.rep_; }

    /// Pairing with mu in Y = {sum mu_i = 0}: mu . lambda-bar = sum lambda_i mu_i.
    long pair_y(const ZVector& mu) const;

    std::string str() const { return rep_.str(); }

private:
    ZVector rep_;
};

/// An index of the canonical basis of the modified quantum group: A in
/// script-Y(n) (aperiodic, A - E not in Theta), with its weight classes.
struct SYIndex {
    PeriodicMatrix matrix;
    XWeight ro_class;
    XWeight co_class;

    explicit SYIndex(PeriodicMatrix A);
};

/// dot-zeta_r(1_lambda-bar): [diag(alpha)] for the unique alpha in
/// Lambda_delta(n, r) in the class, or zero when none exists.
SchurElem dzr_idempotent(const XWeight& lam, long r);

/// dot-zeta_r(b_A): theta_{A + mE, r} when r = sigma(A) + mn with m >= 0,
/// else zero.
SchurElem schur_image_of_b(const SYIndex& A, long r);

/// The comultiplication structure constant h_{A,B,C} of the modified quantum
/// group, computed through the Schur realization: with r' = sigma(B),
/// r'' = sigma(C), h = g^{r',r''}_{A + mE, B, C} when the weight classes
/// compose and r' + r'' - sigma(A) = mn with m >= 0; otherwise 0.
Laurent compute_h(const SYIndex& A, const SYIndex& B, const SYIndex& C);

/// The m used by compute_h (for reporting); -1 when the classes or sigmas
/// do not compose.
long h_shift(const SYIndex& A, const SYIndex& B, const SYIndex& C);

/// The script-Y index of the canonical basis element E_i^{(s)} 1_{beta-bar}.
SYIndex divided_power_index(int n, int i, long s, const XWeight& beta);

struct MonomialDeltaReport {
    bool pass = true;
    long cases = 0;
    std::vector<std::string> failures;
};

/// Independent low-degree confirmation of compute_h: expands
/// Delta(E_i^{(a)}) = sum_{s+t=a} v^{-st} E^{(s)} x K~^s E^{(t)}, projects by
/// the weight idempotents, and compares each resulting coefficient with
/// compute_h on the divided-power indices.  Splittings beta + delta = lambda'
/// run over all representatives lambda' of lam with sigma <= sigma_cap.
MonomialDeltaReport monomial_delta_check(int n, int i, long a, const XWeight& lam,
                                         long sigma_cap);

/// Enumerates script-Y(n) indices with sigma <= sigma_max, support window
/// |j - i| <= spread.
std::vector<SYIndex> enumerate_script_y(int n, long sigma_max, long spread);

}  // namespace afschur
