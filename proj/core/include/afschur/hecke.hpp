#pragma once

#include <map>
#include <string>
#include <vector>

#include "afschur/afcomb.hpp"
#include "afschur/affine_perm.hpp"
#include "afschur/laurent.hpp"

namespace afschur {

/// Cap on the number of T_w terms an intermediate Hecke element may carry;
/// exceeding it raises ResourceBound instead of silently grinding.
inline constexpr size_t kHeckeSupportCap = 200000;

/// An element of the extended affine Hecke algebra H_delta(r) in the T_w
/// basis over the extended affine symmetric group.  The multiplication is the
/// bilinear extension of
///   T_w T_s = T_{ws}               if l(ws) > l(w),
///   T_w T_s = (v^2-1) T_w + v^2 T_{ws}  otherwise,
/// together with T_w T_{rho^m} = T_{w rho^m}.
class HeckeElem {
public:
    explicit HeckeElem(int r) : r_(r) {}

    static HeckeElem unit(int r) { return t(AffinePerm(r)); }
    static HeckeElem t(const AffinePerm& w, Laurent c = Laurent(1));
    static HeckeElem t_simple(int r, int i) { return t(AffinePerm::simple(r, i)); }
    /// T~_i = v^{-1} T_i, the normalization used by the rotation lemma.
    static HeckeElem t_tilde(int r, int i) { return t(AffinePerm::simple(r, i), Laurent::v_pow(-1)); }
    static HeckeElem t_rho(int r, long m) { return t(AffinePerm::rho(r, m)); }

    int period() const { return r_; }
    const std::map<AffinePerm, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Laurent coeff(const AffinePerm& w) const;

    HeckeElem operator-() const;
    HeckeElem& operator+=(const HeckeElem& o);
    HeckeElem& operator-=(const HeckeElem& o);
    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
    HeckeElem scaled(const Laurent& c) const;

    HeckeElem operator*(const HeckeElem& o) const;

    /// Right multiplication by T_{s_i} (i in 1..r).
    HeckeElem times_simple(int i) const;
    /// Right multiplication by T_{s_i}^{-1}.
    HeckeElem times_simple_inv(int i) const;
    HeckeElem times_rho(long m) const;

    /// T_w^{-1}, via a reduced word and T_s^{-1} = v^{-2} T_s + (v^{-2}-1) T_e.
    static HeckeElem t_inv(const AffinePerm& w);

    /// The bar involution: v -> v^{-1}, T_w -> T_{w^{-1}}^{-1}.
    HeckeElem bar() const;

    bool operator==(const HeckeElem& o) const { return r_ == o.r_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int r_;
    std::map<AffinePerm, Laurent> terms_;

    void add_term(const AffinePerm& w, const Laurent& c);
    void check_cap() const;
};

/// X_j^{sign} expressed in the T_w basis (sign = +1 or -1); memoized per
/// (r, j, sign) behind a mutex.  X_1^{-1} = T_rho T~_{r-1} ... T~_1 and
/// X_{j+1} = v^{-2} T_j X_j T_j.
HeckeElem x_generator(int r, int j, int sign);

/// The monomial X_1^{e_1} ... X_r^{e_r}.
HeckeElem x_monomial(int r, const std::vector<long>& exponents);

/// The tensor-factor embedding kappa_{r',r''}: H(r') x H(r'') -> H(r'+r''),
/// T_i x 1 -> T_i, X_j x 1 -> X_j, 1 x T_i -> T_{r'+i}, 1 x X_j -> X_{r'+j}.
HeckeElem kappa(const HeckeElem& h1, const HeckeElem& h2);

/// Sum of T_w over the double coset S_lambda d S_mu.
HeckeElem double_coset_sum(const Composition& lambda, const AffinePerm& d,
                           const Composition& mu);

struct TrhoCertificate {
    bool pass = true;
    std::vector<std::string> failures;  // serialized mismatching sides
};

/// Verifies the rotation identities by direct expansion in the T_w basis:
///   (T~_{k-1} ... T~_1 X_1)^k = X_1 X_2 ... X_k   for 1 <= k <= r,
///   T_rho^r = X_1^{-1} X_2^{-1} ... X_r^{-1}.
TrhoCertificate check_trho(int r);

}  // namespace afschur
