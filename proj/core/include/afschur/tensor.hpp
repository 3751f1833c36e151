#pragma once

#include <map>
#include <string>
#include <vector>

#include "afschur/afcomb.hpp"
#include "afschur/hecke.hpp"
#include "afschur/laurent.hpp"

namespace afschur {

/// A quantum-group generator symbol acting on tensor space through zeta_r.
struct Generator {
    enum class Kind { E, F, K, Kinv, Zplus, Zminus };
    Kind kind;
    int i = 1;   // residue index for E/F/K
    long s = 1;  // degree for z_s^{+-}

    static Generator E(int i) { return {Kind::E, i, 0}; }
    static Generator F(int i) { return {Kind::F, i, 0}; }
    static Generator K(int i) { return {Kind::K, i, 0}; }
    static Generator Kinv(int i) { return {Kind::Kinv, i, 0}; }
    static Generator zplus(long s) { return {Kind::Zplus, 1, s}; }
    static Generator zminus(long s) { return {Kind::Zminus, 1, s}; }
};

/// An element of Omega^{x r} for quantum affine sl_n: a finitely supported
/// Laurent combination of basis tensors omega_{i_1} x ... x omega_{i_r} with
/// integer entries.  Carries n because both the Hecke action (through the
/// alcove translation) and the zeta_r action depend on it.
class TensorVec {
public:
    TensorVec(int n, int r) : n_(n), r_(r) {}

    static TensorVec basis(int n, std::vector<long> index, Laurent c = Laurent(1));
    /// x_lambda = v^{l(w_{0,lambda})} omega_{i_lambda}.
    static TensorVec x_vector(int n, const Composition& lambda);

    int n() const { return n_; }
    int rank() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<long>, Laurent>& terms() const { return terms_; }
    Laurent coeff(const std::vector<long>& index) const;

    TensorVec operator-() const;
    TensorVec& operator+=(const TensorVec& o);
    TensorVec& operator-=(const TensorVec& o);
    friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
    friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
    TensorVec scaled(const Laurent& c) const;

    /// Right action of T_k (1 <= k <= r-1).  Entries outside 1..n are first
    /// translated into the fundamental alcove by X-moves and the commutation
    /// rules X_k^{-1}T_k = T_k X_{k+1}^{-1} + (v^2-1) X_k^{-1},
    /// X_k T_k = T_k X_{k+1} - (v^2-1) X_{k+1}.
    TensorVec act_simple(int k) const;
    /// Right action of X_t^e (omega_i X_t^{-1} = omega_{i + n e_t}).
    TensorVec act_x_power(int t, long e) const;
    /// Right action of T_rho^{+-1}.
    TensorVec act_rho(int dir) const;
    /// Right action of an arbitrary Hecke element.
    TensorVec act(const HeckeElem& h) const;

    /// Action of a quantum-group generator via the iterated coproduct; this is
    /// zeta_r(g) as an operator.
    TensorVec act_generator(const Generator& g) const;

    /// Concatenation Omega^{x r1} x Omega^{x r2} = Omega^{x (r1+r2)}.
    static TensorVec tensor(const TensorVec& a, const TensorVec& b);

    /// Decomposes the vector as sum_lambda x_lambda h_lambda by greedy peeling
    /// of leading terms; throws CoordinateExtractionFailed on a residual that
    /// cannot be matched.
    std::map<Composition, HeckeElem> peel() const;

    bool operator==(const TensorVec& o) const {
        return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int n_;
    int r_;
    std::map<std::vector<long>, Laurent> terms_;

    void add_term(const std::vector<long>& index, const Laurent& c);
};

/// One summand of a tensor-factor splitting of a vector in Omega^{x(r'+r'')}.
struct SplitTerm {
    Composition gamma;
    Composition delta;
    HeckeElem h1;
    HeckeElem h2;
};

/// Splits vec in Omega^{x(r'+r'')} along x_gamma H(r') x x_delta H(r'').
/// Reassembling (x_gamma . h1) x (x_delta . h2) over the list reproduces vec.
std::vector<SplitTerm> split(const TensorVec& vec, int r1, int r2);

}  // namespace afschur
