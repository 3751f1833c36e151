#pragma once

#include <map>
#include <string>
#include <utility>

#include "afschur/periodic_matrix.hpp"
#include "afschur/tensor.hpp"

namespace afschur {

/// An element of the affine quantum Schur algebra S_delta(n, r), stored as an
/// H-linear endomorphism of tensor space by its values on the generators
/// x_mu, mu in Lambda_delta(n, r).  Only nonzero values are kept.
class SchurElem {
public:
    SchurElem(int n, long r) : n_(n), r_(r) {}

    /// The normalized standard basis element [A]; values are memoized.
    static SchurElem std_basis(const PeriodicMatrix& A, long r);
    static SchurElem identity(int n, long r);
    static SchurElem from_coords(int n, long r, const std::map<PeriodicMatrix, Laurent>& coords);
    /// zeta_r(g) for a quantum-group generator g.
    static SchurElem zeta_generator(int n, long r, const Generator& g);

    int n() const { return n_; }
    long rank() const { return r_; }
    const std::map<Composition, TensorVec>& values() const { return values_; }
    TensorVec value(const Composition& mu) const;
    void set_value(const Composition& mu, TensorVec v);
    bool is_zero() const { return values_.empty(); }

    /// Evaluation on an arbitrary tensor vector through the peel of
    /// vec = sum x_lambda h_lambda.
    TensorVec apply(const TensorVec& vec) const;

    /// Composition of endomorphisms: (a * b)(x) = a(b(x)).
    SchurElem operator*(const SchurElem& o) const;
    SchurElem operator+(const SchurElem& o) const;
    SchurElem operator-(const SchurElem& o) const;
    SchurElem scaled(const Laurent& c) const;

    /// The bar involution induced from the Hecke bar through the coset
    /// realization: x_lambda h |-> x_lambda bar(h) componentwise.
    SchurElem bar() const;

    /// Coordinates in the normalized basis {[A]}; exact, no residual
    /// tolerated (CoordinateExtractionFailed otherwise).
    std::map<PeriodicMatrix, Laurent> coords() const;

    bool operator==(const SchurElem& o) const {
        return n_ == o.n_ && r_ == o.r_ && values_ == o.values_;
    }

    std::string str() const;

private:
    int n_;
    long r_;
    std::map<Composition, TensorVec> values_;
};

/// The normalization exponent d_A of [A] = v^{-d_A} e_A:
///   d_A = sum over pairs { (i,j), (k,l) : 1<=i<=n, i>=k, j<l } of a_{ij} a_{kl}.
long norm_exponent(const PeriodicMatrix& A);

/// Canonical basis coordinates of theta_{A,r}: the unique bar-invariant
/// element [A] + sum_{B} p_B [B] with p_B in v^{-1} Z[v^{-1}], computed by
/// triangular correction over the bar-expansion support closure.  Memoized.
std::map<PeriodicMatrix, Laurent> canonical_basis_coords(const PeriodicMatrix& A, long r);
SchurElem canonical_basis(const PeriodicMatrix& A, long r);

/// zeta_r(theta_A^+) [diag(lambda)] for A in Theta_delta^+(n):
/// theta_{A + diag(lambda - co(A)), r} when lambda - co(A) >= 0, else zero.
SchurElem zeta_theta_plus(const PeriodicMatrix& A, const Composition& lambda, long r);

/// The widening homomorphism iota_{n,N}: [A] -> [A~] coordinatewise.
SchurElem iota(int N, const SchurElem& a);

/// Coefficients of Delta_{r',r''}(a) in the canonical basis of
/// S(n,r') x S(n,r''), solved exactly by triangular elimination against the
/// evaluation vectors of theta_B x theta_C.  The candidate set is discovered
/// from the pivots; a nonzero residual that matches no pivot raises SolveFailed.
std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent> delta_rr(const SchurElem& a,
                                                                      long r1, long r2);

/// The expansion of Delta_{r',r''}(theta_{A,r'+r''}), memoized per (A, r', r'').
std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent> theta_delta_expansion(
    const PeriodicMatrix& A, long r1, long r2);

/// The single comultiplication structure constant g^{r',r''}_{A,B,C}.
Laurent compute_g(const PeriodicMatrix& A, const PeriodicMatrix& B, const PeriodicMatrix& C,
                  long r1, long r2);

/// The positive-part structure constant f_{A,B,C} for A, B, C in Theta^+,
/// extracted through the Schur-level expansion with an auxiliary shift x
/// (x = extra + componentwise-minimal choice).  Returns 0 when
/// d(A) != d(B) + d(C).
Laurent compute_f(const PeriodicMatrix& A, const PeriodicMatrix& B, const PeriodicMatrix& C,
                  long extra = 0);

}  // namespace afschur
