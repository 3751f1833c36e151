#pragma once

#include <tuple>
#include <vector>

#include "afschur/affine_perm.hpp"
#include "afschur/composition.hpp"
#include "afschur/periodic_matrix.hpp"

namespace afschur {

/// All elements of the Young subgroup S_lambda (BFS over its generators).
std::vector<AffinePerm> enumerate_parabolic(const Composition& lambda);

/// True iff d is the minimal-length representative of S_lambda d S_mu, i.e.
/// d^{-1} is increasing on lambda-blocks and d is increasing on mu-blocks.
bool is_minimal_double_rep(const Composition& lambda, const AffinePerm& d,
                           const Composition& mu);

struct CosetData {
    AffinePerm d;  ///< minimal representative of S_lambda w S_mu
    AffinePerm u;  ///< u in S_lambda
    AffinePerm s;  ///< s in S_mu, with w = u * d * s and lengths additive
};

/// Decomposes w = u * d * s through the minimal double-coset representative.
CosetData coset_data(const Composition& lambda, const Composition& mu, const AffinePerm& w);

/// All elements of the double coset S_lambda d S_mu (finite).
std::vector<AffinePerm> enumerate_double_coset(const Composition& lambda, const AffinePerm& d,
                                               const Composition& mu);

/// The minimal representatives sigma of S_nu \ S_mu appearing in the unique
/// factorizations w = u d sigma of the double coset indexed by A = jmath(lambda, d, mu);
/// nu is the refinement of mu cut by the columns of A.
std::vector<AffinePerm> coset_tail_reps(const Composition& lambda, const AffinePerm& d,
                                        const Composition& mu);

/// The bijection (lambda, d, mu) -> A = (|R_k^lambda  cap  d R_l^mu|).
/// Throws NotMinimalRep if d is not the minimal double-coset representative.
PeriodicMatrix jmath(const Composition& lambda, const AffinePerm& d, const Composition& mu);

/// Inverse of jmath on Theta_delta(n, r).
std::tuple<Composition, AffinePerm, Composition> jmath_inv(const PeriodicMatrix& A);

/// Minimal-length w with J_lambda o w = j, where J_lambda is the weakly
/// increasing index window of lambda and o is the place action on quasi-
/// periodic index functions (period r, value shift n).  Used to peel tensor
/// vectors; j must have content lambda.
AffinePerm min_coset_rep(const Composition& lambda, const std::vector<long>& index, int n);

/// Content composition of an index window: lambda_i = #{k : j_k = i mod n}.
Composition index_content(const std::vector<long>& index, int n);

/// The index window of x_lambda: lambda_1 ones, lambda_2 twos, ...
std::vector<long> index_of(const Composition& lambda);

/// Place action of w on an index window: (j o w)(k) = J(w(k)) where J is the
/// quasi-periodic extension J(k + r) = J(k) + n.
std::vector<long> index_act(const std::vector<long>& index, int n, const AffinePerm& w);

}  // namespace afschur
