#include "afschur/schur.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace afschur {

namespace {

long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}
long ceildiv(long a, long b) { return -floordiv(-a, b); }

using Coords = std::map<PeriodicMatrix, Laurent>;
using MatrixKey = std::pair<long, PeriodicMatrix>;  // (r, A)

struct SchurCaches {
    std::mutex mutex;
    std::map<MatrixKey, TensorVec> std_values;  // the single nonzero value of [A]
    std::map<MatrixKey, Coords> bar_coords;     // coords of bar([A])
    std::map<MatrixKey, Coords> cb_coords;      // coords of theta_{A,r}
    std::map<MatrixKey, TensorVec> cb_values;   // theta_{A,r}(x_{co(A)})
    std::map<std::pair<std::pair<long, long>, PeriodicMatrix>,
             std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent>>
        delta;  // ((r', r''), A) -> expansion of theta_{A, r'+r''}
};

SchurCaches& caches() {
    static SchurCaches c;
    return c;
}

template <typename Map, typename Key, typename Fn>
auto memoized(Map& map, const Key& key, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(caches().mutex);
        auto it = map.find(key);
        if (it != map.end()) return it->second;
    }
    auto value = compute();
    std::lock_guard<std::mutex> lock(caches().mutex);
    return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

long norm_exponent(const PeriodicMatrix& A) {
    const long n = A.period();
    long d = 0;
    for (const auto& [p1, a1] : A.band()) {
        const auto& [i, j] = p1;
        for (const auto& [p2, a2] : A.band()) {
            const auto& [k0, l0] = p2;
            // copies (k0 + sn, l0 + sn) with k0 + sn <= i and l0 + sn > j
            long smax = floordiv(i - k0, n);
            long smin = ceildiv(j + 1 - l0, n);
            if (smax >= smin) d += a1 * a2 * (smax - smin + 1);
        }
    }
    return d;
}

TensorVec SchurElem::value(const Composition& mu) const {
    auto it = values_.find(mu);
    if (it != values_.end()) return it->second;
    return TensorVec(n_, static_cast<int>(r_));
}

void SchurElem::set_value(const Composition& mu, TensorVec v) {
    if (v.is_zero())
        values_.erase(mu);
    else
        values_.insert_or_assign(mu, std::move(v));
}

SchurElem SchurElem::std_basis(const PeriodicMatrix& A, long r) {
    if (A.sigma() != r) throw SigmaMismatch("sigma(A) differs from r");
    if (!A.is_theta()) throw Error("[A] requires A in Theta_delta(n, r)");
    auto key = std::make_pair(r, A);
    TensorVec value = memoized(caches().std_values, key, [&]() {
        auto [lambda, d, mu] = jmath_inv(A);
        HeckeElem h(static_cast<int>(r));
        for (const AffinePerm& s : coset_tail_reps(lambda, d, mu)) {
            AffinePerm ds = d * s;
            if (ds.length() != d.length() + s.length())
                throw Error("double coset tail with non-additive length");
            h += HeckeElem::t(ds);
        }
        return TensorVec::x_vector(A.period(), lambda)
            .act(h)
            .scaled(Laurent::v_pow(-norm_exponent(A)));
    });
    SchurElem e(A.period(), r);
    e.set_value(Composition::from_zvector(A.col_sums()), std::move(value));
    return e;
}

SchurElem SchurElem::identity(int n, long r) {
    SchurElem e(n, r);
    for (const Composition& mu : enumerate_compositions(n, r))
        e.set_value(mu, TensorVec::x_vector(n, mu));
    return e;
}

SchurElem SchurElem::from_coords(int n, long r, const Coords& coords) {
    SchurElem e(n, r);
    for (const auto& [A, c] : coords) {
        if (c.is_zero()) continue;
        SchurElem base = std_basis(A, r);
        e = e + base.scaled(c);
    }
    return e;
}

SchurElem SchurElem::zeta_generator(int n, long r, const Generator& g) {
    SchurElem e(n, r);
    for (const Composition& mu : enumerate_compositions(n, r))
        e.set_value(mu, TensorVec::x_vector(n, mu).act_generator(g));
    return e;
}

TensorVec SchurElem::apply(const TensorVec& vec) const {
    TensorVec out(n_, static_cast<int>(r_));
    for (const auto& [lambda, h] : vec.peel()) {
        auto it = values_.find(lambda);
        if (it == values_.end()) continue;
        out += it->second.act(h);
    }
    return out;
}

SchurElem SchurElem::operator*(const SchurElem& o) const {
    if (n_ != o.n_ || r_ != o.r_) throw RankMismatch("Schur elements live in different algebras");
    SchurElem out(n_, r_);
    for (const auto& [mu, y] : o.values_) out.set_value(mu, apply(y));
    return out;
}

SchurElem SchurElem::operator+(const SchurElem& o) const {
    if (n_ != o.n_ || r_ != o.r_) throw RankMismatch("Schur elements live in different algebras");
    SchurElem out = *this;
    for (const auto& [mu, y] : o.values_) out.set_value(mu, out.value(mu) + y);
    return out;
}

SchurElem SchurElem::operator-(const SchurElem& o) const { return *this + o.scaled(Laurent(-1)); }

SchurElem SchurElem::scaled(const Laurent& c) const {
    SchurElem out(n_, r_);
    if (c.is_zero()) return out;
    for (const auto& [mu, y] : values_) out.set_value(mu, y.scaled(c));
    return out;
}

SchurElem SchurElem::bar() const {
    SchurElem out(n_, r_);
    for (const auto& [mu, y] : values_) {
        TensorVec img(n_, static_cast<int>(r_));
        for (const auto& [lambda, h] : y.peel())
            img += TensorVec::x_vector(n_, lambda).act(h.bar());
        out.set_value(mu, std::move(img));
    }
    return out;
}

Coords SchurElem::coords() const {
    Coords out;
    for (const auto& [mu, y] : values_) {
        auto mgens = mu.young_generators();
        for (const auto& [lambda, h] : y.peel()) {
            // Group the peeled terms by the minimal double-coset representative.
            std::map<AffinePerm, std::map<AffinePerm, Laurent>> groups;
            for (const auto& [w, c] : h.terms()) {
                AffinePerm d0 = w;
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (int i : mgens)
                        if (d0(i) > d0(i + 1)) {
                            d0 = d0.right_simple(i);
                            changed = true;
                            break;
                        }
                }
                groups[d0].emplace(w, c);
            }
            for (const auto& [d0, members] : groups) {
                PeriodicMatrix A = jmath(lambda, d0, mu);
                size_t expected = coset_tail_reps(lambda, d0, mu).size();
                if (members.size() != expected)
                    throw CoordinateExtractionFailed("incomplete coset block for " + A.str());
                const Laurent& c = members.begin()->second;
                for (const auto& [w, cw] : members)
                    if (!(cw == c))
                        throw CoordinateExtractionFailed("uneven coset coefficients for " + A.str());
                Laurent coord = c * Laurent::v_pow(norm_exponent(A));
                if (!coord.is_zero()) out[A] = coord;
            }
        }
    }
    return out;
}

std::string SchurElem::str() const {
    std::ostringstream os;
    os << "Schur(n=" << n_ << ",r=" << r_ << ")";
    for (const auto& [mu, y] : values_) os << " x_" << mu.str() << " -> " << y.str() << ";";
    return os.str();
}

namespace {

Coords bar_coords_of_std(const PeriodicMatrix& A, long r) {
    auto key = std::make_pair(r, A);
    return memoized(caches().bar_coords, key,
                    [&]() { return SchurElem::std_basis(A, r).bar().coords(); });
}

Coords compute_cb_coords(const PeriodicMatrix& A, long r) {
    // Close the support under bar expansion.
    std::set<PeriodicMatrix> support{A};
    std::vector<PeriodicMatrix> queue{A};
    while (!queue.empty()) {
        PeriodicMatrix B = queue.back();
        queue.pop_back();
        for (const auto& [C, c] : bar_coords_of_std(B, r)) {
            if (support.insert(C).second) queue.push_back(C);
        }
    }
    // Topological order of the bar-expansion DAG (edges B -> C for C in
    // supp(bar[B]) \ {B}); a cycle means the triangularity assumption failed.
    std::map<PeriodicMatrix, int> indeg;
    std::map<PeriodicMatrix, std::vector<PeriodicMatrix>> above;  // C -> the Bs it feeds
    for (const auto& B : support) {
        indeg.try_emplace(B, 0);
        const Coords& bc = bar_coords_of_std(B, r);
        if (bc.find(B) == bc.end() || !(bc.at(B) == Laurent(1)))
            throw TriangularityViolation("bar([A]) is not unitriangular at " + B.str());
        for (const auto& [C, c] : bc) {
            if (C == B) continue;
            above[C].push_back(B);
            indeg[B] += 1;
        }
    }
    std::vector<PeriodicMatrix> topo;  // lowest first
    std::vector<PeriodicMatrix> ready;
    for (const auto& [B, deg] : indeg)
        if (deg == 0) ready.push_back(B);
    while (!ready.empty()) {
        PeriodicMatrix B = ready.back();
        ready.pop_back();
        topo.push_back(B);
        for (const auto& up : above[B])
            if (--indeg[up] == 0) ready.push_back(up);
    }
    if (topo.size() != support.size())
        throw TriangularityViolation("bar-expansion support has a cycle");
    std::map<PeriodicMatrix, size_t> rank;
    for (size_t i = 0; i < topo.size(); ++i) rank[topo[i]] = i;

    // Lusztig's correction: repeatedly cancel the topologically highest
    // residual coefficient with its v^{-1}Z[v^{-1}] solution.
    Coords theta{{A, Laurent(1)}};
    for (size_t iter = 0; iter <= support.size() + 1; ++iter) {
        Coords residual;
        for (const auto& [B, c] : theta) {
            for (const auto& [C, bc] : bar_coords_of_std(B, r)) {
                Laurent t = c.bar() * bc;
                if (t.is_zero()) continue;
                auto [it, inserted] = residual.try_emplace(C, t);
                if (!inserted) {
                    it->second += t;
                    if (it->second.is_zero()) residual.erase(it);
                }
            }
        }
        for (const auto& [B, c] : theta) {
            auto it = residual.find(B);
            if (it == residual.end()) {
                residual.emplace(B, -c);
            } else {
                it->second -= c;
                if (it->second.is_zero()) residual.erase(it);
            }
        }
        if (residual.empty()) {
            for (const auto& [B, c] : theta)
                if (!(B == A) && !c.in_v_inverse())
                    throw TriangularityViolation("off-diagonal coefficient outside v^-1 Z[v^-1]");
            return theta;
        }
        auto best = residual.begin();
        for (auto it = residual.begin(); it != residual.end(); ++it)
            if (rank.at(it->first) > rank.at(best->first)) best = it;
        const Laurent& c = best->second;
        if (!c.is_bar_antisymmetric())
            throw TriangularityViolation("residual not bar-antisymmetric at " + best->first.str());
        Laurent p = c.negative_part();
        auto [it, inserted] = theta.try_emplace(best->first, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) theta.erase(it);
        }
    }
    throw TriangularityViolation("canonical basis correction did not converge");
}

}  // namespace

Coords canonical_basis_coords(const PeriodicMatrix& A, long r) {
    if (A.sigma() != r) throw SigmaMismatch("sigma(A) differs from r");
    auto key = std::make_pair(r, A);
    return memoized(caches().cb_coords, key, [&]() { return compute_cb_coords(A, r); });
}

SchurElem canonical_basis(const PeriodicMatrix& A, long r) {
    return SchurElem::from_coords(A.period(), r, canonical_basis_coords(A, r));
}

namespace {

// theta_{B,r}(x_{co(B)}) as a tensor vector, memoized.
TensorVec cb_value(const PeriodicMatrix& B, long r) {
    auto key = std::make_pair(r, B);
    return memoized(caches().cb_values, key, [&]() {
        SchurElem theta = canonical_basis(B, r);
        return theta.value(Composition::from_zvector(B.col_sums()));
    });
}

}  // namespace

SchurElem zeta_theta_plus(const PeriodicMatrix& A, const Composition& lambda, long r) {
    if (!A.is_theta_plus()) throw NotUpperTriangular("zeta_theta_plus needs A in Theta_delta^+");
    if (lambda.sigma() != r) throw SigmaMismatch("sigma(lambda) differs from r");
    ZVector gap = lambda.to_zvector() - A.col_sums();
    if (!gap.is_nonneg()) return SchurElem(A.period(), r);
    return canonical_basis(A.plus_diag(gap), r);
}

SchurElem iota(int N, const SchurElem& a) {
    if (N < a.n()) throw BadRanks("iota requires N >= n");
    Coords out;
    for (const auto& [A, c] : a.coords()) out[A.tilde(N)] = c;
    return SchurElem::from_coords(N, a.rank(), out);
}

std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent> delta_rr(const SchurElem& a,
                                                                      long r1, long r2) {
    const int n = a.n();
    if (a.rank() != r1 + r2) throw RankMismatch("delta_rr needs r = r' + r''");
    std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent> g;
    std::map<std::vector<long>, long> len_memo;
    auto rep_length = [&](const std::vector<long>& jj) {
        auto it = len_memo.find(jj);
        if (it == len_memo.end())
            it = len_memo.emplace(jj, min_coset_rep(index_content(jj, n), jj, n).length()).first;
        return it->second;
    };
    auto gammas = enumerate_compositions(n, r1);
    auto deltas = enumerate_compositions(n, r2);
    for (const Composition& gamma : gammas) {
        auto ggens = gamma.young_generators();
        for (const Composition& delta : deltas) {
            auto dgens = delta.young_generators();
            TensorVec probe = TensorVec::tensor(TensorVec::x_vector(n, gamma),
                                                TensorVec::x_vector(n, delta));
            TensorVec Y = a.apply(probe);
            size_t guard = 0;
            while (!Y.is_zero()) {
                if (++guard > kHeckeSupportCap) throw SolveFailed("delta solve did not terminate");
                // Maximal pivot, first factor dominant.
                bool first = true;
                long bl1 = 0, bl2 = 0;
                std::vector<long> bestj;
                for (const auto& [j, c] : Y.terms()) {
                    std::vector<long> j1(j.begin(), j.begin() + r1), j2(j.begin() + r1, j.end());
                    long l1 = rep_length(j1);
                    long l2 = rep_length(j2);
                    if (first || l1 > bl1 ||
                        (l1 == bl1 && (l2 > bl2 || (l2 == bl2 && j > bestj)))) {
                        bl1 = l1;
                        bl2 = l2;
                        bestj = j;
                        first = false;
                    }
                }
                std::vector<long> j1(bestj.begin(), bestj.begin() + r1),
                    j2(bestj.begin() + r1, bestj.end());
                Composition lam1 = index_content(j1, n), lam2 = index_content(j2, n);
                AffinePerm w1 = min_coset_rep(lam1, j1, n), w2 = min_coset_rep(lam2, j2, n);
                for (int i : ggens)
                    if (w1(i) > w1(i + 1))
                        throw SolveFailed("pivot not minimal in its right coset");
                for (int i : dgens)
                    if (w2(i) > w2(i + 1))
                        throw SolveFailed("pivot not minimal in its right coset");
                PeriodicMatrix B = jmath(lam1, w1, gamma), C = jmath(lam2, w2, delta);
                TensorVec VB = cb_value(B, r1), VC = cb_value(C, r2);
                Laurent pivot = VB.coeff(j1) * VC.coeff(j2);
                if (pivot.is_zero()) throw SolveFailed("pivot coefficient vanished");
                Laurent ratio = Laurent::div_exact(Y.coeff(bestj), pivot);
                auto key = std::make_pair(B, C);
                auto [it, inserted] = g.try_emplace(key, ratio);
                if (!inserted) it->second += ratio;
                Y -= TensorVec::tensor(VB, VC).scaled(ratio);
                if (!Y.coeff(bestj).is_zero())
                    throw SolveFailed("pivot did not eliminate its term");
            }
        }
    }
    std::erase_if(g, [](const auto& e) { return e.second.is_zero(); });
    return g;
}

std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, Laurent> theta_delta_expansion(
    const PeriodicMatrix& A, long r1, long r2) {
    if (A.sigma() != r1 + r2) throw SigmaMismatch("sigma(A) must be r' + r''");
    auto key = std::make_pair(std::make_pair(r1, r2), A);
    return memoized(caches().delta, key,
                    [&]() { return delta_rr(canonical_basis(A, r1 + r2), r1, r2); });
}

Laurent compute_g(const PeriodicMatrix& A, const PeriodicMatrix& B, const PeriodicMatrix& C,
                  long r1, long r2) {
    if (B.sigma() != r1 || C.sigma() != r2) throw SigmaMismatch("sigma(B), sigma(C) mismatch");
    auto expansion = theta_delta_expansion(A, r1, r2);
    auto it = expansion.find(std::make_pair(B, C));
    return it == expansion.end() ? Laurent() : it->second;
}

Laurent compute_f(const PeriodicMatrix& A, const PeriodicMatrix& B, const PeriodicMatrix& C,
                  long extra) {
    if (!A.is_theta_plus() || !B.is_theta_plus() || !C.is_theta_plus())
        throw NotUpperTriangular("compute_f needs A, B, C in Theta_delta^+");
    ZVector dA = A.hook_sums(), dB = B.hook_sums(), dC = C.hook_sums();
    if (!(dA == dB + dC)) return Laurent();
    const int n = A.period();
    ZVector coA = A.col_sums(), coB = B.col_sums(), coC = C.col_sums();
    // x + co(A) = y + co(B) + co(C) with x, y >= 0; the minimal such choice,
    // shifted by `extra` copies of the all-ones vector for cross-checks.
    ZVector x(n), y(n);
    for (long i = 1; i <= n; ++i) {
        long need = coB.at(i) + coC.at(i) - coA.at(i);
        x.set(i, std::max(0L, need) + extra);
        y.set(i, x.at(i) + coA.at(i) - coB.at(i) - coC.at(i));
    }
    long r1 = B.sigma() + y.sum();
    long r2 = C.sigma();
    Laurent gval = compute_g(A.plus_diag(x), B.plus_diag(y), C, r1, r2);
    return gval * Laurent::v_pow(-bilinear(dB, coC));
}

}  // namespace afschur
