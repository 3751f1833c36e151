#include "afschur/modified.hpp"

#include <algorithm>

namespace afschur {

namespace {
ZVector normalized(const ZVector& v) {
    long m = *std::min_element(v.parts().begin(), v.parts().end());
    ZVector out = v;
    for (long i = 1; i <= v.period(); ++i) out.set(i, v.at(i) - m);
    return out;
}
}  // namespace

XWeight::XWeight(const ZVector& v) : rep_(normalized(v)) {}

XWeight XWeight::operator+(const XWeight& o) const { return XWeight(rep_ + o.rep_); }

long XWeight::pair_y(const ZVector& mu) const {
    if (mu.sum() != 0) throw Error("pair_y needs a Y-vector (sum zero)");
    long s = 0;
    for (long i = 1; i <= rep_.period(); ++i) s += rep_.at(i) * mu.at(i);
    return s;
}

SYIndex::SYIndex(PeriodicMatrix A)
    : matrix(std::move(A)), ro_class(matrix.row_sums()), co_class(matrix.col_sums()) {
    if (!matrix.is_theta()) throw Error("script-Y index must lie in Theta_delta(n)");
    if (!matrix.in_script_y())
        throw Error("matrix is not a script-Y index (aperiodic with a zero diagonal entry)");
}

SchurElem dzr_idempotent(const XWeight& lam, long r) {
    const int n = lam.period();
    long s0 = lam.rep().sum();
    if (r < s0 || (r - s0) % n != 0) return SchurElem(n, r);
    long c = (r - s0) / n;
    ZVector alpha = lam.rep();
    for (long i = 1; i <= n; ++i) alpha.set(i, alpha.at(i) + c);
    return SchurElem::std_basis(PeriodicMatrix::diagonal(alpha), r);
}

SchurElem schur_image_of_b(const SYIndex& A, long r) {
    const int n = A.matrix.period();
    long s0 = A.matrix.sigma();
    if ((r - s0) % n != 0 || r < s0) return SchurElem(n, r);
    long m = (r - s0) / n;
    return canonical_basis(A.matrix + PeriodicMatrix::identity(n).scaled(m), r);
}

long h_shift(const SYIndex& A, const SYIndex& B, const SYIndex& C) {
    const int n = A.matrix.period();
    if (!(XWeight(B.matrix.row_sums() + C.matrix.row_sums()) == A.ro_class)) return -1;
    if (!(XWeight(B.matrix.col_sums() + C.matrix.col_sums()) == A.co_class)) return -1;
    long diff = B.matrix.sigma() + C.matrix.sigma() - A.matrix.sigma();
    if (diff < 0 || diff % n != 0) return -1;
    return diff / n;
}

Laurent compute_h(const SYIndex& A, const SYIndex& B, const SYIndex& C) {
    long m = h_shift(A, B, C);
    if (m < 0) return Laurent();
    const int n = A.matrix.period();
    long r1 = B.matrix.sigma(), r2 = C.matrix.sigma();
    return compute_g(A.matrix + PeriodicMatrix::identity(n).scaled(m), B.matrix, C.matrix,
                     r1, r2);
}

SYIndex divided_power_index(int n, int i, long s, const XWeight& beta) {
    ZVector d = beta.rep();
    d.set(i + 1, d.at(i + 1) - s);
    PeriodicMatrix A = PeriodicMatrix::unit(n, i, i + 1, s) + PeriodicMatrix::diagonal(normalized(d));
    return SYIndex(A);
}

MonomialDeltaReport monomial_delta_check(int n, int i, long a, const XWeight& lam,
                                         long sigma_cap) {
    MonomialDeltaReport report;
    SYIndex Ab = divided_power_index(n, i, a, lam);
    ZVector rho0 = lam.rep();
    for (long c = 0;; ++c) {
        ZVector lamc = rho0;
        for (long t = 1; t <= n; ++t) lamc.set(t, lamc.at(t) + c);
        if (lamc.sum() > sigma_cap) break;
        // all splittings beta + delta = lamc over N^n
        std::vector<ZVector> betas;
        {
            std::vector<long> cur(static_cast<size_t>(n), 0);
            auto rec = [&](auto&& self, long pos) -> void {
                if (pos == n) {
                    betas.emplace_back(cur);
                    return;
                }
                for (long x = 0; x <= lamc.at(pos + 1); ++x) {
                    cur[static_cast<size_t>(pos)] = x;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
        }
        for (const ZVector& beta : betas) {
            ZVector delta = lamc - beta;
            for (long s = 0; s <= a; ++s) {
                long t = a - s;
                SYIndex Bhat = divided_power_index(n, i, s, XWeight(beta));
                SYIndex Chat = divided_power_index(n, i, t, XWeight(delta));
                ZVector gamma = Chat.matrix.row_sums();
                long kexp = gamma.at(i) - gamma.at(i + 1);
                Laurent expected = Laurent::v_pow(-s * t + s * kexp);
                Laurent actual = compute_h(Ab, Bhat, Chat);
                ++report.cases;
                if (!(expected == actual)) {
                    report.pass = false;
                    report.failures.push_back(
                        "(i=" + std::to_string(i) + ",a=" + std::to_string(a) + ",s=" +
                        std::to_string(s) + ",beta=" + beta.str() + ",delta=" + delta.str() +
                        ") expected " + expected.str() + " got " + actual.str());
                }
            }
        }
    }
    return report;
}

std::vector<SYIndex> enumerate_script_y(int n, long sigma_max, long spread) {
    std::vector<SYIndex> out;
    for (long r = 0; r <= sigma_max; ++r)
        for (const PeriodicMatrix& A : enumerate_theta(n, r, spread))
            if (A.in_script_y()) out.emplace_back(A);
    return out;
}

}  // namespace afschur
