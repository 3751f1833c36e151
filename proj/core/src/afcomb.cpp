#include "afschur/afcomb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace afschur {

namespace {
long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

std::vector<AffinePerm> enumerate_parabolic(const Composition& lambda) {
    const int r = static_cast<int>(lambda.sigma());
    auto gens = lambda.young_generators();
    std::set<AffinePerm> seen;
    std::vector<AffinePerm> todo{AffinePerm(r)};
    seen.insert(todo.front());
    while (!todo.empty()) {
        AffinePerm w = todo.back();
        todo.pop_back();
        for (int i : gens) {
            AffinePerm ws = w.right_simple(i);
            if (seen.insert(ws).second) todo.push_back(ws);
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_minimal_double_rep(const Composition& lambda, const AffinePerm& d,
                           const Composition& mu) {
    AffinePerm dinv = d.inverse();
    for (int j : lambda.young_generators())
        if (dinv(j) > dinv(j + 1)) return false;
    for (int j : mu.young_generators())
        if (d(j) > d(j + 1)) return false;
    return true;
}

CosetData coset_data(const Composition& lambda, const Composition& mu, const AffinePerm& w) {
    if (lambda.sigma() != mu.sigma() || lambda.sigma() != w.period())
        throw PeriodMismatch("coset_data requires sigma(lambda) = sigma(mu) = period of w");
    auto lgens = lambda.young_generators();
    auto mgens = mu.young_generators();

    // Strip to the minimal double-coset representative.
    AffinePerm d = w;
    bool changed = true;
    while (changed) {
        changed = false;
        AffinePerm dinv = d.inverse();
        for (int i : lgens) {
            if (dinv(i) > dinv(i + 1)) {  // l(s_i d) < l(d)
                d = d.left_simple(i);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (int i : mgens) {
            if (d(i) > d(i + 1)) {
                d = d.right_simple(i);
                changed = true;
                break;
            }
        }
    }

    // w = u x with u in S_lambda and x in D_lambda; then x = d s.
    AffinePerm x = w, u(w.period());
    changed = true;
    while (changed) {
        changed = false;
        AffinePerm xinv = x.inverse();
        for (int i : lgens) {
            if (xinv(i) > xinv(i + 1)) {
                x = x.left_simple(i);
                u = u.right_simple(i);
                changed = true;
                break;
            }
        }
    }
    AffinePerm s = d.inverse() * x;
    if (w.length() != u.length() + d.length() + s.length())
        throw Error("coset_data: factorization lengths not additive");
    return CosetData{d, u, s};
}

std::vector<AffinePerm> enumerate_double_coset(const Composition& lambda, const AffinePerm& d,
                                               const Composition& mu) {
    if (!is_minimal_double_rep(lambda, d, mu))
        throw NotMinimalRep("d is not minimal in S_lambda d S_mu");
    auto lgens = lambda.young_generators();
    auto mgens = mu.young_generators();
    std::set<AffinePerm> seen{d};
    std::vector<AffinePerm> todo{d};
    while (!todo.empty()) {
        AffinePerm w = todo.back();
        todo.pop_back();
        for (int i : lgens) {
            AffinePerm sw = w.left_simple(i);
            if (seen.insert(sw).second) todo.push_back(sw);
        }
        for (int i : mgens) {
            AffinePerm ws = w.right_simple(i);
            if (seen.insert(ws).second) todo.push_back(ws);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<AffinePerm> coset_tail_reps(const Composition& lambda, const AffinePerm& d,
                                        const Composition& mu) {
    const long r = mu.sigma();
    const int n = mu.period();
    PeriodicMatrix A = jmath(lambda, d, mu);
    // nu refines mu: inside R^mu_l the chunks have sizes a_{k,l}, k ascending.
    // Record the nu-boundaries within 1..r.
    std::set<long> boundary;
    for (long l = 1; l <= n; ++l) {
        long end = mu.block_end(l);
        long start = end - mu.at(l);
        if (mu.at(l) == 0) continue;
        std::vector<std::pair<long, long>> col;  // (k, a_{k,l})
        for (const auto& [key, v] : A.band()) {
            long diff = l - key.second;
            if (diff % n == 0) col.emplace_back(key.first + diff, v);
        }
        std::sort(col.begin(), col.end());
        long cum = 0;
        for (const auto& [k, v] : col) {
            cum += v;
            long cut = start + cum;
            if (cut >= 1 && cut <= r) boundary.insert(cut);
        }
    }
    std::vector<AffinePerm> reps;
    for (const AffinePerm& s : enumerate_parabolic(mu)) {
        AffinePerm sinv = s.inverse();
        bool minimal = true;
        for (long j = 1; j < r && minimal; ++j)
            if (!boundary.count(j) && sinv(j) > sinv(j + 1)) minimal = false;
        if (minimal) reps.push_back(s);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

PeriodicMatrix jmath(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    if (lambda.sigma() != mu.sigma() || lambda.sigma() != d.period())
        throw PeriodMismatch("jmath requires sigma(lambda) = sigma(mu) = period of d");
    if (!is_minimal_double_rep(lambda, d, mu))
        throw NotMinimalRep("d is not minimal in S_lambda d S_mu");
    const long r = mu.sigma();
    PeriodicMatrix A(lambda.period());
    for (long j = 1; j <= r; ++j) {
        long l = mu.block_of(j);
        long k = lambda.block_of(d(j));
        A.add_at(k, l, 1);
    }
    return A;
}

std::tuple<Composition, AffinePerm, Composition> jmath_inv(const PeriodicMatrix& A) {
    if (!A.is_theta()) throw Error("jmath_inv requires A in Theta_delta(n, r)");
    const int n = A.period();
    Composition lambda = Composition::from_zvector(A.row_sums());
    Composition mu = Composition::from_zvector(A.col_sums());
    const long r = A.sigma();
    std::vector<long> window;
    window.reserve(static_cast<size_t>(r));
    for (long j = 1; j <= r; ++j) {
        long l = mu.block_of(j);
        long p = mu.pos_in_block(j);
        // Column l of A, rows ascending.
        std::vector<std::pair<long, long>> col;  // (k, a_{k,l})
        for (const auto& [key, v] : A.band()) {
            long diff = l - key.second;
            if (diff % n == 0) col.emplace_back(key.first + diff, v);
        }
        std::sort(col.begin(), col.end());
        long cum = 0, krow = 0, offset_in_chunk = 0;
        bool found = false;
        for (const auto& [k, v] : col) {
            if (cum + v >= p) {
                krow = k;
                offset_in_chunk = p - cum;
                found = true;
                break;
            }
            cum += v;
        }
        if (!found) throw Error("jmath_inv: column shorter than block");
        // Entries of row krow in columns < l.
        long before = 0;
        for (const auto& [key, v] : A.band()) {
            long diff = krow - key.first;
            if (diff % n == 0 && key.second + diff < l) before += v;
        }
        window.push_back(lambda.block_end(krow) - lambda.at(krow) + before + offset_in_chunk);
    }
    AffinePerm d = AffinePerm::from_window(std::move(window));
    if (!is_minimal_double_rep(lambda, d, mu))
        throw Error("jmath_inv produced a non-minimal representative");
    return {lambda, d, mu};
}

std::vector<long> index_of(const Composition& lambda) {
    std::vector<long> idx;
    idx.reserve(static_cast<size_t>(lambda.sigma()));
    for (long i = 1; i <= lambda.period(); ++i)
        for (long c = 0; c < lambda.at(i); ++c) idx.push_back(i);
    return idx;
}

Composition index_content(const std::vector<long>& index, int n) {
    std::vector<long> parts(static_cast<size_t>(n), 0);
    for (long x : index) {
        long q = floordiv(x - 1, n);
        parts[static_cast<size_t>(x - 1 - q * n)] += 1;
    }
    return Composition(std::move(parts));
}

std::vector<long> index_act(const std::vector<long>& index, int n, const AffinePerm& w) {
    const long r = static_cast<long>(index.size());
    std::vector<long> out(index.size());
    for (long k = 1; k <= r; ++k) {
        long p = w(k);
        long q = floordiv(p - 1, r);
        out[static_cast<size_t>(k - 1)] = index[static_cast<size_t>(p - 1 - q * r)] + q * n;
    }
    return out;
}

AffinePerm min_coset_rep(const Composition& lambda, const std::vector<long>& index, int n) {
    const long r = static_cast<long>(index.size());
    // Group window positions by the residue class of their target block; the
    // blocks of the index values are the lambda-blocks (value x fills block x).
    std::map<long, std::vector<std::pair<long, long>>> by_class;  // c -> (source pos, q)
    for (long k = 1; k <= r; ++k) {
        long x = index[static_cast<size_t>(k - 1)];
        long q = floordiv(x - 1, n);
        long c = x - q * n;  // residue class in 1..n
        by_class[c].emplace_back(k - q * r, q);
    }
    std::vector<long> window(static_cast<size_t>(r), 0);
    for (auto& [c, sources] : by_class) {
        std::sort(sources.begin(), sources.end());
        long start = lambda.block_end(c) - lambda.at(c);
        for (size_t t = 0; t < sources.size(); ++t) {
            auto [src, q] = sources[t];
            long pos = start + static_cast<long>(t) + 1;  // position in R^lambda_c
            // w(src) = pos; the window slot is k = src + qr, which lies in 1..r.
            long k = src + q * r;
            window[static_cast<size_t>(k - 1)] = pos + q * r;
        }
    }
    return AffinePerm::from_window(std::move(window));
}

}  // namespace afschur
