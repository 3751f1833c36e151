#include "afschur/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace afschur {

namespace {
long floordiv(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

const Laurent kV = Laurent::v_pow(1);
const Laurent kV2 = Laurent::v_pow(2);
const Laurent kV2m1 = Laurent::v_pow(2) - Laurent(1);
const Laurent kVinv = Laurent::v_pow(-1);
const Laurent kVinvmV = Laurent::v_pow(-1) - Laurent::v_pow(1);

// omega_{(a,b)} . T on one adjacent pair, arbitrary integer entries.
void pair_act(long a, long b, long n, std::vector<std::tuple<long, long, Laurent>>& out) {
    if (1 <= a && a <= n && 1 <= b && b <= n) {
        if (a == b) {
            out.emplace_back(a, b, kV2);
        } else if (a < b) {
            out.emplace_back(b, a, kV);
        } else {
            out.emplace_back(b, a, kV);
            out.emplace_back(a, b, kV2m1);
        }
        return;
    }
    long shift = floordiv(b - 1, n);
    if (shift != 0) {
        // (X_k X_{k+1})^{-shift} is central for T_k.
        std::vector<std::tuple<long, long, Laurent>> sub;
        pair_act(a - shift * n, b - shift * n, n, sub);
        for (auto& [x, y, c] : sub) out.emplace_back(x + shift * n, y + shift * n, c);
        return;
    }
    if (a > n) {
        // omega X_k^{-1} T_k = (omega T_k) X_{k+1}^{-1} + (v^2-1) omega X_k^{-1}
        std::vector<std::tuple<long, long, Laurent>> sub;
        pair_act(a - n, b, n, sub);
        for (auto& [x, y, c] : sub) out.emplace_back(x, y + n, c);
        out.emplace_back(a, b, kV2m1);
        return;
    }
    // a <= 0: omega X_k T_k = (omega T_k) X_{k+1} - (v^2-1) omega X_{k+1}
    std::vector<std::tuple<long, long, Laurent>> sub;
    pair_act(a + n, b, n, sub);
    for (auto& [x, y, c] : sub) out.emplace_back(x, y - n, c);
    out.emplace_back(a + n, b - n, -kV2m1);
}

}  // namespace

TensorVec TensorVec::basis(int n, std::vector<long> index, Laurent c) {
    TensorVec t(n, static_cast<int>(index.size()));
    if (!c.is_zero()) t.terms_.emplace(std::move(index), std::move(c));
    return t;
}

TensorVec TensorVec::x_vector(int n, const Composition& lambda) {
    long len = 0;
    for (long i = 1; i <= lambda.period(); ++i)
        len += lambda.at(i) * (lambda.at(i) - 1) / 2;
    return basis(n, index_of(lambda), Laurent::v_pow(len));
}

Laurent TensorVec::coeff(const std::vector<long>& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Laurent() : it->second;
}

void TensorVec::add_term(const std::vector<long>& index, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVec TensorVec::operator-() const {
    TensorVec t(n_, r_);
    for (const auto& [j, c] : terms_) t.terms_.emplace(j, -c);
    return t;
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
    if (n_ != o.n_ || r_ != o.r_) throw RankMismatch("tensor ranks differ");
    for (const auto& [j, c] : o.terms_) add_term(j, c);
    return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o) { return *this += -o; }

TensorVec TensorVec::scaled(const Laurent& c) const {
    TensorVec t(n_, r_);
    if (c.is_zero()) return t;
    for (const auto& [j, cc] : terms_) t.terms_.emplace(j, cc * c);
    return t;
}

TensorVec TensorVec::act_simple(int k) const {
    if (k < 1 || k >= r_) throw RankMismatch("T_k index out of range for the rank");
    TensorVec out(n_, r_);
    for (const auto& [j, c] : terms_) {
        std::vector<std::tuple<long, long, Laurent>> moves;
        pair_act(j[static_cast<size_t>(k - 1)], j[static_cast<size_t>(k)], n_, moves);
        for (const auto& [x, y, pc] : moves) {
            std::vector<long> nj = j;
            nj[static_cast<size_t>(k - 1)] = x;
            nj[static_cast<size_t>(k)] = y;
            out.add_term(nj, c * pc);
        }
    }
    return out;
}

TensorVec TensorVec::act_x_power(int t, long e) const {
    TensorVec out(n_, r_);
    for (const auto& [j, c] : terms_) {
        std::vector<long> nj = j;
        nj[static_cast<size_t>(t - 1)] -= e * n_;
        out.add_term(nj, c);
    }
    return out;
}

TensorVec TensorVec::act_rho(int dir) const {
    if (dir > 0) {
        // T_rho = X_1^{-1} T~_1^{-1} ... T~_{r-1}^{-1}
        TensorVec cur = act_x_power(1, -1);
        for (int i = 1; i <= r_ - 1; ++i) {
            // T~_i^{-1} = v^{-1} T_i + (v^{-1} - v)
            TensorVec next = cur.act_simple(i).scaled(kVinv);
            next += cur.scaled(kVinvmV);
            cur = std::move(next);
        }
        return cur;
    }
    // T_rho^{-1} = T~_{r-1} ... T~_1 X_1
    TensorVec cur = *this;
    for (int i = r_ - 1; i >= 1; --i) cur = cur.act_simple(i).scaled(kVinv);
    return cur.act_x_power(1, +1);
}

TensorVec TensorVec::act(const HeckeElem& h) const {
    if (h.period() != r_) throw RankMismatch("Hecke period differs from tensor rank");
    TensorVec out(n_, r_);
    for (const auto& [w, c] : h.terms()) {
        TensorVec cur = *this;
        long m = w.rho_shift();
        for (long t = 0; t < std::abs(m); ++t) cur = cur.act_rho(m > 0 ? +1 : -1);
        for (int i : w.reduced_word()) {
            if (i < r_) {
                cur = cur.act_simple(i);
            } else {
                // wrap reflection: T_{s_0} = T_rho T_{r-1} T_rho^{-1}
                cur = cur.act_rho(+1).act_simple(r_ - 1).act_rho(-1);
            }
        }
        out += cur.scaled(c);
    }
    return out;
}

TensorVec TensorVec::act_generator(const Generator& g) const {
    TensorVec out(n_, r_);
    auto res = [&](long x) { return x - floordiv(x - 1, n_) * n_; };  // in 1..n
    const long gi = g.i;
    const long gi1 = res(g.i + 1);
    for (const auto& [j, c] : terms_) {
        switch (g.kind) {
            case Generator::Kind::E: {
                // Delta(E) = E x K~ + 1 x E: slot t gets E, later slots K~.
                for (int t = 0; t < r_; ++t) {
                    if (res(j[static_cast<size_t>(t)]) != gi1) continue;
                    long wt = 0;
                    for (int u = t + 1; u < r_; ++u) {
                        long ru = res(j[static_cast<size_t>(u)]);
                        wt += (ru == gi) - (ru == gi1);
                    }
                    std::vector<long> nj = j;
                    nj[static_cast<size_t>(t)] -= 1;
                    out.add_term(nj, c * Laurent::v_pow(wt));
                }
                break;
            }
            case Generator::Kind::F: {
                // Delta(F) = F x 1 + K~^{-1} x F: slot t gets F, earlier slots K~^{-1}.
                for (int t = 0; t < r_; ++t) {
                    if (res(j[static_cast<size_t>(t)]) != gi) continue;
                    long wt = 0;
                    for (int u = 0; u < t; ++u) {
                        long ru = res(j[static_cast<size_t>(u)]);
                        wt -= (ru == gi) - (ru == gi1);
                    }
                    std::vector<long> nj = j;
                    nj[static_cast<size_t>(t)] += 1;
                    out.add_term(nj, c * Laurent::v_pow(wt));
                }
                break;
            }
            case Generator::Kind::K:
            case Generator::Kind::Kinv: {
                long wt = 0;
                for (int t = 0; t < r_; ++t) wt += (res(j[static_cast<size_t>(t)]) == gi);
                if (g.kind == Generator::Kind::Kinv) wt = -wt;
                out.add_term(j, c * Laurent::v_pow(wt));
                break;
            }
            case Generator::Kind::Zplus:
            case Generator::Kind::Zminus: {
                long shift = g.kind == Generator::Kind::Zplus ? -g.s * n_ : g.s * n_;
                for (int t = 0; t < r_; ++t) {
                    std::vector<long> nj = j;
                    nj[static_cast<size_t>(t)] += shift;
                    out.add_term(nj, c);
                }
                break;
            }
        }
    }
    return out;
}

TensorVec TensorVec::tensor(const TensorVec& a, const TensorVec& b) {
    if (a.n_ != b.n_) throw RankMismatch("tensor factors over different n");
    TensorVec out(a.n_, a.r_ + b.r_);
    for (const auto& [ja, ca] : a.terms_) {
        for (const auto& [jb, cb] : b.terms_) {
            std::vector<long> j = ja;
            j.insert(j.end(), jb.begin(), jb.end());
            out.add_term(j, ca * cb);
        }
    }
    return out;
}

namespace {

struct PeelKey {
    long length;
    std::vector<long> index;
    bool operator<(const PeelKey& o) const {
        if (length != o.length) return length < o.length;
        return index < o.index;
    }
};

}  // namespace

std::map<Composition, HeckeElem> TensorVec::peel() const {
    std::map<Composition, HeckeElem> out;
    TensorVec work = *this;
    std::map<std::vector<long>, AffinePerm> reps;
    size_t guard = 0;
    while (!work.is_zero()) {
        if (++guard > kHeckeSupportCap)
            throw CoordinateExtractionFailed("peel did not terminate");
        PeelKey best{-1, {}};
        for (const auto& [j, c] : work.terms_) {
            auto it = reps.find(j);
            if (it == reps.end())
                it = reps.emplace(j, min_coset_rep(index_content(j, n_), j, n_)).first;
            PeelKey key{it->second.length(), j};
            if (best.length < 0 || best < key) best = std::move(key);
        }
        const std::vector<long>& j = best.index;
        Composition lambda = index_content(j, n_);
        const AffinePerm& w = reps.at(j);
        TensorVec u = x_vector(n_, lambda).act(HeckeElem::t(w));
        Laurent lead = u.coeff(j);
        if (lead.is_zero())
            throw CoordinateExtractionFailed("leading term of x_lambda T_w vanished");
        Laurent ratio = Laurent::div_exact(work.coeff(j), lead);
        auto [it, inserted] = out.try_emplace(lambda, HeckeElem::t(w, ratio));
        if (!inserted) it->second += HeckeElem::t(w, ratio);
        work -= u.scaled(ratio);
        if (!work.coeff(j).is_zero())
            throw CoordinateExtractionFailed("pivot did not eliminate its term");
    }
    return out;
}

std::vector<SplitTerm> split(const TensorVec& vec, int r1, int r2) {
    if (vec.rank() != r1 + r2) throw RankMismatch("split ranks must sum to the vector rank");
    const int n = vec.n();
    std::vector<SplitTerm> out;
    TensorVec work = vec;
    size_t guard = 0;
    while (!work.is_zero()) {
        if (++guard > kHeckeSupportCap) throw NotDecomposable("split did not terminate");
        // Maximal combined key, first factor dominant.
        bool first = true;
        PeelKey best1{0, {}}, best2{0, {}};
        std::vector<long> bestj;
        for (const auto& [j, c] : work.terms()) {
            std::vector<long> j1(j.begin(), j.begin() + r1), j2(j.begin() + r1, j.end());
            PeelKey k1{min_coset_rep(index_content(j1, n), j1, n).length(), j1};
            PeelKey k2{min_coset_rep(index_content(j2, n), j2, n).length(), j2};
            if (first || best1 < k1 || (!(k1 < best1) && best2 < k2)) {
                best1 = k1;
                best2 = k2;
                bestj = j;
                first = false;
            }
        }
        std::vector<long> j1(bestj.begin(), bestj.begin() + r1), j2(bestj.begin() + r1, bestj.end());
        Composition gamma = index_content(j1, n), delta = index_content(j2, n);
        AffinePerm w1 = min_coset_rep(gamma, j1, n), w2 = min_coset_rep(delta, j2, n);
        TensorVec u1 = TensorVec::x_vector(n, gamma).act(HeckeElem::t(w1));
        TensorVec u2 = TensorVec::x_vector(n, delta).act(HeckeElem::t(w2));
        Laurent lead = u1.coeff(j1) * u2.coeff(j2);
        if (lead.is_zero()) throw NotDecomposable("split pivot vanished");
        Laurent ratio = Laurent::div_exact(work.coeff(bestj), lead);
        out.push_back(SplitTerm{gamma, delta, HeckeElem::t(w1, ratio), HeckeElem::t(w2)});
        work -= TensorVec::tensor(u1, u2).scaled(ratio);
        if (!work.coeff(bestj).is_zero()) throw NotDecomposable("split pivot not eliminated");
    }
    return out;
}

std::string TensorVec::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")w(";
        for (size_t k = 0; k < j.size(); ++k) {
            if (k) os << ",";
            os << j[k];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace afschur
