#include "afschur/hecke.hpp"

#include <mutex>
#include <sstream>

namespace afschur {

namespace {
const Laurent kV2 = Laurent::v_pow(2);
const Laurent kV2m1 = Laurent::v_pow(2) - Laurent(1);
const Laurent kVm2 = Laurent::v_pow(-2);
const Laurent kVm2m1 = Laurent::v_pow(-2) - Laurent(1);
}  // namespace

HeckeElem HeckeElem::t(const AffinePerm& w, Laurent c) {
    HeckeElem h(w.period());
    if (!c.is_zero()) h.terms_.emplace(w, std::move(c));
    return h;
}

Laurent HeckeElem::coeff(const AffinePerm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElem::add_term(const AffinePerm& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HeckeElem::check_cap() const {
    if (terms_.size() > kHeckeSupportCap)
        throw ResourceBound("Hecke support exceeded the configured cap");
}

HeckeElem HeckeElem::operator-() const {
    HeckeElem h(r_);
    for (const auto& [w, c] : terms_) h.terms_.emplace(w, -c);
    return h;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
    if (r_ != o.r_) throw PeriodMismatch("Hecke periods differ");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) { return *this += -o; }

HeckeElem HeckeElem::scaled(const Laurent& c) const {
    HeckeElem h(r_);
    if (c.is_zero()) return h;
    for (const auto& [w, cc] : terms_) h.terms_.emplace(w, cc * c);
    return h;
}

HeckeElem HeckeElem::times_simple(int i) const {
    HeckeElem out(r_);
    for (const auto& [w, c] : terms_) {
        AffinePerm ws = w.right_simple(i);
        if (w.right_descent(i)) {
            out.add_term(w, c * kV2m1);
            out.add_term(ws, c * kV2);
        } else {
            out.add_term(ws, c);
        }
    }
    out.check_cap();
    return out;
}

HeckeElem HeckeElem::times_simple_inv(int i) const {
    // T_s^{-1} = v^{-2} T_s + (v^{-2} - 1) T_e
    HeckeElem out = times_simple(i).scaled(kVm2);
    out += scaled(kVm2m1);
    return out;
}

HeckeElem HeckeElem::times_rho(long m) const {
    if (m == 0) return *this;
    HeckeElem out(r_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.rho_right(m), c);
    return out;
}

HeckeElem HeckeElem::operator*(const HeckeElem& o) const {
    if (r_ != o.r_) throw PeriodMismatch("Hecke periods differ");
    HeckeElem result(r_);
    for (const auto& [w2, c2] : o.terms_) {
        HeckeElem cur = times_rho(w2.rho_shift());
        for (int i : w2.reduced_word()) cur = cur.times_simple(i);
        result += cur.scaled(c2);
    }
    result.check_cap();
    return result;
}

HeckeElem HeckeElem::t_inv(const AffinePerm& w) {
    HeckeElem cur = unit(w.period());
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.times_simple_inv(*it);
    return cur.times_rho(-w.rho_shift());
}

HeckeElem HeckeElem::bar() const {
    HeckeElem out(r_);
    for (const auto& [w, c] : terms_) out += t_inv(w.inverse()).scaled(c.bar());
    return out;
}

std::string HeckeElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")T" << w.str();
    }
    return os.str();
}

namespace {

// A Hecke element that is a single scaled basis term, inverted exactly.
HeckeElem invert_monomial(const HeckeElem& h) {
    if (h.terms().size() != 1) throw Error("invert_monomial needs a single T_w term");
    const auto& [w, c] = *h.terms().begin();
    if (c.terms().size() != 1 || c.terms()[0].second != 1)
        throw Error("invert_monomial needs a v-power coefficient");
    return HeckeElem::t_inv(w).scaled(Laurent::v_pow(-c.terms()[0].first));
}

std::map<std::tuple<int, int, int>, HeckeElem>& x_cache() {
    static std::map<std::tuple<int, int, int>, HeckeElem> cache;
    return cache;
}
std::mutex& x_cache_mutex() {
    static std::mutex m;
    return m;
}

HeckeElem compute_x_generator(int r, int j, int sign) {
    if (j == 1) {
        // X_1^{-1} = T_rho T~_{r-1} ... T~_1  (a single scaled basis element).
        HeckeElem x1inv = HeckeElem::t_rho(r, 1);
        for (int i = r - 1; i >= 1; --i)
            x1inv = x1inv.times_simple(i).scaled(Laurent::v_pow(-1));
        return sign < 0 ? x1inv : invert_monomial(x1inv);
    }
    if (sign > 0) {
        // X_{j+1} = v^{-2} T_j X_j T_j
        HeckeElem x = HeckeElem::t_simple(r, j - 1) * x_generator(r, j - 1, +1);
        return x.times_simple(j - 1).scaled(Laurent::v_pow(-2));
    }
    // X_{j+1}^{-1} = v^2 T_j^{-1} X_j^{-1} T_j^{-1}
    HeckeElem x = HeckeElem::t_inv(AffinePerm::simple(r, j - 1)) * x_generator(r, j - 1, -1);
    return x.times_simple_inv(j - 1).scaled(Laurent::v_pow(2));
}

}  // namespace

HeckeElem x_generator(int r, int j, int sign) {
    if (j < 1 || j > r) throw Error("X generator index out of range");
    sign = sign >= 0 ? 1 : -1;
    auto key = std::make_tuple(r, j, sign);
    {
        std::lock_guard<std::mutex> lock(x_cache_mutex());
        auto it = x_cache().find(key);
        if (it != x_cache().end()) return it->second;
    }
    HeckeElem x = compute_x_generator(r, j, sign);
    std::lock_guard<std::mutex> lock(x_cache_mutex());
    x_cache().try_emplace(key, x);
    return x;
}

HeckeElem x_monomial(int r, const std::vector<long>& exponents) {
    if (static_cast<int>(exponents.size()) != r)
        throw Error("x_monomial needs one exponent per tensor slot");
    HeckeElem out = HeckeElem::unit(r);
    for (int j = 1; j <= r; ++j) {
        long e = exponents[static_cast<size_t>(j - 1)];
        int sign = e >= 0 ? 1 : -1;
        for (long k = 0; k < std::abs(e); ++k) out = out * x_generator(r, j, sign);
    }
    return out;
}

namespace {

// kappa on a single basis element of the first factor.
HeckeElem embed_first(int r1, int r, const AffinePerm& w) {
    HeckeElem out = HeckeElem::unit(r);
    if (r1 == 0) return out;
    long m = w.rho_shift();
    if (m != 0) {
        // kappa(T_rho' x 1) = T_rho T~_{r-1} ... T~_{r1}  (cancellation of the
        // common tail of the two X_1^{-1} words).
        HeckeElem p = HeckeElem::t_rho(r, 1);
        for (int i = r - 1; i >= r1; --i) p = p.times_simple(i).scaled(Laurent::v_pow(-1));
        HeckeElem pinv = invert_monomial(p);
        const HeckeElem& step = m > 0 ? p : pinv;
        for (long k = 0; k < std::abs(m); ++k) out = out * step;
    }
    for (int i : w.reduced_word()) {
        if (i < r1) {
            out = out.times_simple(i);
        } else {
            // wrap reflection s_0' = rho' s_{r1-1} rho'^{-1}
            HeckeElem p = HeckeElem::t_rho(r, 1);
            for (int s = r - 1; s >= r1; --s) p = p.times_simple(s).scaled(Laurent::v_pow(-1));
            HeckeElem pinv = invert_monomial(p);
            out = out * p;
            out = out.times_simple(r1 - 1);
            out = out * pinv;
        }
    }
    return out;
}

// kappa on a single basis element of the second factor (shift by r1).
HeckeElem embed_second(int r1, int r, const AffinePerm& w) {
    const int r2 = w.period();
    HeckeElem out = HeckeElem::unit(r);
    if (r2 == 0) return out;
    long m = w.rho_shift();
    HeckeElem q(r), qinv(r);
    bool have_q = false;
    auto make_q = [&]() {
        if (have_q) return;
        // kappa(1 x T_rho'') = X_{r1+1}^{-1} T~_{r1+1}^{-1} ... T~_{r1+r2-1}^{-1}
        q = x_generator(r, r1 + 1, -1);
        for (int i = r1 + 1; i <= r1 + r2 - 1; ++i)
            q = q.times_simple_inv(i).scaled(Laurent::v_pow(1));
        // and its inverse T~_{r1+r2-1} ... T~_{r1+1} X_{r1+1}
        qinv = HeckeElem::unit(r);
        for (int i = r1 + r2 - 1; i >= r1 + 1; --i)
            qinv = qinv.times_simple(i).scaled(Laurent::v_pow(-1));
        qinv = qinv * x_generator(r, r1 + 1, +1);
        have_q = true;
    };
    if (m != 0) {
        make_q();
        const HeckeElem& step = m > 0 ? q : qinv;
        for (long k = 0; k < std::abs(m); ++k) out = out * step;
    }
    for (int i : w.reduced_word()) {
        if (i < r2) {
            out = out.times_simple(r1 + i);
        } else {
            make_q();
            out = out * q;
            out = out.times_simple(r1 + r2 - 1);
            out = out * qinv;
        }
    }
    return out;
}

}  // namespace

HeckeElem kappa(const HeckeElem& h1, const HeckeElem& h2) {
    const int r1 = h1.period(), r2 = h2.period();
    const int r = r1 + r2;
    HeckeElem out(r);
    for (const auto& [w1, c1] : h1.terms()) {
        HeckeElem e1 = embed_first(r1, r, w1);
        for (const auto& [w2, c2] : h2.terms()) {
            HeckeElem e2 = embed_second(r1, r, w2);
            out += (e1 * e2).scaled(c1 * c2);
        }
    }
    return out;
}

HeckeElem double_coset_sum(const Composition& lambda, const AffinePerm& d,
                           const Composition& mu) {
    HeckeElem out(static_cast<int>(lambda.sigma()));
    for (const AffinePerm& w : enumerate_double_coset(lambda, d, mu))
        out += HeckeElem::t(w);
    return out;
}

TrhoCertificate check_trho(int r) {
    TrhoCertificate cert;
    auto record = [&](const HeckeElem& lhs, const HeckeElem& rhs, const std::string& tag) {
        if (!(lhs == rhs)) {
            cert.pass = false;
            cert.failures.push_back(tag + ": " + lhs.str() + " != " + rhs.str());
        }
    };
    for (int k = 1; k <= r; ++k) {
        HeckeElem base = HeckeElem::unit(r);
        for (int i = k - 1; i >= 1; --i) base = base.times_simple(i).scaled(Laurent::v_pow(-1));
        base = base * x_generator(r, 1, +1);
        HeckeElem lhs = HeckeElem::unit(r);
        for (int t = 0; t < k; ++t) lhs = lhs * base;
        std::vector<long> exps(static_cast<size_t>(r), 0);
        for (int j = 1; j <= k; ++j) exps[static_cast<size_t>(j - 1)] = 1;
        record(lhs, x_monomial(r, exps), "inner identity k=" + std::to_string(k));
    }
    HeckeElem lhs = HeckeElem::unit(r);
    for (int t = 0; t < r; ++t) lhs = lhs * HeckeElem::t_rho(r, 1);
    record(lhs, x_monomial(r, std::vector<long>(static_cast<size_t>(r), -1)), "T_rho^r");
    return cert;
}

}  // namespace afschur
