#include "afschur/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace afschur {

Laurent::Laurent(long c) {
    if (c != 0) terms_.emplace_back(0, Int(c));
}

Laurent::Laurent(Int c) {
    if (c != 0) terms_.emplace_back(0, std::move(c));
}

Laurent Laurent::term(Int c, long e) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
}

Laurent Laurent::v_pow(long e) { return term(1, e); }

Laurent Laurent::from_terms(std::vector<Term> terms) {
    Laurent p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Laurent::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(merged);
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int Laurent::coeff(long e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

long Laurent::min_exp() const { return terms_.front().first; }
long Laurent::max_exp() const { return terms_.back().first; }

Laurent Laurent::operator-() const {
    Laurent p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Int c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
    if (is_zero() || o.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<long, Int> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    terms_.clear();
    for (auto& [e, c] : acc)
        if (c != 0) terms_.emplace_back(e, std::move(c));
    return *this;
}

Laurent Laurent::bar() const {
    std::vector<Term> t = terms_;
    for (auto& [e, c] : t) e = -e;
    return from_terms(std::move(t));
}

Laurent Laurent::div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DivisionNotExact("division by zero");
    if (a.is_zero()) return {};
    // An exact quotient q satisfies min_exp(q) = min_exp(a) - min_exp(b); once
    // the working remainder drops below that bound the division cannot close.
    const long low_bound = a.min_exp() - b.min_exp();
    Laurent rem = a, quot;
    while (!rem.is_zero()) {
        long e = rem.max_exp() - b.max_exp();
        if (e < low_bound) throw DivisionNotExact("no Laurent quotient: " + a.str() + " / " + b.str());
        Int c = rem.terms().back().second;
        const Int& lead = b.terms().back().second;
        if (c % lead != 0) throw DivisionNotExact("leading coefficient not divisible: " + a.str() + " / " + b.str());
        Laurent t = term(c / lead, e);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

bool Laurent::is_nonneg() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second > 0; });
}

bool Laurent::in_v_inverse() const {
    return terms_.empty() || max_exp() <= -1;
}

Laurent Laurent::negative_part() const {
    std::vector<Term> t;
    for (const auto& tm : terms_)
        if (tm.first < 0) t.push_back(tm);
    return from_terms(std::move(t));
}

bool Laurent::is_bar_antisymmetric() const { return bar() == -*this; }

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || e == 0) os << abs.str();
        if (e != 0) {
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent gauss_binom(long c, long a) {
    if (a < 0) throw Error("gauss_binom: a must be >= 0");
    Laurent num = 1, den = 1;
    for (long s = 1; s <= a; ++s) {
        num *= Laurent::v_pow(c - s + 1) - Laurent::v_pow(-(c - s + 1));
        den *= Laurent::v_pow(s) - Laurent::v_pow(-s);
    }
    return Laurent::div_exact(num, den);
}

Laurent quantum_int(long m) {
    if (m < 0) return -quantum_int(-m);
    Laurent num = Laurent::v_pow(m) - Laurent::v_pow(-m);
    if (num.is_zero()) return {};
    return Laurent::div_exact(num, Laurent::v_pow(1) - Laurent::v_pow(-1));
}

Laurent quantum_factorial(long m) {
    Laurent p = 1;
    for (long s = 2; s <= m; ++s) p *= quantum_int(s);
    return p;
}

}  // namespace afschur
