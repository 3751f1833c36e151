#include "afschur/json_io.hpp"

#include <sstream>

namespace afschur {

namespace {
const Int kI64Max = Int(std::numeric_limits<int64_t>::max());
const Int kI64Min = Int(std::numeric_limits<int64_t>::min());
}  // namespace

Json laurent_to_json(const Laurent& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json pair = Json::array();
        pair.push_back(e);
        if (c <= kI64Max && c >= kI64Min)
            pair.push_back(static_cast<int64_t>(c));
        else
            pair.push_back(c.str());
        out.push_back(std::move(pair));
    }
    return out;
}

Laurent laurent_from_json(const Json& j) {
    std::vector<Laurent::Term> terms;
    for (const auto& pair : j) {
        long e = pair.at(0).get<long>();
        Int c = pair.at(1).is_string() ? Int(pair.at(1).get<std::string>())
                                       : Int(pair.at(1).get<int64_t>());
        terms.emplace_back(e, std::move(c));
    }
    return Laurent::from_terms(std::move(terms));
}

Json matrix_to_json(const PeriodicMatrix& A) {
    Json out;
    out["n"] = A.period();
    Json entries = Json::array();
    for (const auto& [key, v] : A.band()) {
        entries.push_back(Json::array({key.first, key.second, v}));
    }
    out["entries"] = std::move(entries);
    return out;
}

PeriodicMatrix matrix_from_json(const Json& j) {
    PeriodicMatrix A(j.at("n").get<int>());
    for (const auto& e : j.at("entries"))
        A.add_at(e.at(0).get<long>(), e.at(1).get<long>(), e.at(2).get<long>());
    return A;
}

std::string matrix_to_compact(const PeriodicMatrix& A) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : A.band()) {
        if (!first) os << ";";
        first = false;
        os << key.first << "," << key.second << ":" << v;
    }
    return first ? std::string("0") : os.str();
}

}  // namespace afschur
