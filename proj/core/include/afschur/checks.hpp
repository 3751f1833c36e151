#pragma once

#include <string>
#include <vector>

#include "afschur/json_io.hpp"
#include "afschur/modified.hpp"

namespace afschur {

/// Parameters shared by all certificate suites.  Each check reads the subset
/// it needs; run_check fills unset fields from the acceptance-scale defaults
/// of the named check.
struct CheckParams {
    int n = 2;
    int N = 3;
    long r = 2;        // rank bound (checks iterate r' <= r where sensible)
    long rp = 1;       // r'
    long rpp = 1;      // r''
    long kmin = -2;
    long kmax = 2;
    long spread = 1;   // support window |j - i| <= spread for enumerations
    unsigned long long seed = 12345;
    long samples = 25;  // random draws per relation in sampled checks

    Json to_json() const;
};

struct CheckReport {
    std::string check;
    Json params;
    std::string status = "pass";  // "pass" or "fail"
    std::vector<Json> witnesses;
    long millis = 0;

    bool passed() const { return status == "pass"; }
    Json to_json() const;

    void fail(Json witness);
    void note(Json witness);  // informational witness, does not flip status
};

/// The named suites, in default execution order:
///   hecke-relations, trho, module-axioms, zeta-relations, coproduct-lemma,
///   ke-shift, iota-cb, thm-A1, thm-A2, cor-39, thm-42, positivity,
///   f-consistency.
const std::vector<std::string>& check_names();

/// Acceptance-scale defaults for one named check.
CheckParams default_params(const std::string& name);

/// Runs one named suite with the given parameters.  Throws UnknownCheck for
/// an unrecognized name.
CheckReport run_check(const std::string& name, const CheckParams& params);

/// Structure-constant tables.
struct TableRow {
    std::string kind;  // "f" | "g" | "h"
    int n = 0;
    int N = 0;
    long rp = 0;
    long rpp = 0;
    long m = -1;  // h only
    PeriodicMatrix A{1}, B{1}, C{1};
    Laurent value;
};

struct ExportParams {
    std::string kind = "f";
    int n = 2;
    long r = 2;          // g: r = rp + rpp
    long rp = 1;
    long rpp = 1;
    long sigma_max = 2;  // f/h: sigma(A) bound
    long spread = 1;
};

/// All nonzero structure constants of the requested kind within the bounds,
/// deterministically sorted.
std::vector<TableRow> export_table(const ExportParams& params);

Json table_to_json(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace afschur
