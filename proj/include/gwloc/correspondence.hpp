#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gwloc/closed_gw.hpp"

namespace gwloc {

// One boundary leg of a correspondence tuple: winding mu > 0, internal
// degree d >= 0, and the set of marking ids the leg carries. Type-1 legs
// stand for disk classes (d + mu, d), type-2 legs for (d, d + mu).
struct Leg {
    int mu = 1;
    int d = 0;
    std::vector<int> marks; // sorted

    friend bool operator==(const Leg& a, const Leg& b) {
        return a.mu == b.mu && a.d == b.d && a.marks == b.marks;
    }
    friend bool operator<(const Leg& a, const Leg& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        if (a.d != b.d) return a.d < b.d;
        return a.marks < b.marks;
    }
};

struct CorrespondenceTuple {
    std::vector<Leg> type1; // nondecreasing
    std::vector<Leg> type2; // nondecreasing
};

struct TupleTerm {
    CorrespondenceTuple tuple;
    UMonomial weight;
};

// Right-hand side of the correspondence: sum over tuples of the product of
// disk invariants weighted by the tuple vertex integral. Evaluated through
// the unstable conventions when a tuple has fewer than three legs.
UMonomial rhs_theorem(std::pair<int, int> beta, const std::vector<Insertion>& ins,
                      std::vector<TupleTerm>* breakdown = nullptr);

// For l + m >= 3: re-evaluates the tuple's vertex integral through the
// explicit multinomial sum over (b_i, c_j) and compares exactly.
bool stable_multinomial_crosscheck(const CorrespondenceTuple& t);

struct ValuationRow {
    std::string code;
    int k = 0;
    bool zero = false;  // contribution vanishes identically
    int s_valuation = 0; // meaningful when !zero
    bool pass = false;
};
std::vector<ValuationRow> vanishing_report(std::pair<int, int> beta,
                                           const std::vector<Insertion>& ins);

struct G11Report {
    int mu = 0;
    UMonomial disk;
    UMonomial closed_side; // (-1)^{mu+1} mu * sum over the one-legged stratum
    bool equal = false;
    std::vector<std::string> graph_codes;
};
G11Report check_g11_identity(std::pair<int, int> beta, const std::vector<Insertion>& ins);

struct VerificationReport {
    std::pair<int, int> beta;
    std::vector<Insertion> insertions;
    UMonomial lhs;
    UMonomial rhs;
    bool equal = false;
    std::vector<TupleTerm> tuples;
    std::vector<ValuationRow> valuations;
};
VerificationReport verify_correspondence(std::pair<int, int> beta,
                                         const std::vector<Insertion>& ins);

std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

struct SweepOptions {
    int max_total_degree = 5;
    int max_markings = 2;
    int max_descendant = 2;
};

struct SweepResult {
    long points = 0;
    long theorem_failures = 0;
    long g11_failures = 0;
    long valuation_failures = 0;
    long stratum0_rows = 0;
    long crosscheck_runs = 0;
    long crosscheck_failures = 0;
    long symmetry_checks = 0;
    long symmetry_failures = 0;
    long integrity_errors = 0;
    bool all_pass() const {
        return theorem_failures == 0 && g11_failures == 0 && valuation_failures == 0 &&
               stratum0_rows == 0 && crosscheck_failures == 0 && symmetry_failures == 0 &&
               integrity_errors == 0;
    }
};

// Runs every check over the sweep and writes one deterministic line per
// (beta, insertions) point plus a summary. format is "text" or "json".
SweepResult run_sweep(const SweepOptions& opt, std::ostream& out, const std::string& format);

// The insertion lists visited by the sweep, in sweep order.
std::vector<std::vector<Insertion>> sweep_insertion_lists(int max_markings, int max_descendant);

} // namespace gwloc
