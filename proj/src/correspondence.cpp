#include "gwloc/correspondence.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gwloc {

namespace {

void check_alpha_corr(const std::vector<Insertion>& ins) {
    for (const auto& i : ins) {
        if (i.alpha != 1 && i.alpha != 2)
            throw std::domain_error("correspondence insertions use basis indices 1 and 2");
        if (i.a < 0) throw std::domain_error("negative descendant exponent");
    }
}

std::vector<int> subset_of(const std::vector<int>& v, unsigned mask) {
    std::vector<int> r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) r.push_back(v[i]);
    return r;
}

std::vector<int> complement_of(const std::vector<int>& v, unsigned mask) {
    std::vector<int> r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(mask & (1u << i))) r.push_back(v[i]);
    return r;
}

long aut_factor(const std::vector<Leg>& legs) {
    long aut = 1, run = 1;
    for (std::size_t i = 1; i < legs.size(); ++i) {
        if (legs[i] == legs[i - 1]) {
            ++run;
            aut *= run;
        } else {
            run = 1;
        }
    }
    return aut;
}

std::vector<Insertion> pick(const std::vector<Insertion>& ins, const std::vector<int>& marks) {
    std::vector<Insertion> r;
    for (int m : marks) r.push_back(ins[static_cast<std::size_t>(m - 1)]);
    return r;
}

// (-1)^e as a Rational
Rational par(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

UMonomial tuple_weight(const CorrespondenceTuple& t, const std::vector<Insertion>& ins) {
    int l = static_cast<int>(t.type1.size());
    int m = static_cast<int>(t.type2.size());
    VertexIntegralSpec spec;
    for (const auto& leg : t.type1) spec.flags.push_back({WeightVar::u, Rational(-1, leg.mu)});
    for (const auto& leg : t.type2) spec.flags.push_back({WeightVar::u, Rational(1, leg.mu)});

    RatFunc2 w = RatFunc2::monomial(par(l + m - 1), 2 * (l + m - 1), 0); // (-u^2)^{l+m-1}
    w *= RatFunc2(Rational(1, aut_factor(t.type1) * aut_factor(t.type2)));
    w *= vertex_integral(spec);
    for (const auto& leg : t.type1) {
        UMonomial disk = disk_invariant({leg.d + leg.mu, leg.d}, pick(ins, leg.marks));
        w *= RatFunc2(par(leg.mu)) * RatFunc2::linear_power(Rational(1), Rational(0), -1) *
             to_ratfunc(disk);
        if (w.is_zero()) return UMonomial();
    }
    for (const auto& leg : t.type2) {
        UMonomial disk = disk_invariant({leg.d, leg.d + leg.mu}, pick(ins, leg.marks));
        w *= RatFunc2(par(leg.mu + 1)) * RatFunc2::linear_power(Rational(1), Rational(0), -1) *
             to_ratfunc(disk);
        if (w.is_zero()) return UMonomial();
    }
    return w.restrict_antidiagonal();
}

// Enumerate all tuples in canonical order (type-1 legs first, each type
// nondecreasing) and hand them to `emit`.
template <typename F>
void enumerate_tuples(std::pair<int, int> beta, int n, F&& emit) {
    std::vector<int> all_marks;
    for (int i = 1; i <= n; ++i) all_marks.push_back(i);

    CorrespondenceTuple cur;
    // x: unassigned d1-degree, y: unassigned d2-degree, marks: unassigned ids
    auto gen2 = [&](auto&& self, int x, int y, std::vector<int> marks,
                    std::optional<Leg> minimum) -> void {
        if (x == 0 && y == 0 && marks.empty()) {
            int l = static_cast<int>(cur.type1.size());
            int m = static_cast<int>(cur.type2.size());
            if (l + m >= 1 && !(l == 1 && m == 1 && cur.type1[0].mu == cur.type2[0].mu))
                emit(cur);
            return;
        }
        for (int mu = 1; mu <= y; ++mu) {
            for (int d = 0; d <= std::min(x, y - mu); ++d) {
                for (unsigned mask = 0; mask < (1u << marks.size()); ++mask) {
                    Leg leg{mu, d, subset_of(marks, mask)};
                    if (minimum && leg < *minimum) continue;
                    cur.type2.push_back(leg);
                    self(self, x - d, y - mu - d, complement_of(marks, mask), leg);
                    cur.type2.pop_back();
                }
            }
        }
    };
    auto gen1 = [&](auto&& self, int x, int y, std::vector<int> marks,
                    std::optional<Leg> minimum) -> void {
        gen2(gen2, x, y, marks, std::nullopt);
        for (int mu = 1; mu <= x; ++mu) {
            for (int d = 0; d <= std::min(x - mu, y); ++d) {
                for (unsigned mask = 0; mask < (1u << marks.size()); ++mask) {
                    Leg leg{mu, d, subset_of(marks, mask)};
                    if (minimum && leg < *minimum) continue;
                    cur.type1.push_back(leg);
                    self(self, x - mu - d, y - d, complement_of(marks, mask), leg);
                    cur.type1.pop_back();
                }
            }
        }
    };
    gen1(gen1, beta.first, beta.second, all_marks, std::nullopt);
}

std::string leg_str(const Leg& leg) {
    std::string s = "(mu=" + std::to_string(leg.mu) + ",d=" + std::to_string(leg.d) + ",A={";
    for (std::size_t i = 0; i < leg.marks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(leg.marks[i]);
    }
    return s + "})";
}

std::string ins_str(const std::vector<Insertion>& ins) {
    std::string s = "[";
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ins[i].alpha) + ":" + std::to_string(ins[i].a);
    }
    return s + "]";
}

} // namespace

UMonomial rhs_theorem(std::pair<int, int> beta, const std::vector<Insertion>& ins,
                      std::vector<TupleTerm>* breakdown) {
    if (beta.first == beta.second)
        throw VanishingDegreeError("correspondence needs d1 != d2");
    if (beta.first < 0 || beta.second < 0) throw std::domain_error("ineffective class");
    check_alpha_corr(ins);
    UMonomial total;
    enumerate_tuples(beta, static_cast<int>(ins.size()), [&](const CorrespondenceTuple& t) {
        UMonomial w = tuple_weight(t, ins);
        if (breakdown) breakdown->push_back({t, w});
        total = total + w;
    });
    return total;
}

bool stable_multinomial_crosscheck(const CorrespondenceTuple& t) {
    int l = static_cast<int>(t.type1.size());
    int m = static_cast<int>(t.type2.size());
    if (l + m < 3)
        throw std::domain_error("stable_multinomial_crosscheck needs at least three legs");

    VertexIntegralSpec spec;
    for (const auto& leg : t.type1) spec.flags.push_back({WeightVar::u, Rational(-1, leg.mu)});
    for (const auto& leg : t.type2) spec.flags.push_back({WeightVar::u, Rational(1, leg.mu)});
    RatFunc2 via_integral = vertex_integral(spec);

    // Direct multinomial sum over (b_i, c_j) with total l + m - 3:
    //   prod (mu1_i/(-u))^{1+b_i} prod (mu2_j/u)^{1+c_j} (l+m-3)!/prod b! prod c!
    RatFunc2 via_sum;
    int total = l + m - 3;
    std::vector<int> e(static_cast<std::size_t>(l + m), 0);
    auto emit = [&]() {
        Rational coef = Rational::factorial(static_cast<unsigned long>(total));
        int upow = 0;
        for (int i = 0; i < l + m; ++i) {
            int b = e[static_cast<std::size_t>(i)];
            coef /= Rational::factorial(static_cast<unsigned long>(b));
            long mu = i < l ? t.type1[static_cast<std::size_t>(i)].mu
                            : t.type2[static_cast<std::size_t>(i - l)].mu;
            Rational base = i < l ? Rational(-mu) : Rational(mu);
            coef *= base.pow(1 + b);
            upow -= 1 + b;
        }
        via_sum += RatFunc2::monomial(coef, 0, 0) *
                   RatFunc2::linear_power(Rational(1), Rational(0), upow);
    };
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == l + m - 1) {
            e[static_cast<std::size_t>(idx)] = left;
            emit();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return via_integral == via_sum;
}

std::vector<ValuationRow> vanishing_report(std::pair<int, int> beta,
                                           const std::vector<Insertion>& ins) {
    auto eval = evaluate_closed(beta, ins);
    std::vector<ValuationRow> rows;
    rows.reserve(eval->graphs.size());
    for (std::size_t i = 0; i < eval->graphs.size(); ++i) {
        ValuationRow row;
        row.code = canonical_code(eval->graphs[i]);
        row.k = eval->strata[i].k;
        const RatFunc2& c = eval->contributions[i];
        if (c.is_zero()) {
            row.zero = true;
            row.pass = true;
        } else {
            row.s_valuation = c.s_valuation();
            row.pass = row.s_valuation >= row.k - 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

G11Report check_g11_identity(std::pair<int, int> beta, const std::vector<Insertion>& ins) {
    if (beta.first == beta.second)
        throw VanishingDegreeError("lemma check needs d1 != d2");
    check_alpha_corr(ins);
    G11Report rep;
    rep.mu = std::abs(beta.first - beta.second);
    rep.disk = disk_invariant(beta, ins);
    auto eval = evaluate_closed(beta, ins);
    UMonomial sum;
    for (std::size_t i = 0; i < eval->graphs.size(); ++i) {
        const auto& tag = eval->strata[i];
        if (tag.k != 1 || !tag.l || *tag.l != 1) continue;
        rep.graph_codes.push_back(canonical_code(eval->graphs[i]));
        sum = sum + eval->contributions[i].restrict_antidiagonal();
    }
    rep.closed_side = sum * UMonomial(par(rep.mu + 1) * Rational(rep.mu), 0);
    rep.equal = rep.disk == rep.closed_side;
    return rep;
}

VerificationReport verify_correspondence(std::pair<int, int> beta,
                                         const std::vector<Insertion>& ins) {
    VerificationReport rep;
    rep.beta = beta;
    rep.insertions = ins;
    rep.lhs = closed_invariant_restricted(beta, ins);
    rep.rhs = rhs_theorem(beta, ins, &rep.tuples);
    rep.valuations = vanishing_report(beta, ins);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["beta"] = {r.beta.first, r.beta.second};
    auto ja = nlohmann::ordered_json::array();
    for (const auto& i : r.insertions) {
        nlohmann::ordered_json ji;
        ji["alpha"] = i.alpha;
        ji["a"] = i.a;
        ja.push_back(std::move(ji));
    }
    j["insertions"] = std::move(ja);
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["status"] = r.equal ? "equal" : "mismatch";
    auto jt = nlohmann::ordered_json::array();
    for (const auto& term : r.tuples) {
        nlohmann::ordered_json t;
        auto one = nlohmann::ordered_json::array();
        for (const auto& leg : term.tuple.type1) {
            nlohmann::ordered_json jl;
            jl["mu"] = leg.mu;
            jl["d"] = leg.d;
            jl["A"] = leg.marks;
            one.push_back(std::move(jl));
        }
        t["type1"] = std::move(one);
        auto two = nlohmann::ordered_json::array();
        for (const auto& leg : term.tuple.type2) {
            nlohmann::ordered_json jl;
            jl["mu"] = leg.mu;
            jl["d"] = leg.d;
            jl["A"] = leg.marks;
            two.push_back(std::move(jl));
        }
        t["type2"] = std::move(two);
        t["weight"] = term.weight.str();
        jt.push_back(std::move(t));
    }
    j["tuples"] = std::move(jt);
    auto jv = nlohmann::ordered_json::array();
    for (const auto& row : r.valuations) {
        nlohmann::ordered_json v;
        v["graph"] = row.code;
        v["k"] = row.k;
        if (row.zero) {
            v["s_valuation"] = nullptr;
        } else {
            v["s_valuation"] = row.s_valuation;
        }
        v["pass"] = row.pass;
        jv.push_back(std::move(v));
    }
    j["valuations"] = std::move(jv);
    return j.dump();
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "beta=(" << r.beta.first << "," << r.beta.second << ") ins=" << ins_str(r.insertions)
        << "\n";
    out << "  lhs = " << r.lhs.str() << "\n";
    out << "  rhs = " << r.rhs.str() << "\n";
    out << "  status = " << (r.equal ? "equal" : "mismatch") << "\n";
    out << "  tuples:\n";
    for (const auto& term : r.tuples) {
        out << "    ";
        for (const auto& leg : term.tuple.type1) out << "1" << leg_str(leg);
        for (const auto& leg : term.tuple.type2) out << "2" << leg_str(leg);
        out << " -> " << term.weight.str() << "\n";
    }
    out << "  valuations:\n";
    for (const auto& row : r.valuations) {
        out << "    k=" << row.k << " ";
        if (row.zero) {
            out << "contribution=0";
        } else {
            out << "s_valuation=" << row.s_valuation;
        }
        out << " " << (row.pass ? "pass" : "FAIL") << " " << row.code << "\n";
    }
    return out.str();
}

std::vector<std::vector<Insertion>> sweep_insertion_lists(int max_markings, int max_descendant) {
    std::vector<Insertion> menu;
    for (int alpha = 1; alpha <= 2; ++alpha)
        for (int a = 0; a <= max_descendant; ++a) menu.push_back({alpha, a});
    std::vector<std::vector<Insertion>> lists = {{}};
    std::vector<std::vector<Insertion>> frontier = {{}};
    for (int n = 1; n <= max_markings; ++n) {
        std::vector<std::vector<Insertion>> next;
        for (const auto& base : frontier) {
            for (const auto& item : menu) {
                auto l = base;
                l.push_back(item);
                next.push_back(std::move(l));
            }
        }
        lists.insert(lists.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return lists;
}

SweepResult run_sweep(const SweepOptions& opt, std::ostream& out, const std::string& format) {
    const bool json = format == "json";
    SweepResult res;
    auto lists = sweep_insertion_lists(opt.max_markings, opt.max_descendant);
    for (int total = 1; total <= opt.max_total_degree; ++total) {
        for (int d1 = total; d1 >= 0; --d1) {
            int d2 = total - d1;
            if (d1 == d2) continue;
            for (const auto& ins : lists) {
                ++res.points;
                std::string point_error;
                bool theorem_ok = false, g11_ok = false, vals_ok = false, cross_ok = true,
                     sym_ok = true;
                long rows_failed = 0, rows_k0 = 0;
                UMonomial lhs, rhs;
                long crosschecks_here = 0;
                bool sym_checked = false;
                try {
                    VerificationReport rep = verify_correspondence({d1, d2}, ins);
                    lhs = rep.lhs;
                    rhs = rep.rhs;
                    theorem_ok = rep.equal;
                    for (const auto& row : rep.valuations) {
                        if (!row.pass) ++rows_failed;
                        if (row.k == 0) ++rows_k0;
                    }
                    vals_ok = rows_failed == 0;
                    for (const auto& term : rep.tuples) {
                        if (term.tuple.type1.size() + term.tuple.type2.size() >= 3) {
                            ++crosschecks_here;
                            if (!stable_multinomial_crosscheck(term.tuple)) {
                                cross_ok = false;
                            }
                        }
                    }
                    g11_ok = check_g11_identity({d1, d2}, ins).equal;
                    if (d1 > d2) {
                        // fan symmetry at the level of full invariants
                        sym_checked = true;
                        std::vector<Insertion> swapped = ins;
                        for (auto& i : swapped) i.alpha = i.alpha == 1 ? 2 : 1;
                        sym_ok = closed_invariant({d1, d2}, ins).swap_u1_u2() ==
                                 closed_invariant({d2, d1}, swapped);
                    }
                } catch (const IntegrityError& e) {
                    ++res.integrity_errors;
                    point_error = e.what();
                }
                res.theorem_failures += theorem_ok ? 0 : 1;
                res.g11_failures += g11_ok ? 0 : 1;
                res.valuation_failures += rows_failed;
                res.stratum0_rows += rows_k0;
                res.crosscheck_runs += crosschecks_here;
                res.crosscheck_failures += cross_ok ? 0 : 1;
                if (sym_checked) {
                    ++res.symmetry_checks;
                    res.symmetry_failures += sym_ok ? 0 : 1;
                }
                if (json) {
                    nlohmann::ordered_json j;
                    j["beta"] = {d1, d2};
                    auto ja = nlohmann::ordered_json::array();
                    for (const auto& i : ins) {
                        nlohmann::ordered_json ji;
                        ji["alpha"] = i.alpha;
                        ji["a"] = i.a;
                        ja.push_back(std::move(ji));
                    }
                    j["insertions"] = std::move(ja);
                    j["lhs"] = lhs.str();
                    j["rhs"] = rhs.str();
                    j["theorem"] = theorem_ok;
                    j["g11"] = g11_ok;
                    j["valuations"] = vals_ok;
                    j["crosscheck"] = cross_ok;
                    if (sym_checked) j["fan_symmetry"] = sym_ok;
                    if (!point_error.empty()) j["error"] = point_error;
                    out << j.dump() << "\n";
                } else {
                    out << "beta=(" << d1 << "," << d2 << ") ins=" << ins_str(ins)
                        << " lhs=" << lhs.str() << " rhs=" << rhs.str()
                        << " theorem=" << (theorem_ok ? "ok" : "FAIL")
                        << " g11=" << (g11_ok ? "ok" : "FAIL")
                        << " valuations=" << (vals_ok ? "ok" : "FAIL")
                        << " crosscheck=" << (cross_ok ? "ok" : "FAIL");
                    if (sym_checked) out << " fan_symmetry=" << (sym_ok ? "ok" : "FAIL");
                    if (!point_error.empty()) out << " error=\"" << point_error << "\"";
                    out << "\n";
                }
            }
        }
    }
    if (json) {
        nlohmann::ordered_json j;
        j["summary"] = res.all_pass() ? "pass" : "fail";
        j["points"] = res.points;
        j["theorem_failures"] = res.theorem_failures;
        j["g11_failures"] = res.g11_failures;
        j["valuation_failures"] = res.valuation_failures;
        j["stratum0_rows"] = res.stratum0_rows;
        j["crosscheck_runs"] = res.crosscheck_runs;
        j["crosscheck_failures"] = res.crosscheck_failures;
        j["symmetry_checks"] = res.symmetry_checks;
        j["symmetry_failures"] = res.symmetry_failures;
        j["integrity_errors"] = res.integrity_errors;
        out << j.dump() << "\n";
    } else {
        out << "summary: " << (res.all_pass() ? "pass" : "fail") << " points=" << res.points
            << " theorem_failures=" << res.theorem_failures
            << " g11_failures=" << res.g11_failures
            << " valuation_failures=" << res.valuation_failures
            << " stratum0_rows=" << res.stratum0_rows
            << " crosscheck_runs=" << res.crosscheck_runs
            << " crosscheck_failures=" << res.crosscheck_failures
            << " symmetry_checks=" << res.symmetry_checks
            << " symmetry_failures=" << res.symmetry_failures
            << " integrity_errors=" << res.integrity_errors << "\n";
    }
    return res;
}

} // namespace gwloc
