// Acceptance suite: drives every exit criterion at full sweep scale and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <iostream>
#include <sstream>
#include <vector>

#include "gwloc/correspondence.hpp"

using namespace gwloc;

namespace {

int failures = 0;

void line(int idx, bool ok, const std::string& what) {
    std::cout << "criterion " << idx << (ok ? ": PASS - " : ": FAIL - ") << what << std::endl;
    if (!ok) ++failures;
}

RatFunc2 u_pow(const Rational& c, int k) {
    return RatFunc2::monomial(c, 0, 0) * RatFunc2::linear_power(Rational(1), Rational(0), k);
}

// criterion 5: the pinned values, each first re-derived by its
// hand-evaluation oracle (the explicit factor product of the single graph).
bool pinned_small_values() {
    bool ok = true;

    // disk (1,0): vertex integral u, disk factor 1/u
    RatFunc2 hand10 = RatFunc2::u1() * u_pow(Rational(1), -1);
    ok = ok && hand10.restrict_antidiagonal() == UMonomial(Rational(1), 0);
    ok = ok && disk_invariant({1, 0}, {}) == hand10.restrict_antidiagonal();

    // disk (0,1): (-u) * (-1/u)
    RatFunc2 hand01 = (-RatFunc2::u1()) * u_pow(Rational(-1), -1);
    ok = ok && hand01.restrict_antidiagonal() == UMonomial(Rational(1), 0);
    ok = ok && disk_invariant({0, 1}, {}) == hand01.restrict_antidiagonal();

    // disk (2,1): (-1/u^2) * u * 1/(2u) * (-u) * (1/u)
    RatFunc2 hand21 = u_pow(Rational(-1), -2) * RatFunc2::u1() * u_pow(Rational(1, 2), -1) *
                      (-RatFunc2::u1()) * u_pow(Rational(1), -1);
    ok = ok && hand21.restrict_antidiagonal() == UMonomial(Rational(1, 2), -2);
    ok = ok && disk_invariant({2, 1}, {}) == hand21.restrict_antidiagonal();

    // closed restricted (1,0): (-1/u1^2) * u1 * (-u1)
    RatFunc2 closed10 = (RatFunc2(-1) / (RatFunc2::u1() * RatFunc2::u1())) * RatFunc2::u1() *
                        (-RatFunc2::u1());
    ok = ok && closed10.restrict_antidiagonal() == UMonomial(Rational(1), 0);
    ok = ok && closed_invariant_restricted({1, 0}, {}) == closed10.restrict_antidiagonal();

    // closed restricted (0,1): (-1/u2^2) * u2 * (-u2)
    RatFunc2 closed01 = (RatFunc2(-1) / (RatFunc2::u2() * RatFunc2::u2())) * RatFunc2::u2() *
                        (-RatFunc2::u2());
    ok = ok && closed01.restrict_antidiagonal() == UMonomial(Rational(1), 0);
    ok = ok && closed_invariant_restricted({0, 1}, {}) == closed01.restrict_antidiagonal();

    return ok;
}

// criterion 6: the three unstable-integral identities in the 1/(1 - d psi)
// normalization, for d, d1, d2 in {1, 2, 3}, both torus signs.
bool unstable_conventions() {
    bool ok = true;
    for (long d = 1; d <= 3; ++d) {
        for (int sgn : {1, -1}) {
            FlagWeight w{WeightVar::u, Rational(sgn, d)};
            // integral of 1/(1 - d psi) over one point = 1/d^2  <=>  value w
            ok = ok && vertex_integral({{w}, {}}) == w.value();
            // integral of 1/(1 - d psi_1) over two points = 1/d  <=>  value 1
            ok = ok && vertex_integral({{w}, {0}}) == RatFunc2(1);
        }
    }
    for (long d1 = 1; d1 <= 3; ++d1) {
        for (long d2 = 1; d2 <= 3; ++d2) {
            FlagWeight w1{WeightVar::u, Rational(1, d1)};
            FlagWeight w2{WeightVar::u, Rational(1, d2)};
            // integral of 1/((1-d1 psi_1)(1-d2 psi_2)) = 1/(d1+d2)
            // <=>  value d1 d2 / ((d1 + d2) u)
            RatFunc2 expected = u_pow(Rational(d1 * d2, d1 + d2), -1);
            ok = ok && vertex_integral({{w1, w2}, {}}) == expected;
        }
    }
    return ok;
}

// criterion 7: closed-form psi integrals against the string-equation
// recursion, every exponent tuple with h <= 8 points.
bool psi_oracle_equivalence() {
    bool ok = true;
    for (int h = 3; h <= 8; ++h) {
        std::vector<int> t(static_cast<std::size_t>(h), 0);
        auto rec = [&](auto&& self, int idx, int left, int lo) -> void {
            if (idx == h - 1) {
                if (left < lo) return;
                t[static_cast<std::size_t>(idx)] = left;
                ok = ok && psi_top_intersection(t) == psi_string_equation(t);
                return;
            }
            for (int v = lo; v <= left; ++v) {
                t[static_cast<std::size_t>(idx)] = v;
                self(self, idx + 1, left - v, v);
            }
        };
        rec(rec, 0, h - 3, 0);
    }
    return ok;
}

} // namespace

int main() {
    SweepOptions opt;
    opt.max_total_degree = 5;
    opt.max_markings = 2;
    opt.max_descendant = 2;

    std::ostringstream first_run;
    SweepResult res = run_sweep(opt, first_run, "text");

    std::ostringstream scope;
    scope << " (betas d1+d2 <= " << opt.max_total_degree << ", d1 != d2; n <= "
          << opt.max_markings << "; a <= " << opt.max_descendant << "; " << res.points
          << " points)";

    line(1, res.theorem_failures == 0 && res.integrity_errors == 0 && res.points == 774,
         "correspondence of restricted closed and disk invariants, exact equality" +
             scope.str());
    line(2, res.g11_failures == 0,
         "disk invariant equals (-1)^(mu+1) mu times the one-leg stratum sum" + scope.str());
    line(3, res.valuation_failures == 0,
         "every contribution has s-valuation >= k-1 on its stratum" + scope.str());
    line(4, res.stratum0_rows == 0, "no stratum-0 graph occurs when d1 != d2" + scope.str());
    line(5, pinned_small_values(),
         "pinned values: disk (1,0)=1, (0,1)=1, (2,1)=1/(2u^2); closed restricted (1,0)=1, "
         "(0,1)=1, re-derived by hand-evaluation oracles");
    line(6, unstable_conventions(),
         "unstable integral conventions pinned for d, d1, d2 in {1,2,3}");
    line(7, psi_oracle_equivalence(),
         "psi closed form equals string-equation recursion for all h <= 8");
    line(8, res.crosscheck_failures == 0 && res.crosscheck_runs > 0,
         "tuple weights agree with the explicit multinomial expansion (" +
             std::to_string(res.crosscheck_runs) + " tuples with at least 3 legs)");
    line(9,
         res.integrity_errors == 0 && res.symmetry_failures == 0 && res.symmetry_checks > 0,
         "homogeneity and single-monomial restriction hold; fan symmetry of full invariants "
         "holds (" +
             std::to_string(res.symmetry_checks) + " pairs)");

    std::ostringstream second_run;
    run_sweep(opt, second_run, "text");
    line(10, first_run.str() == second_run.str() && !first_run.str().empty(),
         "two consecutive sweep runs are byte-identical (" +
             std::to_string(first_run.str().size()) + " bytes)");

    std::cout << (failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: FAILURES present")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
