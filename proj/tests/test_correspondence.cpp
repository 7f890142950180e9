#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>

#include "gwloc/correspondence.hpp"

using namespace gwloc;

TEST_CASE("rhs theorem: hand-evaluated degrees") {
    // (1,0): single tuple l=1, m=0, mu=1, d=0; weight (-u)(-1/u) disk(1,0)
    CHECK(rhs_theorem({1, 0}, {}) == UMonomial(Rational(1), 0));
    CHECK(rhs_theorem({0, 1}, {}) == UMonomial(Rational(1), 0));
    // (2,0): tuples {(2,0)} and {(1,0),(1,0)}: -1/(4u) + 1/(4u) = 0
    CHECK(rhs_theorem({2, 0}, {}).is_zero());
    // (2,1): 1/(2u^2) - 1/u^2 + 1/(2u^2) = 0
    CHECK(rhs_theorem({2, 1}, {}).is_zero());
    CHECK_THROWS_AS(rhs_theorem({1, 1}, {}), VanishingDegreeError);
    CHECK_THROWS_AS(rhs_theorem({1, 0}, {{0, 0}}), std::domain_error);
}

TEST_CASE("rhs tuple enumeration is canonical and complete") {
    std::vector<TupleTerm> terms;
    rhs_theorem({2, 1}, {}, &terms);
    // (2,1): l=1 (mu=1,d=1); l=1,m=1 (mu=2 | mu=1); l=2,m=1 (1,1 | 1)
    CHECK(terms.size() == 3);
    std::set<std::string> seen;
    for (const auto& t : terms) {
        std::string key;
        for (const auto& leg : t.tuple.type1)
            key += "1(" + std::to_string(leg.mu) + "," + std::to_string(leg.d) + ")";
        for (const auto& leg : t.tuple.type2)
            key += "2(" + std::to_string(leg.mu) + "," + std::to_string(leg.d) + ")";
        CHECK(seen.insert(key).second); // no duplicates
        // legs are nondecreasing within each type
        for (std::size_t i = 1; i < t.tuple.type1.size(); ++i)
            CHECK(!(t.tuple.type1[i] < t.tuple.type1[i - 1]));
        for (std::size_t i = 1; i < t.tuple.type2.size(); ++i)
            CHECK(!(t.tuple.type2[i] < t.tuple.type2[i - 1]));
    }
    CHECK(seen.count("1(1,1)") == 1);
    CHECK(seen.count("1(2,0)2(1,0)") == 1);
    CHECK(seen.count("1(1,0)1(1,0)2(1,0)") == 1);

    // the l=m=1 guard never fires for d1 != d2: both windings equal would
    // force d1 = d2, so every surviving tuple is admissible
    for (const auto& t : terms) {
        if (t.tuple.type1.size() == 1 && t.tuple.type2.size() == 1)
            CHECK(t.tuple.type1[0].mu != t.tuple.type2[0].mu);
    }
}

TEST_CASE("marked tuples split the insertions across legs") {
    std::vector<TupleTerm> terms;
    rhs_theorem({2, 0}, {{1, 1}}, &terms);
    // decorated tuples: {(2,0,{1})} and {(1,0,{}),(1,0,{1})}
    CHECK(terms.size() == 2);
    UMonomial total;
    for (const auto& t : terms) total = total + t.weight;
    CHECK(total == UMonomial(Rational(-1, 4), 0));
    CHECK(total == closed_invariant_restricted({2, 0}, {{1, 1}}));
}

TEST_CASE("verify correspondence on hand-checked points") {
    auto r1 = verify_correspondence({1, 0}, {});
    CHECK(r1.equal);
    CHECK(r1.lhs == UMonomial(Rational(1), 0));
    CHECK(r1.rhs == UMonomial(Rational(1), 0));

    auto r2 = verify_correspondence({2, 1}, {});
    CHECK(r2.equal);
    CHECK(r2.lhs.is_zero());

    auto r3 = verify_correspondence({3, 1}, {{1, 1}});
    CHECK(r3.equal);

    auto r4 = verify_correspondence({2, 0}, {{1, 1}});
    CHECK(r4.equal);
    CHECK(r4.lhs == UMonomial(Rational(-1, 4), 0));
}

TEST_CASE("disk invariant equals the weighted one-leg stratum sum") {
    for (auto beta : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 0}, {2, 1}, {3, 1}}) {
        CAPTURE(beta.first);
        CAPTURE(beta.second);
        auto rep = check_g11_identity(beta, {});
        CHECK(rep.equal);
        CHECK(!rep.graph_codes.empty());
    }
    auto rep21 = check_g11_identity({2, 1}, {});
    CHECK(rep21.disk == UMonomial(Rational(1, 2), -2));
    CHECK(rep21.closed_side == UMonomial(Rational(1, 2), -2));
    auto rep01 = check_g11_identity({0, 1}, {});
    CHECK(rep01.disk == UMonomial(Rational(1), 0));
}

TEST_CASE("vanishing report") {
    auto rows11 = vanishing_report({1, 1}, {});
    REQUIRE(rows11.size() == 1);
    CHECK(rows11[0].k == 0);
    CHECK(rows11[0].s_valuation == -1);
    CHECK(rows11[0].pass);

    auto rows10 = vanishing_report({1, 0}, {});
    REQUIRE(rows10.size() == 1);
    CHECK(rows10[0].k == 1);
    CHECK(rows10[0].s_valuation == 0);
    CHECK(rows10[0].pass);

    for (const auto& row : vanishing_report({2, 1}, {})) CHECK(row.pass);
    for (const auto& row : vanishing_report({3, 2}, {{1, 1}})) CHECK(row.pass);
}

TEST_CASE("stable range crosscheck") {
    CorrespondenceTuple t3;
    t3.type1 = {{1, 0, {}}, {1, 0, {}}, {1, 0, {}}};
    CHECK(stable_multinomial_crosscheck(t3));

    CorrespondenceTuple t21;
    t21.type1 = {{1, 0, {}}, {2, 1, {}}};
    t21.type2 = {{1, 0, {}}};
    CHECK(stable_multinomial_crosscheck(t21));

    CorrespondenceTuple t4;
    t4.type1 = {{1, 0, {}}, {3, 0, {}}};
    t4.type2 = {{2, 1, {}}, {1, 2, {}}};
    CHECK(stable_multinomial_crosscheck(t4));

    CorrespondenceTuple t11;
    t11.type1 = {{1, 0, {}}};
    t11.type2 = {{2, 0, {}}};
    CHECK_THROWS_AS(stable_multinomial_crosscheck(t11), std::domain_error);
}

TEST_CASE("rhs is independent of insertion labeling order") {
    std::vector<Insertion> ab = {{1, 1}, {2, 2}};
    std::vector<Insertion> ba = {{2, 2}, {1, 1}};
    CHECK(rhs_theorem({3, 1}, ab) == rhs_theorem({3, 1}, ba));
    CHECK(rhs_theorem({2, 0}, ab) == rhs_theorem({2, 0}, ba));
}

TEST_CASE("report serialization") {
    auto rep = verify_correspondence({2, 1}, {{1, 1}});
    auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["beta"] == nlohmann::json::array({2, 1}));
    CHECK(j["status"] == (rep.equal ? "equal" : "mismatch"));
    CHECK(j["insertions"][0]["alpha"] == 1);
    CHECK(j["tuples"].size() == rep.tuples.size());
    CHECK(j["valuations"].size() == rep.valuations.size());
    CHECK(report_json(rep) == report_json(verify_correspondence({2, 1}, {{1, 1}})));
    CHECK(!report_text(rep).empty());
}

TEST_CASE("small sweep is deterministic and clean") {
    SweepOptions opt;
    opt.max_total_degree = 2;
    opt.max_markings = 1;
    opt.max_descendant = 1;
    std::ostringstream a, b;
    auto ra = run_sweep(opt, a, "text");
    auto rb = run_sweep(opt, b, "text");
    CHECK(ra.all_pass());
    CHECK(rb.all_pass());
    CHECK(a.str() == b.str());
    // four betas times five insertion lists ({}, 1:0, 1:1, 2:0, 2:1)
    CHECK(ra.points == 20);

    std::ostringstream c;
    auto rc = run_sweep(opt, c, "json");
    CHECK(rc.all_pass());
    // every line parses as JSON
    std::istringstream lines(c.str());
    std::string line;
    long count = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line).is_object());
        ++count;
    }
    CHECK(count == rc.points + 1);
}
