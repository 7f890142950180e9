#include "gwloc/closed_gw.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace gwloc {

namespace {

void check_alpha_closed(int alpha) {
    if (alpha < 0 || alpha > 2)
        throw std::domain_error("closed insertion basis index must be 0, 1 or 2");
}

// Sign and variable of sw(tau, sigma) for the incident pairs of the fan.
std::pair<int, WeightVar> tangent_data(ELabel tau, VLabel sigma) {
    if (tau == ELabel::Tau1 && sigma == VLabel::Sigma0) return {-1, WeightVar::u1};
    if (tau == ELabel::Tau2 && sigma == VLabel::Sigma0) return {-1, WeightVar::u2};
    if (tau == ELabel::Tau1 && sigma == VLabel::Sigma1) return {1, WeightVar::u1};
    if (tau == ELabel::Tau2 && sigma == VLabel::Sigma2) return {1, WeightVar::u2};
    throw std::domain_error("closed_tangent_weight: non-incident (tau, sigma) pair");
}

RatFunc2 var_value(WeightVar v) {
    return v == WeightVar::u2 ? RatFunc2::u2() : RatFunc2::u1();
}

} // namespace

RatFunc2 closed_tangent_weight(ELabel tau, VLabel sigma) {
    auto [sgn, var] = tangent_data(tau, sigma);
    RatFunc2 w = var_value(var);
    return sgn > 0 ? w : -w;
}

FlagWeight closed_flag_weight(ELabel tau, VLabel sigma, int d) {
    if (d <= 0) throw std::domain_error("closed_flag_weight: degree must be positive");
    auto [sgn, var] = tangent_data(tau, sigma);
    return FlagWeight{var, Rational(sgn, d)};
}

RatFunc2 closed_vertex_weight(VLabel sigma) {
    switch (sigma) {
        case VLabel::Sigma0: return RatFunc2::u1() * RatFunc2::u2();
        case VLabel::Sigma1: return -RatFunc2::u1() * RatFunc2::s();
        case VLabel::Sigma2: return -RatFunc2::u2() * RatFunc2::s();
        default: throw std::domain_error("closed_vertex_weight: closed fixed point expected");
    }
}

RatFunc2 closed_restriction(int alpha, VLabel sigma) {
    check_alpha_closed(alpha);
    if (alpha == 0) return sigma == VLabel::Sigma0 ? RatFunc2(1) : RatFunc2(0);
    if (alpha == 1) return sigma == VLabel::Sigma1 ? RatFunc2::u1() : RatFunc2(0);
    return sigma == VLabel::Sigma2 ? RatFunc2::u2() : RatFunc2(0);
}

RatFunc2 closed_edge_factor(ELabel tau, int d) {
    if (d <= 0) throw std::domain_error("closed_edge_factor: degree must be positive");
    if (tau == ELabel::Tau) throw std::domain_error("closed_edge_factor: closed edge label expected");
    using Key = std::pair<int, int>;
    static std::map<Key, RatFunc2> cache;
    Key key{tau == ELabel::Tau1 ? 1 : 2, d};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    Rational c = Rational::ipow(static_cast<unsigned long>(d), 2ul * static_cast<unsigned long>(d)) /
                 (Rational::factorial(static_cast<unsigned long>(d)).pow(2));
    if (d % 2 != 0) c = -c;
    // 1/u_i^{2d} as a linear-form power: u1 or u2 = s - u1.
    bool second = tau == ELabel::Tau2;
    RatFunc2 f = RatFunc2(c) * (second
                                    ? RatFunc2::linear_power(Rational(-1), Rational(1), -2 * d)
                                    : RatFunc2::linear_power(Rational(1), Rational(0), -2 * d));
    for (int j = 1; j <= d - 1; ++j) {
        // -u1 - u2 + j*u_i/d = -s + j*u_i/d
        Rational q(j, d);
        RatFunc2 lin = second
                           ? RatFunc2::linear_power(-q, q - Rational(1), 1) // -q*u1 + (q-1)*s
                           : RatFunc2::linear_power(q, Rational(-1), 1);    //  q*u1 - s
        f *= lin;
    }
    cache[key] = f;
    return f;
}

RatFunc2 closed_graph_contribution(const DecoratedGraph& g, const std::vector<Insertion>& ins) {
    if (g.kind != TargetKind::ClosedX)
        throw std::domain_error("closed_graph_contribution: closed-side graph expected");
    for (const auto& i : ins) {
        check_alpha_closed(i.alpha);
        if (i.a < 0) throw std::domain_error("negative descendant exponent");
    }
    auto adj = g.adjacency();
    RatFunc2 c(Rational(1, g.aut_order));
    for (const auto& e : g.edges)
        c *= closed_edge_factor(e.label, e.degree) * RatFunc2(Rational(1, e.degree));
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const auto& vert = g.vertices[static_cast<std::size_t>(v)];
        c *= closed_vertex_weight(vert.label).pow(g.valence(v) - 1);
        for (int m : vert.markings) {
            c *= closed_restriction(ins[static_cast<std::size_t>(m - 1)].alpha, vert.label);
            if (c.is_zero()) return c;
        }
        VertexIntegralSpec spec;
        for (int ei : adj[static_cast<std::size_t>(v)]) {
            const auto& e = g.edges[static_cast<std::size_t>(ei)];
            spec.flags.push_back(closed_flag_weight(e.label, vert.label, e.degree));
        }
        for (int m : vert.markings)
            spec.marking_exponents.push_back(ins[static_cast<std::size_t>(m - 1)].a);
        c *= vertex_integral(spec);
        if (c.is_zero()) return c;
    }
    return c;
}

std::shared_ptr<const ClosedEvaluation> evaluate_closed(std::pair<int, int> beta,
                                                        const std::vector<Insertion>& ins) {
    using Key = std::pair<std::pair<int, int>, std::vector<std::pair<int, int>>>;
    Key key{beta, {}};
    for (const auto& i : ins) key.second.push_back({i.alpha, i.a});
    static std::map<Key, std::shared_ptr<const ClosedEvaluation>> cache;
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    auto eval = std::make_shared<ClosedEvaluation>();
    eval->beta = beta;
    eval->graphs = enumerate_closed_graphs(static_cast<int>(ins.size()), beta);
    eval->contributions.reserve(eval->graphs.size());
    eval->strata.reserve(eval->graphs.size());
    for (const auto& g : eval->graphs) {
        eval->contributions.push_back(closed_graph_contribution(g, ins));
        eval->strata.push_back(classify_stratum(g));
    }
    if (cache.size() >= 24) cache.clear(); // keep the working set bounded
    cache[key] = eval;
    return eval;
}

RatFunc2 closed_invariant(std::pair<int, int> beta, const std::vector<Insertion>& ins) {
    auto eval = evaluate_closed(beta, ins);
    RatFunc2 total;
    std::optional<int> shared_degree;
    for (const auto& c : eval->contributions) {
        if (c.is_zero()) continue;
        int deg = c.homogeneous_degree();
        if (shared_degree && *shared_degree != deg)
            throw IntegrityError("closed contributions of mixed homogeneity degree");
        shared_degree = deg;
        total += c;
    }
    return total;
}

UMonomial closed_invariant_restricted(std::pair<int, int> beta,
                                      const std::vector<Insertion>& ins) {
    if (beta.first == beta.second)
        throw VanishingDegreeError("restricted closed invariant needs d1 != d2");
    auto eval = evaluate_closed(beta, ins);
    UMonomial total;
    for (std::size_t i = 0; i < eval->graphs.size(); ++i) {
        const auto& tag = eval->strata[i];
        if (tag.k == 0)
            throw IntegrityError("stratum-0 graph enumerated for d1 != d2: " +
                                 canonical_code(eval->graphs[i]));
        const RatFunc2& c = eval->contributions[i];
        if (c.is_zero()) continue;
        if (c.s_valuation() < tag.k - 1)
            throw IntegrityError("contribution valuation " + std::to_string(c.s_valuation()) +
                                 " below stratum bound " + std::to_string(tag.k - 1) + " for " +
                                 canonical_code(eval->graphs[i]));
        total = total + c.restrict_antidiagonal();
    }
    return total;
}

} // namespace gwloc
