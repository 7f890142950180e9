#include "gwloc/open_gw.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace gwloc {

namespace {

void check_alpha_open(int alpha) {
    if (alpha != 1 && alpha != 2)
        throw std::domain_error("open insertion basis index must be 1 or 2");
}

int sigma_sign(VLabel sigma) {
    if (sigma == VLabel::SigmaPlus) return 1;
    if (sigma == VLabel::SigmaMinus) return -1;
    throw std::domain_error("open fixed point expected");
}

} // namespace

RatFunc2 open_restriction(int alpha, VLabel sigma) {
    check_alpha_open(alpha);
    int sgn = sigma_sign(sigma);
    if (alpha == 1) return sgn > 0 ? RatFunc2::u1() : RatFunc2(0);
    return sgn > 0 ? RatFunc2(0) : -RatFunc2::u1();
}

RatFunc2 open_vertex_weight(VLabel sigma) {
    return sigma_sign(sigma) > 0 ? RatFunc2::u1() : -RatFunc2::u1();
}

RatFunc2 open_edge_factor(int d) {
    if (d <= 0) throw std::domain_error("open_edge_factor: degree must be positive");
    Rational c = Rational::ipow(static_cast<unsigned long>(d), 2ul * static_cast<unsigned long>(d)) /
                 (Rational::factorial(static_cast<unsigned long>(d)).pow(2));
    if (d % 2 != 0) c = -c;
    return RatFunc2(c) * RatFunc2::linear_power(Rational(1), Rational(0), -2 * d);
}

RatFunc2 disk_factor(int mu, DiskSide side) {
    if (mu <= 0) throw std::domain_error("disk_factor: winding must be positive");
    Rational c = Rational::ipow(static_cast<unsigned long>(mu), static_cast<unsigned long>(mu)) /
                 Rational::factorial(static_cast<unsigned long>(mu));
    if (side == DiskSide::minus && mu % 2 != 0) c = -c;
    return RatFunc2(c) * RatFunc2::linear_power(Rational(1), Rational(0), -mu);
}

RatFunc2 open_graph_contribution(const DecoratedGraph& g, const std::vector<Insertion>& ins) {
    if (g.kind != TargetKind::OpenP1)
        throw std::domain_error("open_graph_contribution: open-side graph expected");
    for (const auto& i : ins) {
        check_alpha_open(i.alpha);
        if (i.a < 0) throw std::domain_error("negative descendant exponent");
    }
    auto adj = g.adjacency();
    int e0 = adj[static_cast<std::size_t>(g.root)][0];
    int mu = g.edges[static_cast<std::size_t>(e0)].degree;
    DiskSide side = g.vertices[static_cast<std::size_t>(g.other_end(e0, g.root))].label ==
                            VLabel::SigmaPlus
                        ? DiskSide::plus
                        : DiskSide::minus;

    RatFunc2 c(Rational(1, g.aut_order));
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (static_cast<int>(ei) == e0) continue;
        const auto& e = g.edges[ei];
        c *= open_edge_factor(e.degree) * RatFunc2(Rational(1, e.degree));
    }
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (v == g.root) continue;
        const auto& vert = g.vertices[static_cast<std::size_t>(v)];
        int sgn = sigma_sign(vert.label);
        c *= open_vertex_weight(vert.label).pow(g.valence(v) - 1);
        for (int m : vert.markings) {
            c *= open_restriction(ins[static_cast<std::size_t>(m - 1)].alpha, vert.label);
            if (c.is_zero()) return c;
        }
        VertexIntegralSpec spec;
        for (int ei : adj[static_cast<std::size_t>(v)]) {
            int d = g.edges[static_cast<std::size_t>(ei)].degree;
            spec.flags.push_back({WeightVar::u, Rational(sgn, d)});
        }
        for (int m : vert.markings)
            spec.marking_exponents.push_back(ins[static_cast<std::size_t>(m - 1)].a);
        c *= vertex_integral(spec);
        if (c.is_zero()) return c;
    }
    c *= disk_factor(mu, side) * RatFunc2(Rational(1, mu));
    return c;
}

UMonomial disk_invariant(std::pair<int, int> beta, const std::vector<Insertion>& ins) {
    using Key = std::pair<std::pair<int, int>, std::vector<std::pair<int, int>>>;
    Key key{beta, {}};
    for (const auto& i : ins) key.second.push_back({i.alpha, i.a});
    std::sort(key.second.begin(), key.second.end());
    static std::map<Key, UMonomial> cache;
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    RatFunc2 total;
    std::optional<int> shared_degree;
    for (const auto& g : enumerate_open_graphs(static_cast<int>(ins.size()), beta)) {
        RatFunc2 c = open_graph_contribution(g, ins);
        if (c.is_zero()) continue;
        int deg = c.homogeneous_degree();
        if (shared_degree && *shared_degree != deg)
            throw IntegrityError("open contributions of mixed homogeneity degree");
        shared_degree = deg;
        total += c;
    }
    UMonomial result = total.restrict_antidiagonal();
    cache[key] = result;
    return result;
}

} // namespace gwloc
