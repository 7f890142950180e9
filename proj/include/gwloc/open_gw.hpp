#pragma once

#include <utility>
#include <vector>

#include "gwloc/graphs.hpp"
#include "gwloc/psi.hpp"
#include "gwloc/ratfunc.hpp"

namespace gwloc {

// One descendant insertion tau_a(phi_alpha). The open basis is phi_1, phi_2;
// the closed basis adds phi~_0 at alpha = 0.
struct Insertion {
    int alpha = 1;
    int a = 0;

    friend bool operator==(const Insertion& x, const Insertion& y) {
        return x.alpha == y.alpha && x.a == y.a;
    }
    friend bool operator<(const Insertion& x, const Insertion& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.a < y.a;
    }
};

// Restriction of phi_alpha to a fixed point: phi_1 -> u at sigma_+, 0 at
// sigma_-; phi_2 -> 0 at sigma_+, -u at sigma_-.
RatFunc2 open_restriction(int alpha, VLabel sigma);

// sw(sigma_pm) = +-u.
RatFunc2 open_vertex_weight(VLabel sigma);

// Edge factor h(tau, d) = (-1)^d d^{2d} / ((d!)^2 u^{2d}).
RatFunc2 open_edge_factor(int d);

enum class DiskSide { plus, minus };

// Boundary disk factor: D_+(mu) = mu^mu/(mu! u^mu), D_-(mu) = (-1)^mu D_+(mu).
RatFunc2 disk_factor(int mu, DiskSide side);

// Contribution of one decorated graph to the graph sum. The winding-mu
// boundary cover carries a Z/mu automorphism, so the disk factor enters as
// D_pm(mu)/mu, matching the 1/d_e on every interior edge.
RatFunc2 open_graph_contribution(const DecoratedGraph& g, const std::vector<Insertion>& ins);

// Disk invariant of class beta = (d_plus, d_minus), d_plus != d_minus, as a
// single monomial in u. Cached on (beta, insertion multiset).
UMonomial disk_invariant(std::pair<int, int> beta, const std::vector<Insertion>& ins);

} // namespace gwloc
