#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "gwloc/open_gw.hpp"

namespace gwloc {

// Tangent weight sw(tau, sigma) of the invariant line tau at the fixed point
// sigma; defined for incident pairs only.
RatFunc2 closed_tangent_weight(ELabel tau, VLabel sigma);

// Flag weight w_{(e,v)} = sw(tau_e, sigma_v)/d_e.
FlagWeight closed_flag_weight(ELabel tau, VLabel sigma, int d);

// Vertex weights sw(sigma_0) = u1 u2, sw(sigma_i) = -u_i (u1 + u2).
RatFunc2 closed_vertex_weight(VLabel sigma);

// i*_sigma phi~_alpha: u1 at (1, sigma_1), u2 at (2, sigma_2), 1 at
// (0, sigma_0), zero otherwise.
RatFunc2 closed_restriction(int alpha, VLabel sigma);

// Edge factor h(tau_i, d) =
//   (-1)^d d^{2d}/((d!)^2 u_i^{2d}) * prod_{j=1}^{d-1}(-u1 - u2 + j u_i/d).
RatFunc2 closed_edge_factor(ELabel tau, int d);

RatFunc2 closed_graph_contribution(const DecoratedGraph& g, const std::vector<Insertion>& ins);

// Per-graph data for one (beta, insertions) query, shared by the invariant,
// the valuation report and the lemma checks. Cached.
struct ClosedEvaluation {
    std::pair<int, int> beta;
    std::vector<DecoratedGraph> graphs;
    std::vector<RatFunc2> contributions; // aligned with graphs
    std::vector<StratumTag> strata;      // aligned with graphs
};
std::shared_ptr<const ClosedEvaluation> evaluate_closed(std::pair<int, int> beta,
                                                        const std::vector<Insertion>& ins);

// Full equivariant invariant as a rational function of (u1, s).
RatFunc2 closed_invariant(std::pair<int, int> beta, const std::vector<Insertion>& ins);

// Restriction to u1 + u2 = 0, u1 = u, with per-graph stratum/valuation
// verification. Requires d1 != d2.
UMonomial closed_invariant_restricted(std::pair<int, int> beta,
                                      const std::vector<Insertion>& ins);

} // namespace gwloc
