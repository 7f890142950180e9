#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwloc/errors.hpp"

namespace gwloc {

enum class TargetKind { OpenP1, ClosedX };

// Vertex labels: the open target has two fixed points and an unlabeled root;
// the closed target has three fixed points.
enum class VLabel { Root, SigmaPlus, SigmaMinus, Sigma0, Sigma1, Sigma2 };
// Edge labels: the single invariant curve of P^1, or the two invariant lines
// of the surface meeting sigma_0.
enum class ELabel { Tau, Tau1, Tau2 };

const char* label_name(VLabel l);
const char* label_name(ELabel l);

// The target's fixed-point graph: the open side is sigma_+ -tau- sigma_-,
// the closed side is sigma_1 -tau_1- sigma_0 -tau_2- sigma_2.
struct TargetSkeleton {
    TargetKind kind;
    std::vector<VLabel> vertices;
    struct SkelEdge {
        ELabel label;
        VLabel a;
        VLabel b;
    };
    std::vector<SkelEdge> edges;

    // Whether an edge with this label may join these vertex labels.
    bool admits(ELabel e, VLabel x, VLabel y) const;
};

const TargetSkeleton& target_skeleton(TargetKind kind);

struct GraphVertex {
    VLabel label = VLabel::Root;
    std::vector<int> markings; // sorted marking ids carried by this vertex
};

struct GraphEdge {
    int a = -1;
    int b = -1;
    ELabel label = ELabel::Tau;
    int degree = 1;
};

// One fixed-locus component: a tree with labels, degrees, markings and (open
// side) a distinguished univalent root.
struct DecoratedGraph {
    TargetKind kind = TargetKind::ClosedX;
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    int root = -1;      // open side only
    long aut_order = 1; // order of the decoration-preserving automorphism group

    std::vector<std::vector<int>> adjacency() const; // incident edge ids per vertex
    int valence(int v) const;
    int other_end(int edge, int v) const;
};

struct StratumTag {
    int k = 0;
    std::optional<int> l;   // valence of v_star when k == 1
    std::vector<int> v11;   // balanced two-edge sigma_0 vertices
    std::optional<int> v_star;
};

// One representative per isomorphism class, sorted by canonical code.
// Throws VanishingDegreeError when d_plus == d_minus.
std::vector<DecoratedGraph> enumerate_open_graphs(int n, std::pair<int, int> beta);
// Throws std::domain_error for beta = (0,0) or negative degrees.
std::vector<DecoratedGraph> enumerate_closed_graphs(int n, std::pair<int, int> beta);

// Order of the automorphism group preserving all decorations (and the root
// on the open side). Computed from canonical codes of rooted subtrees.
long automorphism_order(const DecoratedGraph& g);

// Stratum data of a closed-side graph; throws for open-side input.
StratumTag classify_stratum(const DecoratedGraph& g);

// Canonical code: equal codes iff isomorphic as decorated (rooted) graphs.
std::string canonical_code(const DecoratedGraph& g);

// Full structural check against the degree data; throws IntegrityError with
// a description of the first violated invariant.
void validate_graph(const DecoratedGraph& g, std::pair<int, int> beta, int n);

// One-line JSON object: vertices, labels, edge degrees, marking map,
// aut_order, stratum tag (closed) / root (open).
std::string graph_json(const DecoratedGraph& g);

} // namespace gwloc
