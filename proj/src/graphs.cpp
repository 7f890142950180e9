#include "gwloc/graphs.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace gwloc {

const char* label_name(VLabel l) {
    switch (l) {
        case VLabel::Root: return "root";
        case VLabel::SigmaPlus: return "sigma_+";
        case VLabel::SigmaMinus: return "sigma_-";
        case VLabel::Sigma0: return "sigma_0";
        case VLabel::Sigma1: return "sigma_1";
        case VLabel::Sigma2: return "sigma_2";
    }
    return "?";
}

const char* label_name(ELabel l) {
    switch (l) {
        case ELabel::Tau: return "tau";
        case ELabel::Tau1: return "tau_1";
        case ELabel::Tau2: return "tau_2";
    }
    return "?";
}

bool TargetSkeleton::admits(ELabel e, VLabel x, VLabel y) const {
    for (const auto& se : edges) {
        if (se.label != e) continue;
        if ((se.a == x && se.b == y) || (se.a == y && se.b == x)) return true;
    }
    return false;
}

const TargetSkeleton& target_skeleton(TargetKind kind) {
    static const TargetSkeleton open{
        TargetKind::OpenP1,
        {VLabel::SigmaPlus, VLabel::SigmaMinus},
        {{ELabel::Tau, VLabel::SigmaPlus, VLabel::SigmaMinus}}};
    static const TargetSkeleton closed{
        TargetKind::ClosedX,
        {VLabel::Sigma0, VLabel::Sigma1, VLabel::Sigma2},
        {{ELabel::Tau1, VLabel::Sigma0, VLabel::Sigma1},
         {ELabel::Tau2, VLabel::Sigma0, VLabel::Sigma2}}};
    return kind == TargetKind::OpenP1 ? open : closed;
}

std::vector<std::vector<int>> DecoratedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[static_cast<std::size_t>(edges[i].a)].push_back(static_cast<int>(i));
        adj[static_cast<std::size_t>(edges[i].b)].push_back(static_cast<int>(i));
    }
    return adj;
}

int DecoratedGraph::valence(int v) const {
    int c = 0;
    for (const auto& e : edges)
        if (e.a == v || e.b == v) ++c;
    return c;
}

int DecoratedGraph::other_end(int edge, int v) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    return e.a == v ? e.b : e.a;
}

namespace {

// ---- canonical codes and automorphisms of flat graphs ----------------------

std::string rooted_code(const DecoratedGraph& g, const std::vector<std::vector<int>>& adj,
                        int v, int parent_edge) {
    std::string s = "L";
    s += std::to_string(static_cast<int>(g.vertices[static_cast<std::size_t>(v)].label));
    s += "m";
    for (int m : g.vertices[static_cast<std::size_t>(v)].markings) {
        s += std::to_string(m);
        s += ",";
    }
    std::vector<std::string> kids;
    for (int ei : adj[static_cast<std::size_t>(v)]) {
        if (ei == parent_edge) continue;
        const auto& e = g.edges[static_cast<std::size_t>(ei)];
        kids.push_back("(" + std::to_string(static_cast<int>(e.label)) + ":" +
                       std::to_string(e.degree) + rooted_code(g, adj, g.other_end(ei, v), ei) +
                       ")");
    }
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) s += k;
    return s;
}

// Automorphisms of the tree rooted at v: identical decorated child subtrees
// may be permuted, so each group of equal child codes contributes a factorial.
long rooted_aut(const DecoratedGraph& g, const std::vector<std::vector<int>>& adj, int v,
                int parent_edge, std::string* code_out) {
    std::vector<std::pair<std::string, long>> kids;
    for (int ei : adj[static_cast<std::size_t>(v)]) {
        if (ei == parent_edge) continue;
        const auto& e = g.edges[static_cast<std::size_t>(ei)];
        std::string sub;
        long a = rooted_aut(g, adj, g.other_end(ei, v), ei, &sub);
        kids.push_back({"(" + std::to_string(static_cast<int>(e.label)) + ":" +
                            std::to_string(e.degree) + sub + ")",
                        a});
    }
    std::sort(kids.begin(), kids.end());
    long aut = 1;
    long run = 1;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        aut *= kids[i].second;
        if (i > 0 && kids[i].first == kids[i - 1].first) {
            ++run;
            aut *= run; // accumulates the factorial of each run of equal codes
        } else {
            run = 1;
        }
    }
    if (code_out) {
        std::string s = "L";
        s += std::to_string(static_cast<int>(g.vertices[static_cast<std::size_t>(v)].label));
        s += "m";
        for (int m : g.vertices[static_cast<std::size_t>(v)].markings) {
            s += std::to_string(m);
            s += ",";
        }
        for (const auto& k : kids) s += k.first;
        *code_out = s;
    }
    return aut;
}

// ---- recursive enumeration of rooted decorated subtrees --------------------

struct BVert;
using BVertPtr = std::shared_ptr<const BVert>;

struct BSub {
    ELabel elabel = ELabel::Tau;
    int degree = 1;
    BVertPtr child;
    std::string code;
};

struct BVert {
    VLabel label = VLabel::Root;
    std::vector<int> marks;     // sorted
    std::vector<BSub> children; // nonincreasing by code
    std::string code;
};

std::string vert_code(VLabel label, const std::vector<int>& marks,
                      const std::vector<BSub>& children) {
    std::string s = "V";
    s += std::to_string(static_cast<int>(label));
    s += "m";
    for (int m : marks) {
        s += std::to_string(m);
        s += ",";
    }
    for (const auto& c : children) s += c.code;
    return s;
}

std::string sub_code(ELabel l, int d, const BVertPtr& v) {
    return "(" + std::to_string(static_cast<int>(l)) + ":" + std::to_string(d) + v->code + ")";
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

// Allowed (edge label, child label) moves out of a vertex.
std::vector<std::pair<ELabel, VLabel>> moves(TargetKind kind, VLabel from) {
    if (kind == TargetKind::OpenP1) {
        if (from == VLabel::SigmaPlus) return {{ELabel::Tau, VLabel::SigmaMinus}};
        return {{ELabel::Tau, VLabel::SigmaPlus}};
    }
    switch (from) {
        case VLabel::Sigma0:
            return {{ELabel::Tau1, VLabel::Sigma1}, {ELabel::Tau2, VLabel::Sigma2}};
        case VLabel::Sigma1: return {{ELabel::Tau1, VLabel::Sigma0}};
        case VLabel::Sigma2: return {{ELabel::Tau2, VLabel::Sigma0}};
        default: throw std::logic_error("moves: bad label");
    }
}

// Remaining edge-degree budget per edge label (the open side only uses b1).
struct Budget {
    int b1 = 0;
    int b2 = 0;
    bool zero() const { return b1 == 0 && b2 == 0; }
};

std::vector<BVertPtr> enum_vertices(TargetKind kind, VLabel label, const std::vector<int>& marks,
                                    Budget budget);

// Multisets of decorated subtrees below a vertex labeled `parent`, consuming
// exactly `budget` and `marks`; emitted in nonincreasing code order with
// every code <= bound, so each multiset appears exactly once. `bound` is
// taken by value: it often aliases an element of `prefix`, which reallocates
// during recursion.
void enum_forests(TargetKind kind, VLabel parent, const std::vector<int>& marks, Budget budget,
                  std::string bound, std::vector<BSub>& prefix,
                  std::vector<std::vector<BSub>>& out) {
    if (budget.zero()) {
        if (marks.empty()) out.push_back(prefix);
        return;
    }
    for (const auto& [elabel, clabel] : moves(kind, parent)) {
        int avail = elabel == ELabel::Tau2 ? budget.b2 : budget.b1;
        for (int d = 1; d <= avail; ++d) {
            int rem1 = budget.b1 - (elabel == ELabel::Tau2 ? 0 : d);
            int rem2 = budget.b2 - (elabel == ELabel::Tau2 ? d : 0);
            for (int c1 = 0; c1 <= rem1; ++c1) {
                for (int c2 = 0; c2 <= rem2; ++c2) {
                    for (unsigned mask = 0; mask < (1u << marks.size()); ++mask) {
                        std::vector<int> mine = subset_of(marks, mask);
                        for (const auto& v : enum_vertices(kind, clabel, mine, {c1, c2})) {
                            BSub t{elabel, d, v, sub_code(elabel, d, v)};
                            if (t.code > bound) continue;
                            prefix.push_back(t);
                            enum_forests(kind, parent, complement_of(marks, mask),
                                         {rem1 - c1, rem2 - c2}, prefix.back().code, prefix,
                                         out);
                            prefix.pop_back();
                        }
                    }
                }
            }
        }
    }
}

std::vector<BVertPtr> enum_vertices(TargetKind kind, VLabel label, const std::vector<int>& marks,
                                    Budget budget) {
    std::vector<BVertPtr> out;
    for (unsigned mask = 0; mask < (1u << marks.size()); ++mask) {
        std::vector<int> mine = subset_of(marks, mask);
        std::vector<int> below = complement_of(marks, mask);
        std::vector<BSub> prefix;
        std::vector<std::vector<BSub>> forests;
        enum_forests(kind, label, below, budget, "\x7f", prefix, forests);
        for (auto& f : forests) {
            auto v = std::make_shared<BVert>();
            auto* mv = const_cast<BVert*>(v.get());
            mv->label = label;
            mv->marks = mine;
            mv->children = std::move(f);
            mv->code = vert_code(label, mv->marks, mv->children);
            out.push_back(std::move(v));
        }
    }
    return out;
}

// Flatten a built vertex (and everything below it) into g, returning its id.
int emit_vertex(DecoratedGraph& g, const BVert& v) {
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back({v.label, v.marks});
    for (const auto& c : v.children) {
        int cid = emit_vertex(g, *c.child);
        g.edges.push_back({id, cid, c.elabel, c.degree});
    }
    return id;
}

} // namespace

long automorphism_order(const DecoratedGraph& g) {
    auto adj = g.adjacency();
    if (g.kind == TargetKind::OpenP1) return rooted_aut(g, adj, g.root, -1, nullptr);
    // Unrooted tree: vertices with the minimal rooted code form one
    // automorphism orbit, and the stabilizer of such a rooting is the
    // rooted automorphism group.
    std::string best;
    int best_v = -1, orbit = 0;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        std::string c = rooted_code(g, adj, v, -1);
        if (best_v < 0 || c < best) {
            best = c;
            best_v = v;
            orbit = 1;
        } else if (c == best) {
            ++orbit;
        }
    }
    return rooted_aut(g, adj, best_v, -1, nullptr) * orbit;
}

std::string canonical_code(const DecoratedGraph& g) {
    auto adj = g.adjacency();
    if (g.kind == TargetKind::OpenP1) return "O:" + rooted_code(g, adj, g.root, -1);
    std::string best;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        std::string c = rooted_code(g, adj, v, -1);
        if (best.empty() || c < best) best = c;
    }
    return "C:" + best;
}

std::vector<DecoratedGraph> enumerate_open_graphs(int n, std::pair<int, int> beta) {
    auto [dp, dm] = beta;
    if (n < 0 || dp < 0 || dm < 0) throw std::domain_error("enumerate_open_graphs: bad input");
    if (dp == dm)
        throw VanishingDegreeError("disk invariants vanish for d+ = d- (beta = (" +
                                   std::to_string(dp) + "," + std::to_string(dm) + "))");
    int mu = dp > dm ? dp - dm : dm - dp;
    int rest = std::min(dp, dm);
    VLabel v1label = dp > dm ? VLabel::SigmaPlus : VLabel::SigmaMinus;

    std::vector<int> marks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) marks[static_cast<std::size_t>(i)] = i + 1;

    std::vector<DecoratedGraph> out;
    for (const auto& v1 : enum_vertices(TargetKind::OpenP1, v1label, marks, {rest, 0})) {
        DecoratedGraph g;
        g.kind = TargetKind::OpenP1;
        g.root = 0;
        g.vertices.push_back({VLabel::Root, {}});
        int v1id = emit_vertex(g, *v1);
        g.edges.push_back({0, v1id, ELabel::Tau, mu});
        g.aut_order = automorphism_order(g);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const DecoratedGraph& a, const DecoratedGraph& b) {
        return canonical_code(a) < canonical_code(b);
    });
    return out;
}

std::vector<DecoratedGraph> enumerate_closed_graphs(int n, std::pair<int, int> beta) {
    auto [d1, d2] = beta;
    if (n < 0 || d1 < 0 || d2 < 0) throw std::domain_error("enumerate_closed_graphs: bad input");
    if (d1 == 0 && d2 == 0)
        throw std::domain_error("enumerate_closed_graphs: no graphs in degree (0,0)");

    std::vector<int> marks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) marks[static_cast<std::size_t>(i)] = i + 1;

    // Every graph has a sigma_0 vertex (each edge touches one); generate
    // rooted there and dedupe the unrooted classes by canonical code.
    std::map<std::string, DecoratedGraph> classes;
    for (const auto& r : enum_vertices(TargetKind::ClosedX, VLabel::Sigma0, marks, {d1, d2})) {
        DecoratedGraph g;
        g.kind = TargetKind::ClosedX;
        emit_vertex(g, *r);
        if (g.edges.empty()) continue; // a lone sigma_0 vertex carries no degree
        std::string code = canonical_code(g);
        if (classes.count(code)) continue;
        g.aut_order = automorphism_order(g);
        classes.emplace(std::move(code), std::move(g));
    }
    std::vector<DecoratedGraph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

StratumTag classify_stratum(const DecoratedGraph& g) {
    if (g.kind != TargetKind::ClosedX)
        throw std::domain_error("classify_stratum: closed-side graphs only");
    auto adj = g.adjacency();
    StratumTag tag;
    int n_sigma0 = 0;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (g.vertices[static_cast<std::size_t>(v)].label != VLabel::Sigma0) continue;
        ++n_sigma0;
        const auto& inc = adj[static_cast<std::size_t>(v)];
        if (inc.size() == 2) {
            const auto& e1 = g.edges[static_cast<std::size_t>(inc[0])];
            const auto& e2 = g.edges[static_cast<std::size_t>(inc[1])];
            if (e1.label != e2.label && e1.degree == e2.degree) {
                tag.v11.push_back(v);
                continue;
            }
        }
        tag.v_star = v; // meaningful only when it ends up unique (k == 1)
    }
    tag.k = n_sigma0 - static_cast<int>(tag.v11.size());
    if (tag.k == 1) {
        tag.l = g.valence(*tag.v_star);
    } else {
        tag.v_star.reset();
    }
    return tag;
}

void validate_graph(const DecoratedGraph& g, std::pair<int, int> beta, int n) {
    auto fail = [](const std::string& m) { throw IntegrityError("invalid graph: " + m); };
    const std::size_t V = g.vertices.size();
    if (V == 0) fail("no vertices");
    if (g.edges.size() + 1 != V) fail("not a tree (edge count)");

    auto adj = g.adjacency();
    std::vector<char> seen(V, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : adj[static_cast<std::size_t>(v)]) {
            int w = g.other_end(ei, v);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != V) fail("not connected");

    auto vl = [&](int v) { return g.vertices[static_cast<std::size_t>(v)].label; };
    const TargetSkeleton& skel = target_skeleton(g.kind);
    int sum1 = 0, sum2 = 0, sum_all = 0, sum_nonroot = 0;
    for (const auto& e : g.edges) {
        if (e.degree < 1) fail("edge degree < 1");
        if (g.kind == TargetKind::ClosedX) {
            if (!skel.admits(e.label, vl(e.a), vl(e.b)))
                fail("edge does not map to the target skeleton");
            (e.label == ELabel::Tau1 ? sum1 : sum2) += e.degree;
        } else {
            bool is_root_edge = e.a == g.root || e.b == g.root;
            if (is_root_edge) {
                VLabel inner = vl(e.a == g.root ? e.b : e.a);
                if (e.label != ELabel::Tau ||
                    (inner != VLabel::SigmaPlus && inner != VLabel::SigmaMinus))
                    fail("root edge label");
            } else if (!skel.admits(e.label, vl(e.a), vl(e.b))) {
                fail("edge does not map to the target skeleton");
            }
            sum_all += e.degree;
            if (!is_root_edge) sum_nonroot += e.degree;
        }
    }
    if (g.kind == TargetKind::ClosedX) {
        if (g.root != -1) fail("closed graph with a root");
        for (std::size_t v = 0; v < V; ++v)
            if (vl(static_cast<int>(v)) == VLabel::Root ||
                vl(static_cast<int>(v)) == VLabel::SigmaPlus ||
                vl(static_cast<int>(v)) == VLabel::SigmaMinus)
                fail("open label on closed graph");
        if (sum1 != beta.first || sum2 != beta.second) fail("degree sums");
    } else {
        int dp = beta.first, dm = beta.second;
        if (g.root < 0 || g.root >= static_cast<int>(V)) fail("missing root");
        if (vl(g.root) != VLabel::Root) fail("root label");
        for (std::size_t v = 0; v < V; ++v)
            if (static_cast<int>(v) != g.root && vl(static_cast<int>(v)) == VLabel::Root)
                fail("second root label");
        if (g.valence(g.root) != 1) fail("root not univalent");
        if (!g.vertices[static_cast<std::size_t>(g.root)].markings.empty())
            fail("marking on the root");
        if (sum_all != std::max(dp, dm) || sum_nonroot != std::min(dp, dm)) fail("degree sums");
        int e0 = adj[static_cast<std::size_t>(g.root)][0];
        if (g.edges[static_cast<std::size_t>(e0)].degree != std::abs(dp - dm))
            fail("root edge degree");
        int v1 = g.other_end(e0, g.root);
        VLabel expect = dp > dm ? VLabel::SigmaPlus : VLabel::SigmaMinus;
        if (vl(v1) != expect) fail("label across the root edge");
    }

    std::set<int> ids;
    for (std::size_t v = 0; v < V; ++v) {
        const auto& ms = g.vertices[v].markings;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (i > 0 && ms[i] <= ms[i - 1]) fail("unsorted markings");
            if (ms[i] < 1 || ms[i] > n) fail("marking id out of range");
            if (!ids.insert(ms[i]).second) fail("repeated marking id");
        }
    }
    if (static_cast<int>(ids.size()) != n) fail("missing markings");

    if (g.aut_order < 1 || g.aut_order != automorphism_order(g)) fail("aut order");
}

std::string graph_json(const DecoratedGraph& g) {
    nlohmann::ordered_json j;
    j["kind"] = g.kind == TargetKind::OpenP1 ? "open" : "closed";
    auto verts = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["label"] = label_name(g.vertices[v].label);
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
        nlohmann::ordered_json je;
        je["ends"] = {e.a, e.b};
        je["label"] = label_name(e.label);
        je["degree"] = e.degree;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    nlohmann::ordered_json marks = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int m : g.vertices[v].markings) marks[std::to_string(m)] = v;
    j["markings"] = std::move(marks);
    if (g.kind == TargetKind::OpenP1) j["root"] = g.root;
    j["aut_order"] = g.aut_order;
    if (g.kind == TargetKind::ClosedX) {
        StratumTag t = classify_stratum(g);
        nlohmann::ordered_json js;
        js["k"] = t.k;
        if (t.l) js["l"] = *t.l;
        js["v11"] = t.v11;
        if (t.v_star) js["v_star"] = *t.v_star;
        j["stratum"] = std::move(js);
    }
    return j.dump();
}

} // namespace gwloc
