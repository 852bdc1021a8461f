#include "capkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace capkit::verify {

namespace {

// Canonical working view: edges sorted by (a,b), label lookup, per-label
// classes, adjacency lists over the global vertex order a_1..a_L, b_1..b_R.
struct GraphView {
    int left = 0;
    int right = 0;
    int num_labels = 0;
    std::vector<LabeledEdge> sorted;
    std::vector<std::vector<int>> label_at;          // [a][b] -> label, 0 if absent
    std::vector<std::vector<LabeledEdge>> by_label;  // index z-1, sorted by (a,b)
    std::vector<std::vector<int>> adj;               // global id -> sorted neighbor ids

    int aid(int a) const { return a - 1; }
    int bid(int b) const { return left + b - 1; }
    bool is_left(int id) const { return id < left; }
    VertexRef ref(int id) const {
        return is_left(id) ? VertexRef{true, id + 1} : VertexRef{false, id - left + 1};
    }
};

GraphView make_view(const LabeledBipartiteGraph& g) {
    assert_well_formed(g);
    GraphView view;
    view.left = g.left;
    view.right = g.right;
    view.num_labels = g.num_labels;
    view.sorted = g.edges;
    std::sort(view.sorted.begin(), view.sorted.end());
    view.label_at.assign(g.left + 1, std::vector<int>(g.right + 1, 0));
    view.by_label.assign(g.num_labels, {});
    view.adj.assign(g.left + g.right, {});
    for (const LabeledEdge& e : view.sorted) {
        view.label_at[e.a][e.b] = e.label;
        view.by_label[e.label - 1].push_back(e);
        view.adj[view.aid(e.a)].push_back(view.bid(e.b));
        view.adj[view.bid(e.b)].push_back(view.aid(e.a));
    }
    for (auto& neighbors : view.adj) std::sort(neighbors.begin(), neighbors.end());
    return view;
}

// First pair of same-label edges sharing an endpoint, labels ascending and
// edges in (a,b) order within each label.
std::optional<Violation> matching_violation(const GraphView& view) {
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        std::vector<int> cover_a(view.left + 1, -1), cover_b(view.right + 1, -1);
        for (std::size_t p = 0; p < edges.size(); ++p) {
            const LabeledEdge& e = edges[p];
            if (cover_a[e.a] >= 0) return MatchingViolation{z, edges[cover_a[e.a]], e};
            if (cover_b[e.b] >= 0) return MatchingViolation{z, edges[cover_b[e.b]], e};
            cover_a[e.a] = static_cast<int>(p);
            cover_b[e.b] = static_cast<int>(p);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> triple_sequence(const TripleSequence& seq) {
    assert_well_formed(seq);
    const auto& ts = seq.triples;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (!precedes(ts[i], ts[j])) {
                return TriplePairViolation{static_cast<int>(i + 1), static_cast<int>(j + 1)};
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> induced_matchings(const LabeledBipartiteGraph& g) {
    GraphView view = make_view(g);
    if (auto breach = matching_violation(view)) return breach;
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        if (edges.empty()) continue;
        std::vector<int> cover_a(view.left + 1, -1), cover_b(view.right + 1, -1);
        for (std::size_t p = 0; p < edges.size(); ++p) {
            cover_a[edges[p].a] = static_cast<int>(p);
            cover_b[edges[p].b] = static_cast<int>(p);
        }
        for (const LabeledEdge& f : view.sorted) {
            if (f.label == z) continue;
            if (cover_a[f.a] >= 0 && cover_b[f.b] >= 0) {
                return InducedMatchingViolation{z, edges[cover_a[f.a]], edges[cover_b[f.b]], f};
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> ordered_matchings(const LabeledBipartiteGraph& g) {
    GraphView view = make_view(g);
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        for (std::size_t p = 1; p < edges.size(); ++p) {
            const LabeledEdge& e1 = edges[p - 1];
            const LabeledEdge& e2 = edges[p];
            if (e1.a == e2.a || e1.b == e2.b) return MatchingViolation{z, e1, e2};
            if (e2.b < e1.b) return OrderedMatchingViolation{z, e1, e2};
        }
    }
    return std::nullopt;
}

std::optional<Violation> sigma_free(const LabeledBipartiteGraph& g) {
    if (auto breach = ordered_matchings(g)) return breach;
    GraphView view = make_view(g);
    // Pairwise scan over same-label edges with a middle-vertex adjacency
    // lookup: O(k * m^2 * span), the complexity hot spot at desk scale.
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        // Ordered, so left and right endpoints increase together.
        for (std::size_t p = 0; p < edges.size(); ++p) {
            for (std::size_t q = p + 1; q < edges.size(); ++q) {
                const LabeledEdge& el = edges[p];
                const LabeledEdge& er = edges[q];
                for (int j = el.b; j <= er.b; ++j) {
                    int lab_left = view.label_at[el.a][j];
                    int lab_right = view.label_at[er.a][j];
                    if (lab_left != 0 && lab_right != 0) {
                        SigmaViolation w;
                        w.label = z;
                        w.h = el.b;
                        w.i = el.a;
                        w.j = j;
                        w.k = er.a;
                        w.l = er.b;
                        w.outer_left = el;
                        w.outer_right = er;
                        w.mid_left = LabeledEdge{el.a, j, lab_left};
                        w.mid_right = LabeledEdge{er.a, j, lab_right};
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> l_separated(const LabeledBipartiteGraph& g, int l) {
    if (l < 1) throw std::invalid_argument("separation distance l must be positive");
    GraphView view = make_view(g);
    if (auto breach = matching_violation(view)) return breach;

    const int total = view.left + view.right;
    // cover[z-1][id] = index into by_label[z-1] of the edge covering id, or -1.
    std::vector<std::vector<int>> cover(view.num_labels, std::vector<int>(total, -1));
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        for (std::size_t p = 0; p < edges.size(); ++p) {
            cover[z - 1][view.aid(edges[p].a)] = static_cast<int>(p);
            cover[z - 1][view.bid(edges[p].b)] = static_cast<int>(p);
        }
    }

    std::vector<int> dist(total), parent(total);
    for (int z = 1; z <= view.num_labels; ++z) {
        const auto& edges = view.by_label[z - 1];
        for (std::size_t p = 0; p < edges.size(); ++p) {
            const LabeledEdge& e = edges[p];
            const int endpoints[2] = {view.aid(e.a), view.bid(e.b)};
            for (int source : endpoints) {
                std::fill(dist.begin(), dist.end(), -1);
                std::fill(parent.begin(), parent.end(), -1);
                std::deque<int> queue{source};
                dist[source] = 0;
                while (!queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    int covering = cover[z - 1][u];
                    if (u != source && covering >= 0 && covering != static_cast<int>(p)) {
                        SeparationViolation w;
                        w.label = z;
                        w.bound = l;
                        for (int v = u; v >= 0; v = parent[v]) w.walk.push_back(view.ref(v));
                        std::reverse(w.walk.begin(), w.walk.end());
                        w.start_edge = e;
                        w.end_edge = edges[covering];
                        return w;
                    }
                    if (dist[u] == l) continue;
                    for (int v : view.adj[u]) {
                        if (dist[v] < 0) {
                            dist[v] = dist[u] + 1;
                            parent[v] = u;
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::variant<DegreeSquareReport, Violation> degree_square_diagnostic(const LabeledBipartiteGraph& g) {
    if (auto breach = l_separated(g, 2)) return *breach;
    DegreeSquareReport report;
    std::vector<long long> degree(g.left + g.right, 0);
    for (const LabeledEdge& e : g.edges) {
        ++degree[e.a - 1];
        ++degree[g.left + e.b - 1];
    }
    for (long long d : degree) report.sum_degree_squares += d * d;
    long long vertices = g.left + g.right;
    report.bound = vertices * g.num_labels;
    report.pass = report.sum_degree_squares <= report.bound;
    report.average_degree_bound = std::sqrt(static_cast<double>(g.num_labels));
    report.edge_bound = static_cast<double>(vertices) * report.average_degree_bound / 2.0;
    report.edges = static_cast<long long>(g.edges.size());
    return report;
}

std::optional<Violation> tournament(const Tournament& t) {
    if (t.num_vertices < 1) return TournamentShapeViolation{0, 0};
    if (static_cast<int>(t.forward.size()) != std::max(0, t.num_vertices - 1)) {
        int i = static_cast<int>(t.forward.size()) + 1;
        return TournamentShapeViolation{std::min(i, t.num_vertices), t.num_vertices};
    }
    for (int i = 1; i < t.num_vertices; ++i) {
        int expected = t.num_vertices - i;
        int actual = static_cast<int>(t.forward[i - 1].size());
        if (actual != expected) return TournamentShapeViolation{i, i + 1 + std::min(actual, expected)};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// certificate replay
// ---------------------------------------------------------------------------

namespace {

bool edge_present(const LabeledBipartiteGraph& g, const LabeledEdge& e) {
    return std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end();
}

bool covers(const LabeledEdge& e, const VertexRef& v) {
    return v.on_left ? e.a == v.index : e.b == v.index;
}

}  // namespace

bool recheck(const Violation& v, const TripleSequence& seq) {
    const auto* w = std::get_if<TriplePairViolation>(&v);
    if (w == nullptr) return false;
    int n = static_cast<int>(seq.triples.size());
    if (w->i < 1 || w->j <= w->i || w->j > n) return false;
    return !precedes(seq.triples[w->i - 1], seq.triples[w->j - 1]);
}

bool recheck(const Violation& v, const LabeledBipartiteGraph& g) {
    struct Visitor {
        const LabeledBipartiteGraph& g;

        bool operator()(const TriplePairViolation&) const { return false; }
        bool operator()(const TournamentShapeViolation&) const { return false; }

        bool operator()(const MatchingViolation& w) const {
            if (w.e1 == w.e2 || w.e1.label != w.label || w.e2.label != w.label) return false;
            if (!edge_present(g, w.e1) || !edge_present(g, w.e2)) return false;
            return w.e1.a == w.e2.a || w.e1.b == w.e2.b;
        }

        bool operator()(const InducedMatchingViolation& w) const {
            if (w.e1 == w.e2 || w.e1.label != w.label || w.e2.label != w.label) return false;
            if (w.cross.label == w.label) return false;
            if (!edge_present(g, w.e1) || !edge_present(g, w.e2) || !edge_present(g, w.cross)) {
                return false;
            }
            return w.cross.a == w.e1.a && w.cross.b == w.e2.b;
        }

        bool operator()(const OrderedMatchingViolation& w) const {
            if (w.e1.label != w.label || w.e2.label != w.label) return false;
            if (!edge_present(g, w.e1) || !edge_present(g, w.e2)) return false;
            return w.e1.a < w.e2.a && w.e2.b < w.e1.b;
        }

        bool operator()(const SigmaViolation& w) const {
            if (!(w.i < w.k && w.h <= w.j && w.j <= w.l)) return false;
            if (w.outer_left.label != w.label || w.outer_right.label != w.label) return false;
            if (w.outer_left.a != w.i || w.outer_left.b != w.h) return false;
            if (w.outer_right.a != w.k || w.outer_right.b != w.l) return false;
            if (w.mid_left.a != w.i || w.mid_left.b != w.j) return false;
            if (w.mid_right.a != w.k || w.mid_right.b != w.j) return false;
            return edge_present(g, w.outer_left) && edge_present(g, w.outer_right) &&
                   edge_present(g, w.mid_left) && edge_present(g, w.mid_right);
        }

        bool operator()(const SeparationViolation& w) const {
            if (w.walk.empty() || static_cast<int>(w.walk.size()) - 1 > w.bound) return false;
            if (w.start_edge == w.end_edge) return false;
            if (w.start_edge.label != w.label || w.end_edge.label != w.label) return false;
            if (!edge_present(g, w.start_edge) || !edge_present(g, w.end_edge)) return false;
            if (!covers(w.start_edge, w.walk.front()) || !covers(w.end_edge, w.walk.back())) {
                return false;
            }
            for (std::size_t p = 1; p < w.walk.size(); ++p) {
                const VertexRef& u = w.walk[p - 1];
                const VertexRef& v = w.walk[p];
                if (u.on_left == v.on_left) return false;
                const VertexRef& lhs = u.on_left ? u : v;
                const VertexRef& rhs = u.on_left ? v : u;
                bool found = false;
                for (const LabeledEdge& e : g.edges) {
                    if (e.a == lhs.index && e.b == rhs.index) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
            return true;
        }
    };
    return std::visit(Visitor{g}, v);
}

bool recheck(const Violation& v, const Tournament& t) {
    const auto* w = std::get_if<TournamentShapeViolation>(&v);
    if (w == nullptr) return false;
    return tournament(t) == std::optional<Violation>(Violation{*w});
}

}  // namespace capkit::verify
