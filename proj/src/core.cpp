#include "capkit/core.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace capkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// values
// ---------------------------------------------------------------------------

int Triple::coord(int c) const {
    switch (c) {
        case 1: return x;
        case 2: return y;
        case 3: return z;
        default: throw std::out_of_range("Triple::coord: coordinate must be 1, 2 or 3");
    }
}

int strict_increases(const Triple& from, const Triple& to) {
    return (from.x < to.x) + (from.y < to.y) + (from.z < to.z);
}

bool precedes(const Triple& from, const Triple& to) {
    return strict_increases(from, to) >= 2;
}

TournamentColoring TournamentColoring::uniform(int n, int r, int color) {
    TournamentColoring c;
    c.num_vertices = n;
    c.num_colors = r;
    c.rows.resize(n >= 1 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) c.rows[i - 1].assign(n - i, color);
    assert_well_formed(c);
    return c;
}

int TournamentColoring::color(int i, int j) const {
    return rows[i - 1][j - i - 1];
}

void TournamentColoring::set_color(int i, int j, int c) {
    rows[i - 1][j - i - 1] = c;
}

std::int64_t TournamentColoring::num_edges() const {
    return static_cast<std::int64_t>(num_vertices) * (num_vertices - 1) / 2;
}

bool Tournament::beats(int u, int v) const {
    if (u < v) return forward[u - 1][v - u - 1] != 0;
    return forward[v - 1][u - v - 1] == 0;
}

void Tournament::set_forward(int i, int j, bool f) {
    forward[i - 1][j - i - 1] = f ? 1 : 0;
}

// ---------------------------------------------------------------------------
// violations
// ---------------------------------------------------------------------------

std::string_view violation_kind(const Violation& v) {
    struct Visitor {
        std::string_view operator()(const TriplePairViolation&) const { return "triple_pair"; }
        std::string_view operator()(const MatchingViolation&) const { return "matching"; }
        std::string_view operator()(const InducedMatchingViolation&) const { return "induced_matching"; }
        std::string_view operator()(const OrderedMatchingViolation&) const { return "ordered_matching"; }
        std::string_view operator()(const SigmaViolation&) const { return "sigma"; }
        std::string_view operator()(const SeparationViolation&) const { return "separation"; }
        std::string_view operator()(const TournamentShapeViolation&) const { return "tournament"; }
    };
    return std::visit(Visitor{}, v);
}

namespace {

std::string edge_str(const LabeledEdge& e) {
    std::ostringstream out;
    out << "(a" << e.a << ",b" << e.b << ";" << e.label << ")";
    return out.str();
}

}  // namespace

std::string describe(const Violation& v) {
    std::ostringstream out;
    struct Visitor {
        std::ostringstream& out;
        void operator()(const TriplePairViolation& w) {
            out << "pair (" << w.i << "," << w.j << ") fails the two-coordinate increase";
        }
        void operator()(const MatchingViolation& w) {
            out << "label " << w.label << ": edges " << edge_str(w.e1) << " and "
                << edge_str(w.e2) << " share an endpoint";
        }
        void operator()(const InducedMatchingViolation& w) {
            out << "label " << w.label << ": cross edge " << edge_str(w.cross)
                << " joins the spans of " << edge_str(w.e1) << " and " << edge_str(w.e2);
        }
        void operator()(const OrderedMatchingViolation& w) {
            out << "label " << w.label << ": edges " << edge_str(w.e1) << " and "
                << edge_str(w.e2) << " cross";
        }
        void operator()(const SigmaViolation& w) {
            out << "sigma pattern (h,i,j,k,l)=(" << w.h << "," << w.i << "," << w.j << ","
                << w.k << "," << w.l << ") on label " << w.label;
        }
        void operator()(const SeparationViolation& w) {
            out << "label " << w.label << ": walk of length " << (w.walk.size() - 1)
                << " <= " << w.bound << " joins " << edge_str(w.start_edge) << " and "
                << edge_str(w.end_edge);
        }
        void operator()(const TournamentShapeViolation& w) {
            out << "pair (" << w.i << "," << w.j << ") has no stored orientation";
        }
    };
    std::visit(Visitor{out}, v);
    return out.str();
}

// ---------------------------------------------------------------------------
// well-formedness
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg);
}

void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

}  // namespace

void assert_well_formed(const TripleSequence& s) {
    require(s.alphabet_size >= 1, "alphabet size must be positive");
    for (std::size_t idx = 0; idx < s.triples.size(); ++idx) {
        const Triple& t = s.triples[idx];
        for (int c = 1; c <= 3; ++c) {
            int val = t.coord(c);
            if (val < 1 || val > s.alphabet_size) {
                fail("triple " + std::to_string(idx + 1) + " coordinate " + std::to_string(c) +
                     " out of range [1," + std::to_string(s.alphabet_size) + "]");
            }
        }
    }
}

void assert_well_formed(const TournamentColoring& c) {
    require(c.num_vertices >= 1, "num_vertices must be positive");
    require(c.num_colors >= 1, "num_colors must be positive");
    require(static_cast<int>(c.rows.size()) == std::max(0, c.num_vertices - 1),
            "expected " + std::to_string(std::max(0, c.num_vertices - 1)) + " color rows");
    for (int i = 1; i < c.num_vertices; ++i) {
        const auto& row = c.rows[i - 1];
        require(static_cast<int>(row.size()) == c.num_vertices - i,
                "row " + std::to_string(i) + " must hold " +
                    std::to_string(c.num_vertices - i) + " colors");
        for (int col : row) {
            require(col >= 1 && col <= c.num_colors,
                    "color out of range [1," + std::to_string(c.num_colors) + "]");
        }
    }
}

void assert_well_formed(const LabeledBipartiteGraph& g) {
    require(g.left >= 1 && g.right >= 1, "side sizes must be positive");
    require(g.num_labels >= 0, "num_labels must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (const LabeledEdge& e : g.edges) {
        require(e.a >= 1 && e.a <= g.left, "left index out of range");
        require(e.b >= 1 && e.b <= g.right, "right index out of range");
        require(e.label >= 1 && e.label <= g.num_labels, "label out of range");
        if (!seen.insert({e.a, e.b}).second) {
            fail("duplicate edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
        }
    }
}

void assert_well_formed(const MajorityTournamentSpec& s) {
    require(s.k >= 1, "k must be positive");
    require(s.k % 2 == 1, "k must be odd");
    require(s.n >= 1, "n must be positive");
    require(static_cast<int>(s.perms.size()) == s.k,
            "expected " + std::to_string(s.k) + " permutations");
    for (int i = 1; i <= s.k; ++i) {
        const auto& perm = s.perms[i - 1];
        require(static_cast<int>(perm.size()) == s.k,
                "permutation " + std::to_string(i) + " must have length " + std::to_string(s.k));
        std::vector<bool> used(s.k + 1, false);
        for (int v : perm) {
            require(v >= 1 && v <= s.k, "permutation entry out of range");
            require(!used[v], "permutation entry repeated");
            used[v] = true;
        }
        require(perm[0] == i, "sigma_" + std::to_string(i) + "(1) must equal " + std::to_string(i));
    }
}

void assert_well_formed(const Tournament& t) {
    require(t.num_vertices >= 1, "num_vertices must be positive");
    require(static_cast<int>(t.forward.size()) == std::max(0, t.num_vertices - 1),
            "expected " + std::to_string(std::max(0, t.num_vertices - 1)) + " orientation rows");
    for (int i = 1; i < t.num_vertices; ++i) {
        require(static_cast<int>(t.forward[i - 1].size()) == t.num_vertices - i,
                "row " + std::to_string(i) + " must hold " +
                    std::to_string(t.num_vertices - i) + " orientations");
    }
}

// ---------------------------------------------------------------------------
// canonical serialization
// ---------------------------------------------------------------------------

namespace {

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("malformed JSON");
    if (!j.is_object()) fail("top-level value must be an object");
    return j;
}

const json& get_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field: ") + key);
    return *it;
}

long long get_integer(const json& v, const char* what) {
    if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
    return v.get<long long>();
}

int get_int_field(const json& j, const char* key) {
    long long v = get_integer(get_field(j, key), key);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        fail(std::string(key) + " out of range");
    }
    return static_cast<int>(v);
}

const json& get_array(const json& j, const char* key) {
    const json& v = get_field(j, key);
    if (!v.is_array()) fail(std::string(key) + " must be an array");
    return v;
}

json edge_to_json(const LabeledEdge& e) {
    return json::array({e.a, e.b, e.label});
}

LabeledEdge edge_from_json(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 3) fail(std::string(what) + " must be a [a,b,label] triple");
    LabeledEdge e;
    e.a = static_cast<int>(get_integer(v[0], what));
    e.b = static_cast<int>(get_integer(v[1], what));
    e.label = static_cast<int>(get_integer(v[2], what));
    return e;
}

json vertex_to_json(const VertexRef& v) {
    return json::array({v.on_left ? "a" : "b", v.index});
}

VertexRef vertex_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string()) fail("walk entry must be [side, index]");
    std::string side = v[0].get<std::string>();
    if (side != "a" && side != "b") fail("walk entry side must be \"a\" or \"b\"");
    return VertexRef{side == "a", static_cast<int>(get_integer(v[1], "walk index"))};
}

}  // namespace

std::string to_canonical_text(const TripleSequence& s) {
    assert_well_formed(s);
    json triples = json::array();
    for (const Triple& t : s.triples) triples.push_back(json::array({t.x, t.y, t.z}));
    return dump_canonical(json{{"n", s.alphabet_size}, {"triples", std::move(triples)}});
}

std::string to_canonical_text(const TournamentColoring& c) {
    assert_well_formed(c);
    json rows = json::array();
    for (const auto& row : c.rows) rows.push_back(row);
    return dump_canonical(json{{"num_vertices", c.num_vertices},
                               {"num_colors", c.num_colors},
                               {"colors", std::move(rows)}});
}

std::string to_canonical_text(const LabeledBipartiteGraph& g) {
    assert_well_formed(g);
    json edges = json::array();
    for (const LabeledEdge& e : g.edges) edges.push_back(edge_to_json(e));
    return dump_canonical(json{{"left", g.left},
                               {"right", g.right},
                               {"num_labels", g.num_labels},
                               {"edges", std::move(edges)}});
}

std::string to_canonical_text(const MajorityTournamentSpec& s) {
    assert_well_formed(s);
    json perms = json::array();
    for (const auto& perm : s.perms) perms.push_back(perm);
    return dump_canonical(json{{"k", s.k}, {"n", s.n}, {"perms", std::move(perms)}});
}

std::string to_canonical_text(const Tournament& t) {
    assert_well_formed(t);
    json rows = json::array();
    for (const auto& row : t.forward) {
        json jrow = json::array();
        for (std::uint8_t f : row) jrow.push_back(f != 0);
        rows.push_back(std::move(jrow));
    }
    return dump_canonical(json{{"num_vertices", t.num_vertices}, {"forward", std::move(rows)}});
}

std::string to_canonical_text(const Violation& v) {
    json j;
    struct Visitor {
        json& j;
        void operator()(const TriplePairViolation& w) {
            j = json{{"kind", "triple_pair"}, {"i", w.i}, {"j", w.j}};
        }
        void operator()(const MatchingViolation& w) {
            j = json{{"kind", "matching"},
                     {"label", w.label},
                     {"edge1", edge_to_json(w.e1)},
                     {"edge2", edge_to_json(w.e2)}};
        }
        void operator()(const InducedMatchingViolation& w) {
            j = json{{"kind", "induced_matching"},
                     {"label", w.label},
                     {"edge1", edge_to_json(w.e1)},
                     {"edge2", edge_to_json(w.e2)},
                     {"cross", edge_to_json(w.cross)}};
        }
        void operator()(const OrderedMatchingViolation& w) {
            j = json{{"kind", "ordered_matching"},
                     {"label", w.label},
                     {"edge1", edge_to_json(w.e1)},
                     {"edge2", edge_to_json(w.e2)}};
        }
        void operator()(const SigmaViolation& w) {
            j = json{{"kind", "sigma"},
                     {"label", w.label},
                     {"h", w.h},
                     {"i", w.i},
                     {"j", w.j},
                     {"k", w.k},
                     {"l", w.l},
                     {"outer_left", edge_to_json(w.outer_left)},
                     {"outer_right", edge_to_json(w.outer_right)},
                     {"mid_left", edge_to_json(w.mid_left)},
                     {"mid_right", edge_to_json(w.mid_right)}};
        }
        void operator()(const SeparationViolation& w) {
            json walk = json::array();
            for (const VertexRef& v : w.walk) walk.push_back(vertex_to_json(v));
            j = json{{"kind", "separation"},
                     {"label", w.label},
                     {"bound", w.bound},
                     {"walk", std::move(walk)},
                     {"start_edge", edge_to_json(w.start_edge)},
                     {"end_edge", edge_to_json(w.end_edge)}};
        }
        void operator()(const TournamentShapeViolation& w) {
            j = json{{"kind", "tournament"}, {"i", w.i}, {"j", w.j}};
        }
    };
    std::visit(Visitor{j}, v);
    return dump_canonical(j);
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

TripleSequence parse_triple_sequence(std::string_view text) {
    json j = parse_json(text);
    TripleSequence s;
    s.alphabet_size = get_int_field(j, "n");
    for (const json& v : get_array(j, "triples")) {
        if (!v.is_array() || v.size() != 3) fail("triple must be a [x,y,z] array");
        Triple t;
        t.x = static_cast<int>(get_integer(v[0], "triple coordinate"));
        t.y = static_cast<int>(get_integer(v[1], "triple coordinate"));
        t.z = static_cast<int>(get_integer(v[2], "triple coordinate"));
        s.triples.push_back(t);
    }
    assert_well_formed(s);
    return s;
}

TournamentColoring parse_coloring(std::string_view text) {
    json j = parse_json(text);
    TournamentColoring c;
    c.num_vertices = get_int_field(j, "num_vertices");
    c.num_colors = get_int_field(j, "num_colors");
    for (const json& row : get_array(j, "colors")) {
        if (!row.is_array()) fail("color row must be an array");
        std::vector<int> r;
        for (const json& v : row) r.push_back(static_cast<int>(get_integer(v, "color")));
        c.rows.push_back(std::move(r));
    }
    assert_well_formed(c);
    return c;
}

LabeledBipartiteGraph parse_bipartite_graph(std::string_view text) {
    json j = parse_json(text);
    LabeledBipartiteGraph g;
    g.left = get_int_field(j, "left");
    g.right = get_int_field(j, "right");
    g.num_labels = get_int_field(j, "num_labels");
    for (const json& v : get_array(j, "edges")) g.edges.push_back(edge_from_json(v, "edge"));
    assert_well_formed(g);
    return g;
}

MajorityTournamentSpec parse_majority_spec(std::string_view text) {
    json j = parse_json(text);
    MajorityTournamentSpec s;
    s.k = get_int_field(j, "k");
    s.n = get_int_field(j, "n");
    for (const json& row : get_array(j, "perms")) {
        if (!row.is_array()) fail("permutation must be an array");
        std::vector<int> perm;
        for (const json& v : row) perm.push_back(static_cast<int>(get_integer(v, "permutation entry")));
        s.perms.push_back(std::move(perm));
    }
    assert_well_formed(s);
    return s;
}

Tournament parse_tournament(std::string_view text) {
    json j = parse_json(text);
    Tournament t;
    t.num_vertices = get_int_field(j, "num_vertices");
    for (const json& row : get_array(j, "forward")) {
        if (!row.is_array()) fail("forward row must be an array");
        std::vector<std::uint8_t> r;
        for (const json& v : row) {
            if (!v.is_boolean()) fail("orientation must be a boolean");
            r.push_back(v.get<bool>() ? 1 : 0);
        }
        t.forward.push_back(std::move(r));
    }
    assert_well_formed(t);
    return t;
}

Violation parse_violation(std::string_view text) {
    json j = parse_json(text);
    const json& kind_field = get_field(j, "kind");
    if (!kind_field.is_string()) fail("kind must be a string");
    std::string kind = kind_field.get<std::string>();
    if (kind == "triple_pair") {
        return TriplePairViolation{get_int_field(j, "i"), get_int_field(j, "j")};
    }
    if (kind == "matching") {
        return MatchingViolation{get_int_field(j, "label"),
                                 edge_from_json(get_field(j, "edge1"), "edge1"),
                                 edge_from_json(get_field(j, "edge2"), "edge2")};
    }
    if (kind == "induced_matching") {
        return InducedMatchingViolation{get_int_field(j, "label"),
                                        edge_from_json(get_field(j, "edge1"), "edge1"),
                                        edge_from_json(get_field(j, "edge2"), "edge2"),
                                        edge_from_json(get_field(j, "cross"), "cross")};
    }
    if (kind == "ordered_matching") {
        return OrderedMatchingViolation{get_int_field(j, "label"),
                                        edge_from_json(get_field(j, "edge1"), "edge1"),
                                        edge_from_json(get_field(j, "edge2"), "edge2")};
    }
    if (kind == "sigma") {
        SigmaViolation w;
        w.label = get_int_field(j, "label");
        w.h = get_int_field(j, "h");
        w.i = get_int_field(j, "i");
        w.j = get_int_field(j, "j");
        w.k = get_int_field(j, "k");
        w.l = get_int_field(j, "l");
        w.outer_left = edge_from_json(get_field(j, "outer_left"), "outer_left");
        w.outer_right = edge_from_json(get_field(j, "outer_right"), "outer_right");
        w.mid_left = edge_from_json(get_field(j, "mid_left"), "mid_left");
        w.mid_right = edge_from_json(get_field(j, "mid_right"), "mid_right");
        return w;
    }
    if (kind == "separation") {
        SeparationViolation w;
        w.label = get_int_field(j, "label");
        w.bound = get_int_field(j, "bound");
        for (const json& v : get_array(j, "walk")) w.walk.push_back(vertex_from_json(v));
        w.start_edge = edge_from_json(get_field(j, "start_edge"), "start_edge");
        w.end_edge = edge_from_json(get_field(j, "end_edge"), "end_edge");
        return w;
    }
    if (kind == "tournament") {
        return TournamentShapeViolation{get_int_field(j, "i"), get_int_field(j, "j")};
    }
    fail("unknown certificate kind: " + kind);
}

}  // namespace capkit
