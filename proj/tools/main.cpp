// capkit: generate constructions, convert representations, verify properties
// with certificates, and run exact or heuristic searches.
//
// Exit codes: 0 success/valid, 1 semantic violation (certificate emitted),
// 2 usage or parse error, 3 budget-exhausted bound.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "capkit/construct.hpp"
#include "capkit/core.hpp"
#include "capkit/search.hpp"
#include "capkit/transform.hpp"
#include "capkit/verify.hpp"

namespace {

using namespace capkit;

constexpr long long kDefaultMajorityCap = 1'000'000;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

long long majority_cap_from_env() {
    const char* raw = std::getenv("CAPKIT_MAJORITY_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultMajorityCap;
    char* end = nullptr;
    long long value = std::strtoll(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value <= 0) {
        throw ParseError("CAPKIT_MAJORITY_CAP must be a positive integer");
    }
    return value;
}

std::string stem_of(const std::string& path) {
    std::size_t dot = path.find_last_of('.');
    std::size_t slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

struct BudgetFlags {
    std::uint64_t nodes = search::Budget{}.max_nodes;
    double seconds = search::Budget{}.max_seconds;
    int threads = 1;

    search::Budget to_budget() const {
        search::Budget b;
        b.max_nodes = nodes;
        b.max_seconds = seconds;
        b.threads = threads;
        b.progress = [](std::uint64_t n) { std::cerr << "... " << n << " nodes\n"; };
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--budget-nodes", flags.nodes, "node budget");
    cmd->add_option("--budget-seconds", flags.seconds, "wall-clock budget");
    cmd->add_option("--threads", flags.threads, "parallelism degree")->check(CLI::PositiveNumber);
}

int emit_violation(const Violation& v, const std::string& cert_path,
                   const std::function<bool(const Violation&)>& replay) {
    write_file(cert_path, to_canonical_text(v));
    if (!replay(v)) {
        std::cerr << "internal error: certificate failed re-check\n";
    }
    std::cout << "violation: " << describe(v) << "\n";
    std::cout << "certificate: " << cert_path << "\n";
    return 1;
}

void report_stats(const search::Stats& stats) {
    std::cerr << "elapsed: " << stats.seconds << " s\n";
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen_cube_coloring(int m, int r, const std::string& out) {
    TournamentColoring c = construct::cube_coloring(m, r);
    write_file(out, to_canonical_text(c));
    std::cout << "cube-coloring: N=" << c.num_vertices << " r=" << c.num_colors
              << " edges=" << c.num_edges() << "\n";
    return 0;
}

int run_gen_cube_triples(int m, const std::string& out) {
    TripleSequence s = construct::cube_triple_sequence(m);
    write_file(out, to_canonical_text(s));
    std::cout << "cube-triples: length=" << s.triples.size() << " alphabet=" << s.alphabet_size
              << "\n";
    return 0;
}

int run_gen_biclique(int n, const std::string& out) {
    LabeledBipartiteGraph g = construct::biclique_union(n);
    write_file(out, to_canonical_text(g));
    std::cout << "biclique: left=" << g.left << " right=" << g.right
              << " labels=" << g.num_labels << " edges=" << g.edges.size() << "\n";
    return 0;
}

int run_gen_majority(int k, int n, const std::string& spec_path, const std::string& out) {
    MajorityTournamentSpec spec;
    if (!spec_path.empty()) {
        spec = parse_majority_spec(read_file(spec_path));
    } else {
        if (k < 1 || n < 1) throw ParseError("gen majority requires --k and --n (or --spec)");
        spec = construct::cyclic_majority_spec(k, n);
    }
    Tournament t = construct::majority_tournament(spec, majority_cap_from_env());
    write_file(out, to_canonical_text(t));
    std::cout << "majority: k=" << spec.k << " n=" << spec.n << " vertices=" << t.num_vertices
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& property, const std::string& in_path, int l,
               std::string cert_path) {
    if (cert_path.empty()) cert_path = in_path + ".cert.json";
    std::string text = read_file(in_path);

    std::optional<Violation> breach;
    std::function<bool(const Violation&)> replay;

    if (property == "triples") {
        TripleSequence seq = parse_triple_sequence(text);
        breach = verify::triple_sequence(seq);
        replay = [seq](const Violation& v) { return verify::recheck(v, seq); };
    } else if (property == "tournament") {
        Tournament t = parse_tournament(text);
        breach = verify::tournament(t);
        replay = [t](const Violation& v) { return verify::recheck(v, t); };
    } else {
        LabeledBipartiteGraph g = parse_bipartite_graph(text);
        if (property == "induced") {
            breach = verify::induced_matchings(g);
        } else if (property == "ordered") {
            breach = verify::ordered_matchings(g);
        } else if (property == "sigma-free") {
            breach = verify::sigma_free(g);
        } else if (property == "separated") {
            breach = verify::l_separated(g, l);
        } else {
            throw ParseError("unknown property: " + property);
        }
        replay = [g](const Violation& v) { return verify::recheck(v, g); };
    }

    if (!breach) {
        std::cout << "valid\n";
        return 0;
    }
    return emit_violation(*breach, cert_path, replay);
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

int run_convert(const std::string& from, const std::string& to, const std::string& in_path,
                const std::string& out_path) {
    std::string text = read_file(in_path);

    if (from == "coloring" && to == "triples") {
        TripleSequence seq = transform::coloring_to_triples(parse_coloring(text));
        write_file(out_path, to_canonical_text(seq));
        std::cout << "triples: length=" << seq.triples.size()
                  << " max-entry=" << seq.alphabet_size << "\n";
        return 0;
    }
    if (from == "triples" && to == "coloring") {
        auto result = transform::triples_to_coloring(parse_triple_sequence(text));
        if (auto* v = std::get_if<Violation>(&result)) {
            TripleSequence seq = parse_triple_sequence(text);
            return emit_violation(*v, out_path + ".cert.json", [seq](const Violation& w) {
                return verify::recheck(w, seq);
            });
        }
        const auto& coloring = std::get<TournamentColoring>(result);
        write_file(out_path, to_canonical_text(coloring));
        std::cout << "coloring: N=" << coloring.num_vertices << " edges=" << coloring.num_edges()
                  << "\n";
        return 0;
    }
    if (from == "triples" && to == "bipartite") {
        auto result = transform::triples_to_bipartite(parse_triple_sequence(text));
        if (auto* v = std::get_if<Violation>(&result)) {
            TripleSequence seq = parse_triple_sequence(text);
            return emit_violation(*v, out_path + ".cert.json", [seq](const Violation& w) {
                return verify::recheck(w, seq);
            });
        }
        const auto& g = std::get<LabeledBipartiteGraph>(result);
        write_file(out_path, to_canonical_text(g));
        std::cout << "bipartite: edges=" << g.edges.size() << " labels=" << g.num_labels << "\n";
        return 0;
    }
    throw ParseError("unsupported conversion: " + from + " -> " + to);
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

void print_search_report(const std::string& problem, const std::string& params, int value,
                         search::Exactness flag, const search::Stats& stats,
                         const std::string& witness_path) {
    nlohmann::json report{{"problem", problem},
                          {"params", params},
                          {"value", value},
                          {"exactness", std::string(search::exactness_name(flag))},
                          {"nodes", stats.nodes},
                          {"witness", witness_path}};
    std::cout << report.dump(2) << "\n";
    report_stats(stats);
}

int exit_for(search::Exactness flag) {
    return flag == search::Exactness::exact ? 0 : 3;
}

int run_search_f(int N, const BudgetFlags& flags, std::string out) {
    search::FResult r = search::exact_f(N, flags.to_budget());
    if (out.empty()) out = "f_N" + std::to_string(N) + "_witness.json";
    write_file(out, to_canonical_text(r.witness));
    print_search_report("f", "N=" + std::to_string(N), r.value, r.flag, r.stats, out);
    return exit_for(r.flag);
}

int run_search_F(int n, bool heuristic, const BudgetFlags& flags, std::string out) {
    search::SequenceResult r =
        heuristic ? search::heuristic_F(n, flags.to_budget()) : search::exact_F(n, flags.to_budget());
    if (out.empty()) out = "F_n" + std::to_string(n) + "_witness.json";
    write_file(out, to_canonical_text(r.witness));
    print_search_report("F", "n=" + std::to_string(n), r.value, r.flag, r.stats, out);
    return exit_for(r.flag);
}

int run_search_M(int n, int k, int l, bool heuristic, const BudgetFlags& flags, std::string out) {
    search::GraphResult r = heuristic ? search::heuristic_M_l(n, k, l, flags.to_budget())
                                      : search::exact_M_l(n, k, l, flags.to_budget());
    if (out.empty()) {
        out = "M_n" + std::to_string(n) + "_k" + std::to_string(k) + "_l" + std::to_string(l) +
              "_witness.json";
    }
    write_file(out, to_canonical_text(r.witness));
    std::string params =
        "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
    print_search_report("M", params, r.value, r.flag, r.stats, out);
    return exit_for(r.flag);
}

int run_search_transitive(const std::string& in_path, const BudgetFlags& flags, std::string out) {
    Tournament t = parse_tournament(read_file(in_path));
    search::SubtournamentResult r = search::max_transitive_subtournament(t, flags.to_budget());
    if (out.empty()) out = "transitive_witness.json";
    nlohmann::json j{{"vertices", r.witness}};
    write_file(out, j.dump(2) + "\n");
    print_search_report("transitive", "N=" + std::to_string(t.num_vertices), r.value, r.flag,
                        r.stats, out);
    return exit_for(r.flag);
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int run_table_f(int max_N, const BudgetFlags& flags, const std::string& csv_path) {
    std::ostringstream csv;
    csv << "param,value,exactness,witness,nodes,duality\n";
    bool fatal = false;
    std::vector<int> values;
    std::vector<bool> exact;
    for (int N = 1; N <= max_N; ++N) {
        search::FResult r = search::exact_f(N, flags.to_budget());
        values.push_back(r.value);
        exact.push_back(r.flag == search::Exactness::exact);
        std::string witness = stem_of(csv_path) + "_N" + std::to_string(N) + "_witness.json";
        write_file(witness, to_canonical_text(r.witness));

        std::string duality;
        if (r.flag != search::Exactness::exact) {
            duality = "bound";
        } else if (N == 1) {
            duality = r.value == 1 ? "f(1)=1" : "FAIL:f(1)!=1";
            if (r.value != 1) fatal = true;
        } else if (!exact[N - 2]) {
            duality = "n/a";
        } else if (values[N - 1] < values[N - 2] || values[N - 1] > values[N - 2] + 1) {
            duality = "FAIL:step";
            fatal = true;
        } else if (values[N - 1] == values[N - 2] + 1) {
            int n = values[N - 2];
            search::SequenceResult F = search::exact_F(n, flags.to_budget());
            if (F.flag == search::Exactness::exact && F.value == N - 1) {
                duality = "F(" + std::to_string(n) + ")=" + std::to_string(N - 1);
            } else if (F.flag != search::Exactness::exact) {
                duality = "n/a";
            } else {
                duality = "FAIL:F(" + std::to_string(n) + ")=" + std::to_string(F.value);
                fatal = true;
            }
        } else {
            duality = "step";
        }
        csv << N << "," << r.value << "," << search::exactness_name(r.flag) << "," << witness
            << "," << r.stats.nodes << "," << duality << "\n";
    }
    write_file(csv_path, csv.str());
    std::cout << "table: rows=" << max_N << " out=" << csv_path << "\n";
    if (fatal) {
        std::cout << "duality check failed\n";
        return 1;
    }
    return 0;
}

int run_table_F(int max_n, const BudgetFlags& flags, const std::string& csv_path) {
    std::ostringstream csv;
    csv << "param,value,exactness,witness,nodes,duality\n";
    bool fatal = false;
    for (int n = 1; n <= max_n; ++n) {
        search::SequenceResult r = search::exact_F(n, flags.to_budget());
        std::string witness = stem_of(csv_path) + "_n" + std::to_string(n) + "_witness.json";
        write_file(witness, to_canonical_text(r.witness));

        std::string duality;
        if (r.flag != search::Exactness::exact) {
            duality = "bound";
        } else {
            int N = r.value;
            search::FResult at = search::exact_f(N, flags.to_budget());
            search::FResult after = search::exact_f(N + 1, flags.to_budget());
            if (at.flag != search::Exactness::exact || after.flag != search::Exactness::exact) {
                duality = "n/a";
            } else if (at.value == n && after.value == n + 1) {
                duality = "f(" + std::to_string(N) + ")=" + std::to_string(n) + ";f(" +
                          std::to_string(N + 1) + ")=" + std::to_string(n + 1);
            } else {
                duality = "FAIL:f(" + std::to_string(N) + ")=" + std::to_string(at.value);
                fatal = true;
            }
        }
        csv << n << "," << r.value << "," << search::exactness_name(r.flag) << "," << witness
            << "," << r.stats.nodes << "," << duality << "\n";
    }
    write_file(csv_path, csv.str());
    std::cout << "table: rows=" << max_n << " out=" << csv_path << "\n";
    if (fatal) {
        std::cout << "duality check failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for color-avoiding paths, pairwise-increasing triple sequences,\n"
                 "labeled matching decompositions and majority tournaments"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction");
    gen->require_subcommand(1);
    {
        static int m = 1, r = 3;
        static std::string out;
        auto* cmd = gen->add_subcommand("cube-coloring", "lexicographic cube coloring on m^r vertices");
        cmd->add_option("--m", m, "side length")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--r", r, "number of colors")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out, "output file")->required();
        cmd->callback([&] { exit_code = run_gen_cube_coloring(m, r, out); });
    }
    {
        static int m = 1;
        static std::string out;
        auto* cmd = gen->add_subcommand("cube-triples", "triple sequence of the cube coloring");
        cmd->add_option("--m", m, "side length")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--out", out, "output file")->required();
        cmd->callback([&] { exit_code = run_gen_cube_triples(m, out); });
    }
    {
        static int n = 1;
        static std::string out;
        auto* cmd = gen->add_subcommand("biclique", "disjoint bicliques with bijective labels");
        cmd->add_option("--n", n, "label count (perfect square)")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--out", out, "output file")->required();
        cmd->callback([&] { exit_code = run_gen_biclique(n, out); });
    }
    {
        static int k = 0, n = 0;
        static std::string spec_path, out;
        auto* cmd = gen->add_subcommand("majority", "k-majority tournament on n^k tuples");
        cmd->add_option("--k", k, "number of orders (odd)");
        cmd->add_option("--n", n, "tuple alphabet size");
        cmd->add_option("--spec", spec_path, "majority spec file (overrides --k/--n)");
        cmd->add_option("--out", out, "output file")->required();
        cmd->callback([&] { exit_code = run_gen_majority(k, n, spec_path, out); });
    }

    // verify
    {
        static std::string property, in_path, cert_path;
        static int l = 1;
        auto* cmd = app.add_subcommand("verify", "verify a property; violations emit a certificate");
        cmd->add_option("property", property, "triples|induced|ordered|sigma-free|separated|tournament")
            ->required()
            ->check(CLI::IsMember({"triples", "induced", "ordered", "sigma-free", "separated",
                                   "tournament"}));
        cmd->add_option("--in", in_path, "input file")->required();
        cmd->add_option("--l", l, "separation distance (separated only)")->check(CLI::PositiveNumber);
        cmd->add_option("--out", cert_path, "certificate file (default <in>.cert.json)");
        cmd->callback([&] { exit_code = run_verify(property, in_path, l, cert_path); });
    }

    // convert
    {
        static std::string from, to, in_path, out_path;
        auto* cmd = app.add_subcommand("convert", "convert between representations");
        cmd->add_option("--from", from, "coloring|triples")
            ->required()
            ->check(CLI::IsMember({"coloring", "triples"}));
        cmd->add_option("--to", to, "triples|coloring|bipartite")
            ->required()
            ->check(CLI::IsMember({"triples", "coloring", "bipartite"}));
        cmd->add_option("--in", in_path, "input file")->required();
        cmd->add_option("--out", out_path, "output file")->required();
        cmd->callback([&] { exit_code = run_convert(from, to, in_path, out_path); });
    }

    // search
    auto* srch = app.add_subcommand("search", "run an exact or heuristic solver");
    srch->require_subcommand(1);
    {
        static int N = 1;
        static BudgetFlags flags;
        static std::string out;
        auto* cmd = srch->add_subcommand("f", "min over 3-colorings of the longest avoiding path");
        cmd->add_option("--N", N, "tournament size")->required()->check(CLI::PositiveNumber);
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "witness file");
        cmd->callback([&] { exit_code = run_search_f(N, flags, out); });
    }
    {
        static int n = 1;
        static bool heuristic = false;
        static BudgetFlags flags;
        static std::string out;
        auto* cmd = srch->add_subcommand("F", "longest pairwise-increasing triple sequence");
        cmd->add_option("--n", n, "alphabet size")->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--heuristic", heuristic, "greedy lower bound only");
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "witness file");
        cmd->callback([&] { exit_code = run_search_F(n, heuristic, flags, out); });
    }
    {
        static int n = 1, k = 1, l = 1;
        static bool heuristic = false;
        static BudgetFlags flags;
        static std::string out;
        auto* cmd = srch->add_subcommand("M", "max edges over k l-separated matchings on n+n vertices");
        cmd->add_option("--n", n, "side size")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--k", k, "number of labels")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--l", l, "separation distance")->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--heuristic", heuristic, "greedy lower bound only");
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "witness file");
        cmd->callback([&] { exit_code = run_search_M(n, k, l, heuristic, flags, out); });
    }
    {
        static std::string in_path, out;
        static BudgetFlags flags;
        auto* cmd = srch->add_subcommand("transitive", "max transitive subtournament");
        cmd->add_option("--in", in_path, "tournament file")->required();
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "witness file");
        cmd->callback([&] { exit_code = run_search_transitive(in_path, flags, out); });
    }

    // table
    auto* table = app.add_subcommand("table", "sweep a parameter range into a CSV");
    table->require_subcommand(1);
    {
        static int N = 0;
        static BudgetFlags flags;
        static std::string out;
        auto* cmd = table->add_subcommand("f", "f values for N = 1..N");
        cmd->add_option("--N", N, "largest tournament size")->required()
            ->check(CLI::NonNegativeNumber);
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "CSV file")->required();
        cmd->callback([&] { exit_code = run_table_f(N, flags, out); });
    }
    {
        static int n = 0;
        static BudgetFlags flags;
        static std::string out;
        auto* cmd = table->add_subcommand("F", "F values for n = 1..n");
        cmd->add_option("--n", n, "largest alphabet")->required()->check(CLI::NonNegativeNumber);
        add_budget_flags(cmd, flags);
        cmd->add_option("--out", out, "CSV file")->required();
        cmd->callback([&] { exit_code = run_table_F(n, flags, out); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
