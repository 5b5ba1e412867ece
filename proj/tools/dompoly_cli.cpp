// Command-line front end: polynomials, constructions, classes, atlases,
// claim verification and shadow reports. Results go to stdout, progress to
// stderr. Exit status: 0 success/pass, 1 verification failure, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dompoly/canonical.hpp"
#include "dompoly/constructions.hpp"
#include "dompoly/extremal.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/parallel.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/search.hpp"
#include "dompoly/serialize.hpp"
#include "dompoly/theorems.hpp"

namespace {

using namespace dompoly;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
  public:
    using Error::Error;
};

Graph parse_graph_arg(const std::string& arg) {
    if (arg.rfind("g6:", 0) == 0) return from_graph6(arg.substr(3));
    if (arg.rfind('@', 0) == 0) {
        const std::string path = arg.substr(1);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line != "\r") return from_graph6(line);
        }
        throw ParseError("'" + path + "' contains no graph");
    }
    return parse_construction(arg);
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "order " << g.order() << ", " << g.edge_count() << " edges\n";
    for (int v = 0; v < g.order(); ++v) {
        out << v << ":";
        for (int u : g.neighbors(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

std::string set_line(VertexSet s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

struct Options {
    unsigned threads = 0;
    bool json = false;

    std::string graph;
    int k = 0;
    bool g6 = false;
    std::string corpus;
    std::string out;
    std::string csv;
    int order = -1;
    std::string method = "extend";
    std::string family;

    std::string claim;
    std::vector<int> params;
    bool exhaustive = false;
    bool allow_order9 = false;
};

std::vector<Graph> generate_corpus(int n, const Options& opt) {
    std::cerr << "generating all graphs of order " << n << "...\n";
    auto corpus = opt.method == "enumerate" ? enumerate_graphs(n, opt.threads) : exhaustive_corpus(n, opt.threads);
    std::cerr << "  " << corpus.size() << " isomorphism classes\n";
    return corpus;
}

std::optional<std::vector<Graph>> load_corpus(int n, const Options& opt, bool required) {
    if (!opt.corpus.empty()) {
        std::cerr << "reading corpus " << opt.corpus << "...\n";
        return ingest_graph6(opt.corpus);
    }
    if (!opt.exhaustive && !required) return std::nullopt;
    const int cap = opt.allow_order9 ? 9 : 8;
    if (n > cap) {
        throw UsageError("built-in corpus for order " + std::to_string(n) + " needs " +
                         (n == 9 ? "--order9" : "an external --corpus file"));
    }
    return generate_corpus(n, opt);
}

void need_params(const Options& opt, std::size_t min, std::size_t max, const char* usage) {
    if (opt.params.size() < min || opt.params.size() > max) {
        throw UsageError(std::string("usage: verify ") + usage);
    }
}

VerificationOutcome run_verify(const Options& opt) {
    const auto& p = opt.params;
    if (opt.claim == "fact1") {
        need_params(opt, 2, 2, "fact1 A T");
        return verify_fact1(p[0], p[1]);
    }
    if (opt.claim == "thm2") {
        need_params(opt, 1, 1, "thm2 A [--corpus FILE | --exhaustive]");
        auto corpus = load_corpus(2 * p[0], opt, false);
        if (!corpus) return verify_theorem2_members(p[0]);
        return verify_theorem2_members(p[0], std::span<const Graph>(*corpus));
    }
    if (opt.claim == "thm3") {
        need_params(opt, 1, 64, "thm3 A1 A2 ... [--corpus FILE]");
        PartitionSpec spec(p);
        auto corpus = load_corpus(spec.order(), opt, true);
        return verify_theorem3(spec, *corpus);
    }
    if (opt.claim == "thm4") {
        need_params(opt, 2, 2, "thm4 R A [--corpus FILE | --exhaustive]");
        auto corpus = load_corpus(p[0] * p[1], opt, false);
        if (!corpus) return verify_theorem4_members(p[0], p[1]);
        return verify_theorem4_members(p[0], p[1], std::span<const Graph>(*corpus));
    }
    if (opt.claim == "conj1-empirical") {
        need_params(opt, 1, 1, "conj1-empirical A [--corpus FILE]");
        auto corpus = load_corpus(2 * p[0] + 1, opt, true);
        return conjecture1_empirical(p[0], *corpus);
    }
    if (opt.claim == "counterexample") {
        need_params(opt, 1, 64, "counterexample A1 A2 ...");
        return verify_counterexample(PartitionSpec(p));
    }
    throw UsageError("unknown claim '" + opt.claim +
                     "' (expected fact1, thm2, thm3, thm4, conj1-empirical, counterexample)");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact domination polynomials and D-equivalence checks"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options opt;
    app.add_option("--threads", opt.threads, "Worker threads (default: DOMPOLY_THREADS or all cores)");

    auto* poly = app.add_subcommand("poly", "Print the domination polynomial of a graph");
    poly->add_option("graph", opt.graph, "Construction expression, g6:STRING or @FILE")->required();
    poly->add_flag("--json", opt.json, "Emit {\"n\", \"coeffs\"} JSON");

    auto* ndsets = app.add_subcommand("ndsets", "List the non-dominating sets of one size");
    ndsets->add_option("graph", opt.graph)->required();
    ndsets->add_option("--k", opt.k, "Set size")->required();
    ndsets->add_flag("--json", opt.json);

    auto* construct = app.add_subcommand("construct", "Build a graph from a construction expression");
    construct->add_option("expr", opt.graph)->required();
    construct->add_flag("--g6", opt.g6, "Emit graph6 instead of an adjacency listing");

    auto* cls = app.add_subcommand("class", "Print the D-equivalence class of a graph in a corpus");
    cls->add_option("graph", opt.graph)->required();
    cls->add_option("--corpus", opt.corpus, "graph6 file of one order")->required();
    cls->add_flag("--json", opt.json);

    auto* atlas = app.add_subcommand("atlas", "Bucket a whole corpus by domination polynomial");
    auto* atlas_corpus = atlas->add_option("--corpus", opt.corpus, "graph6 file of one order");
    atlas->add_option("--order", opt.order, "Generate the corpus instead (order <= 9)")->excludes(atlas_corpus);
    atlas->add_option("--out", opt.out, "Atlas JSON output file")->required();
    atlas->add_option("--csv", opt.csv, "Optional CSV summary output file");

    auto* gen = app.add_subcommand("gen", "Write every graph of one order as graph6");
    gen->add_option("--order", opt.order)->required();
    gen->add_option("--out", opt.out, "Output file (default stdout)");
    gen->add_option("--method", opt.method, "extend (n <= 9) or enumerate (n <= 7)")
        ->check(CLI::IsMember({"extend", "enumerate"}));

    auto* verify = app.add_subcommand("verify", "Run a claim check");
    verify->add_option("claim", opt.claim, "fact1 | thm2 | thm3 | thm4 | conj1-empirical | counterexample")
        ->required();
    verify->add_option("params", opt.params, "Integer parameters of the claim");
    verify->add_option("--corpus", opt.corpus, "graph6 corpus for completeness checks");
    verify->add_flag("--exhaustive", opt.exhaustive, "Generate the corpus for completeness checks (order <= 8)");
    verify->add_flag("--order9", opt.allow_order9, "Allow generating an order-9 corpus");
    verify->add_flag("--json", opt.json);

    auto* kk = app.add_subcommand("kk", "Shadow size against the real-binomial bound for a uniform family");
    kk->add_option("--family", opt.family, "One set per line, space-separated vertices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*poly) {
            const Polynomial p = polynomial(parse_graph_arg(opt.graph), opt.threads);
            std::cout << (opt.json ? to_json(p).dump() : p.to_string()) << "\n";
        } else if (*ndsets) {
            const Graph g = parse_graph_arg(opt.graph);
            const SetFamily f = nondominating_sets(g, opt.k);
            if (opt.json) {
                nlohmann::json sets = nlohmann::json::array();
                for (auto s : f.sets()) sets.push_back(s.to_vector());
                std::cout << nlohmann::json{{"n", f.ground()}, {"k", f.k()}, {"sets", sets}}.dump() << "\n";
            } else {
                for (auto s : f.sets()) std::cout << set_line(s) << "\n";
            }
        } else if (*construct) {
            const Graph g = parse_construction(opt.graph);
            std::cout << (opt.g6 ? to_graph6(g) + "\n" : describe(g));
        } else if (*cls) {
            const Graph g = parse_graph_arg(opt.graph);
            const auto corpus = ingest_graph6(opt.corpus);
            const ClassReport report = equivalence_class(g, corpus);
            if (opt.json) {
                std::cout << to_json(report).dump() << "\n";
            } else {
                std::cout << report.polynomial.to_string() << "\n";
                std::cout << "class size " << report.size() << "\n";
                for (const auto& m : report.members) std::cout << m << "\n";
            }
        } else if (*atlas) {
            std::vector<Graph> corpus;
            if (!opt.corpus.empty()) {
                corpus = ingest_graph6(opt.corpus);
            } else if (opt.order >= 0) {
                corpus = generate_corpus(opt.order, opt);
            } else {
                throw UsageError("atlas needs --corpus FILE or --order N");
            }
            std::cerr << "bucketing " << corpus.size() << " graphs...\n";
            const Atlas a = build_atlas(corpus, opt.threads);
            std::ofstream(opt.out) << to_json(a).dump(1) << "\n";
            if (!opt.csv.empty()) std::ofstream(opt.csv) << atlas_csv(a);
            std::cout << "order " << a.order << ": " << a.total_graphs << " graphs in " << a.classes.size()
                      << " classes\n";
        } else if (*gen) {
            const auto corpus = generate_corpus(opt.order, opt);
            std::ofstream file;
            if (!opt.out.empty()) file.open(opt.out);
            std::ostream& out = opt.out.empty() ? std::cout : file;
            for (const auto& g : corpus) out << to_graph6(g) << "\n";
        } else if (*verify) {
            const VerificationOutcome o = run_verify(opt);
            if (opt.json) {
                std::cout << to_json(o).dump() << "\n";
            } else {
                std::cout << (o.passed ? "pass" : "fail") << " " << o.claim_id << " "
                          << nlohmann::json(o.parameters).dump() << "\n"
                          << o.evidence.dump(2) << "\n";
            }
            return o.passed ? 0 : kExitFail;
        } else if (*kk) {
            std::ifstream in(opt.family);
            if (!in) throw ParseError("cannot open '" + opt.family + "'");
            std::cout << to_json(check_kk(parse_family(in))).dump() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
