#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <unistd.h>

#include "doctest.h"
#include "dompoly/canonical.hpp"
#include "dompoly/constructions.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/search.hpp"
#include "dompoly/serialize.hpp"
#include "oracles.hpp"

using namespace dompoly;

namespace {

std::string data_file(int n) {
    return std::string(DOMPOLY_TEST_DATA) + "/atlas_order" + std::to_string(n) + ".g6";
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

std::set<std::string> keys(const std::vector<Graph>& gs) {
    std::set<std::string> out;
    for (const auto& g : gs) out.insert(canonical_key(g));
    return out;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& body) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("dompoly_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".g6");
        std::ofstream(path) << body;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("enumerate_graphs counts") {
    // Unlabeled graphs on n vertices.
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
    CHECK_THROWS_AS(enumerate_graphs(8), BudgetError);
    CHECK_THROWS_AS(enumerate_graphs(-1), Error);
}

TEST_CASE("enumerate_graphs yields pairwise non-isomorphic graphs") {
    const auto gs = enumerate_graphs(5);
    CHECK(keys(gs).size() == gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            CHECK(oracle::permutation_canonical(gs[i]) != oracle::permutation_canonical(gs[j]));
        }
    }
}

TEST_CASE("generated corpora match the external atlas") {
    for (int n = 4; n <= 7; ++n) {
        const auto external = ingest_graph6(data_file(n));
        const auto enumerated = enumerate_graphs(n);
        const auto extended = exhaustive_corpus(n);
        CHECK(keys(external) == keys(enumerated));
        CHECK(keys(extended) == keys(enumerated));
        CHECK(extended.size() == external.size());
    }
}

TEST_CASE("exhaustive corpus at order 8") {
    const auto gs = exhaustive_corpus(8);
    CHECK(gs.size() == 12346);
    CHECK(keys(gs).size() == gs.size());
    CHECK_THROWS_AS(exhaustive_corpus(10), BudgetError);
}

TEST_CASE("extend_by_vertex") {
    const auto three = enumerate_graphs(3);
    CHECK(keys(extend_by_vertex(three)) == keys(enumerate_graphs(4)));
    CHECK(extend_by_vertex(std::vector<Graph>{}).empty());
}

TEST_CASE("ingest_graph6") {
    {
        TempFile f("A_\n");
        const auto gs = ingest_graph6(f.path.string());
        REQUIRE(gs.size() == 1);
        CHECK(gs[0] == path(2));
    }
    {
        TempFile f("");
        CHECK(ingest_graph6(f.path.string()).empty());
    }
    {
        TempFile f("A_\n\nA?\r\n");
        CHECK(ingest_graph6(f.path.string()).size() == 2);
    }
    {
        TempFile f("A_\nA_\nAo\n");
        try {
            ingest_graph6(f.path.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(":3:") != std::string::npos);
        }
    }
    {
        TempFile f("A_\nBw\n");
        try {
            ingest_graph6(f.path.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(":2:") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(ingest_graph6("/nonexistent/corpus.g6"), Error);
    const auto order6 = ingest_graph6(data_file(6));
    CHECK(order6.size() == 156);
    for (const auto& g : order6) CHECK(g.order() == 6);
}

TEST_CASE("atlas invariants") {
    // Class counts frozen from an independent subset-enumeration run over
    // the external atlas.
    const std::vector<std::size_t> class_counts{10, 27, 88, 366};
    for (int n = 4; n <= 7; ++n) {
        const auto corpus = ingest_graph6(data_file(n));
        const Atlas a = build_atlas(corpus);
        CHECK(a.order == n);
        CHECK(a.total_graphs == corpus.size());
        CHECK(a.classes.size() == class_counts[n - 4]);
        std::size_t sum = 0;
        std::set<std::string> seen;
        for (const auto& c : a.classes) {
            sum += c.size();
            CHECK(std::is_sorted(c.members.begin(), c.members.end()));
            for (const auto& m : c.members) {
                CHECK(seen.insert(m).second);
                if (n <= 5) CHECK(polynomial(from_graph6(m)) == c.polynomial);
            }
        }
        CHECK(sum == corpus.size());
        for (std::size_t i = 1; i < a.classes.size(); ++i) CHECK(a.classes[i - 1].polynomial < a.classes[i].polynomial);
    }
}

TEST_CASE("atlas is deterministic under corpus permutation and thread count") {
    auto corpus = ingest_graph6(data_file(6));
    const std::string base = to_json(build_atlas(corpus, 1)).dump();
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(corpus.begin(), corpus.end(), rng);
        for (auto& g : corpus) g = oracle::random_relabel(g, rng);
        CHECK(to_json(build_atlas(corpus, 1 + trial * 2)).dump() == base);
    }
    // Duplicates do not inflate the atlas.
    corpus.insert(corpus.end(), corpus.begin(), corpus.begin() + 10);
    CHECK(to_json(build_atlas(corpus)).dump() == base);
}

TEST_CASE("atlas rejects mixed orders") {
    std::vector<Graph> corpus{Graph::edgeless(3), Graph::edgeless(4)};
    CHECK_THROWS_AS(build_atlas(corpus), Error);
    CHECK(build_atlas(std::vector<Graph>{}).classes.empty());
}

TEST_CASE("named classes in the atlas") {
    const Atlas a4 = build_atlas(ingest_graph6(data_file(4)));
    const Graph k13 = complete_multipartite(PartitionSpec{1, 3});
    const ClassReport* c13 = a4.find(polynomial(k13));
    REQUIRE(c13 != nullptr);
    CHECK(c13->size() == 1);
    CHECK(c13->contains(k13));

    const Atlas a6 = build_atlas(ingest_graph6(data_file(6)));
    const Graph k33 = complete_multipartite(PartitionSpec{3, 3});
    const ClassReport* c33 = a6.find(polynomial(k33));
    REQUIRE(c33 != nullptr);
    CHECK(c33->size() == 2);
    CHECK(c33->contains(k33));
    CHECK(c33->contains(h_graph(3, 0)));

    const ClassReport* c222 = a6.find(polynomial(equipartite(3, 2)));
    REQUIRE(c222 != nullptr);
    CHECK(c222->size() == 1);

    const ClassReport* p6 = a6.find(polynomial(path(6)));
    REQUIRE(p6 != nullptr);
    CHECK(p6->size() == 2);
    CHECK(p6->contains(path(6)));

    CHECK(a6.find(polynomial(Graph::edgeless(5))) == nullptr);
}

TEST_CASE("equivalence classes") {
    const auto order5 = ingest_graph6(data_file(5));
    const ClassReport k23 = equivalence_class(complete_multipartite(PartitionSpec{2, 3}), order5);
    CHECK(k23.polynomial.to_string() == "x^5+5x^4+10x^3+7x^2");
    CHECK(k23.size() == 2);
    CHECK(k23.contains(h_graph(2, 1)));
    CHECK(equivalence_class(complete_multipartite(PartitionSpec{1, 4}), order5).size() == 1);

    const auto order6 = ingest_graph6(data_file(6));
    CHECK(equivalence_class(path(6), order6).size() >= 2);

    // The graph itself is always reported, even against an empty corpus.
    const ClassReport alone = equivalence_class(path(6), std::vector<Graph>{});
    CHECK(alone.size() == 1);
    CHECK(alone.contains(path(6)));

    CHECK_THROWS_AS(equivalence_class(path(5), order6), Error);
}

TEST_CASE("verify_unique_in_corpus") {
    const auto order4 = ingest_graph6(data_file(4));
    const auto order6 = ingest_graph6(data_file(6));
    const auto order7 = ingest_graph6(data_file(7));

    const auto k13 = verify_unique_in_corpus(complete_multipartite(PartitionSpec{1, 3}), order4);
    CHECK(k13.passed);

    const auto k33 = verify_unique_in_corpus(complete_multipartite(PartitionSpec{3, 3}), order6);
    CHECK_FALSE(k33.passed);
    REQUIRE(k33.evidence.contains("witnesses"));
    REQUIRE(k33.evidence["witnesses"].size() == 1);
    CHECK(is_isomorphic(from_graph6(k33.evidence["witnesses"][0].get<std::string>()), h_graph(3, 0)));

    const auto k34 = verify_unique_in_corpus(complete_multipartite(PartitionSpec{3, 4}), order7);
    CHECK_FALSE(k34.passed);
    REQUIRE(k34.evidence["witnesses"].size() == 1);
    CHECK(is_isomorphic(from_graph6(k34.evidence["witnesses"][0].get<std::string>()), h_graph(3, 1)));
}
