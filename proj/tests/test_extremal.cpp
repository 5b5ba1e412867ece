#include <cmath>
#include <random>

#include "doctest.h"
#include "dompoly/canonical.hpp"
#include "dompoly/constructions.hpp"
#include "dompoly/extremal.hpp"
#include "dompoly/search.hpp"
#include "oracles.hpp"

using namespace dompoly;

namespace {

Graph clique(int n) { return complement(Graph::edgeless(n)); }

SetFamily family(int ground, int k, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<VertexSet> out;
    for (auto s : sets) out.push_back(VertexSet::of(s));
    return SetFamily(ground, k, out);
}

// Calls body(family) for every m-element subfamily of `pool`.
template <class F>
void for_each_subfamily(const std::vector<VertexSet>& pool, int m, F&& body) {
    const int p = static_cast<int>(pool.size());
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<VertexSet> pick(m);
    while (true) {
        for (int i = 0; i < m; ++i) pick[i] = pool[idx[i]];
        body(pick);
        int i = m - 1;
        while (i >= 0 && idx[i] == p - m + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TEST_CASE("shadow") {
    CHECK(shadow(family(4, 2, {{1, 2}, {1, 3}, {2, 3}})) == family(4, 1, {{1}, {2}, {3}}));
    CHECK(shadow(family(5, 3, {{0, 2, 4}})) == family(5, 2, {{0, 2}, {0, 4}, {2, 4}}));
    CHECK(shadow(family(3, 1, {{0}, {2}})) == family(3, 0, {{}}));
    CHECK(shadow(SetFamily(4, 2, {})).size() == 0);
    CHECK_THROWS_AS(shadow(SetFamily(4, 0, {VertexSet()})), Error);

    for (int ar = 3; ar <= 6; ++ar) {
        const VertexSet a = VertexSet::of({1, 3, 4, 6, 7, 8}) & VertexSet::range(9);
        VertexSet head;
        for (int v : a) {
            if (head.size() < ar) head = head.with(v);
        }
        if (head.size() < ar) continue;
        const SetFamily s = shadow(all_k_subsets(10, head, ar - 1));
        CHECK(s == all_k_subsets(10, head, ar - 2));
        CHECK(s.size() == static_cast<std::size_t>(ar * (ar - 1) / 2));
    }
}

TEST_CASE("all_k_subsets") {
    CHECK(all_k_subsets(6, VertexSet::of({0, 2, 5}), 2) == family(6, 2, {{0, 2}, {0, 5}, {2, 5}}));
    CHECK(all_k_subsets(6, VertexSet::of({1, 2}), 0).size() == 1);
    CHECK(all_k_subsets(6, VertexSet::of({1, 2}), 3).size() == 0);
    CHECK(all_k_subsets(12, VertexSet::range(12), 5).size() == 792);
}

TEST_CASE("generalized binomial") {
    CHECK(generalized_binomial(4.0, 2) == 6.0);
    CHECK(generalized_binomial(2.5, 0) == 1.0);
    CHECK(generalized_binomial(4.5, 2) == doctest::Approx(7.875).epsilon(1e-15));
    CHECK(generalized_binomial(10.0, 4) == doctest::Approx(210.0).epsilon(1e-15));
    CHECK(generalized_binomial(1.0, 2) == 0.0);
    CHECK_THROWS_AS(generalized_binomial(0.5, 2), Error);
    CHECK_THROWS_AS(generalized_binomial(3.0, -1), Error);
    double prev = -1;
    for (double x = 3.0; x < 12.0; x += 0.125) {
        const double v = generalized_binomial(x, 4);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("solve_x") {
    CHECK(std::abs(solve_x(6, 2) - 4.0) < 1e-9);
    CHECK(std::abs(solve_x(3, 2) - 3.0) < 1e-9);
    CHECK(std::abs(solve_x(7, 2) - (1 + std::sqrt(57.0)) / 2) < 1e-9);
    CHECK(std::abs(solve_x(1, 3) - 3.0) < 1e-9);
    CHECK(std::abs(solve_x(1, 1) - 1.0) < 1e-9);
    CHECK(std::abs(solve_x(120, 3) - 10.0) < 1e-9);
    CHECK_THROWS_AS(solve_x(0, 2), Error);
    CHECK_THROWS_AS(solve_x(5, 0), Error);
    for (std::uint64_t m = 1; m < 500; m += 7) {
        for (int k = 1; k <= 5; ++k) {
            const double x = solve_x(m, k);
            CHECK(x >= k);
            CHECK(generalized_binomial(x, k) == doctest::Approx(static_cast<double>(m)).epsilon(1e-12));
        }
    }
}

TEST_CASE("check_kk examples") {
    const KKReport clique4 = check_kk(all_k_subsets(4, VertexSet::range(4), 2));
    CHECK(clique4.family_size == 6);
    CHECK(clique4.shadow_size == 4);
    CHECK(clique4.bound == doctest::Approx(4.0));
    CHECK(clique4.bound_met);
    CHECK(clique4.equality);
    REQUIRE(clique4.clique_witness.has_value());
    CHECK(*clique4.clique_witness == VertexSet::range(4));

    const KKReport two = check_kk(family(5, 2, {{1, 2}, {3, 4}}));
    // x(x-1) = 4
    const double x2 = (1 + std::sqrt(17.0)) / 2;
    CHECK(std::abs(two.x_solved - x2) < 1e-9);
    CHECK(two.shadow_size == 4);
    CHECK(std::abs(two.bound - x2) < 1e-9);
    CHECK(two.bound_met);
    CHECK_FALSE(two.equality);
    CHECK_FALSE(two.clique_witness.has_value());

    // Integer x with a non-clique family: 3 edges forming a path.
    const KKReport p4 = check_kk(family(5, 2, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(p4.x_solved == doctest::Approx(3.0));
    CHECK(p4.shadow_size == 4);
    CHECK_FALSE(p4.equality);

    CHECK_THROWS_AS(check_kk(SetFamily(4, 2, {})), Error);
}

TEST_CASE("shadow bound holds on random families") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const int k = 1 + static_cast<int>(rng() % std::min(5, n));
        const SetFamily all = all_k_subsets(n, VertexSet::range(n), k);
        std::vector<VertexSet> pick;
        const double p = std::uniform_real_distribution<double>(0.02, 1.0)(rng);
        std::bernoulli_distribution coin(p);
        for (auto s : all.sets()) {
            if (coin(rng)) pick.push_back(s);
        }
        if (pick.empty()) pick.push_back(all.sets()[rng() % all.size()]);
        const SetFamily f(n, k, pick);
        const KKReport r = check_kk(f);
        CHECK(r.bound_met);
        VertexSet ground;
        for (auto s : f.sets()) ground |= s;
        CHECK(r.equality == (all_k_subsets(n, ground, k) == f));
    }
}

TEST_CASE("shadow bound equality on clique families") {
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= n; ++m) {
            for (int k = 1; k <= std::min(m, 5); ++k) {
                const VertexSet ground = VertexSet(VertexSet::range(m).bits() << (n - m));
                const KKReport r = check_kk(all_k_subsets(n, ground, k));
                CHECK(r.equality);
                CHECK(r.clique_witness == ground);
            }
        }
    }
}

TEST_CASE("pincer: small shadow forces a full clique family") {
    // Families of a_r many (a_r - 1)-sets whose shadow has at most
    // C(a_r, 2) members are exactly the (a_r - 1)-subsets of some a_r-set.
    for (auto [ar, n] : {std::pair{3, 6}, std::pair{4, 6}, std::pair{5, 7}}) {
        CAPTURE(ar);
        const SetFamily pool = all_k_subsets(n, VertexSet::range(n), ar - 1);
        const std::size_t limit = static_cast<std::size_t>(ar * (ar - 1) / 2);
        std::size_t tight = 0, checked = 0;
        for_each_subfamily(pool.sets(), ar, [&](const std::vector<VertexSet>& pick) {
            const SetFamily f(n, ar - 1, pick);
            ++checked;
            if (shadow(f).size() > limit) return;
            ++tight;
            VertexSet ground;
            for (auto s : pick) ground |= s;
            CHECK(ground.size() == ar);
            CHECK(check_kk(f).equality);
        });
        // Exactly one such family per a_r-subset of the ground set.
        CHECK(tight == static_cast<std::size_t>(all_k_subsets(n, VertexSet::range(n), ar).size()));
        CHECK(checked > tight);
    }
}

TEST_CASE("clique freeness") {
    CHECK(is_clique_free(equipartite(4, 3), 5));
    CHECK_FALSE(is_clique_free(equipartite(4, 3), 4));
    for (int q = 2; q <= 8; ++q) {
        CHECK_FALSE(is_clique_free(clique(q), q));
        CHECK(is_clique_free(clique(q), q + 1));
    }
    CHECK(is_clique_free(Graph::edgeless(5), 2));
    CHECK_FALSE(is_clique_free(Graph::edgeless(5), 1));
    CHECK(is_clique_free(Graph(), 1));
    CHECK_THROWS_AS(is_clique_free(clique(3), 0), Error);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 14, 0.55, rng);
        const int omega = oracle::clique_number(g);
        CHECK_FALSE(is_clique_free(g, omega));
        CHECK(is_clique_free(g, omega + 1));
    }
}

TEST_CASE("turan_max_edges") {
    CHECK(turan_max_edges(2, 2) == 4);
    CHECK(turan_max_edges(3, 2) == 12);
    CHECK(turan_max_edges(4, 3) == 54);
    CHECK(turan_max_edges(1, 7) == 0);
    for (int r = 1; r <= 6; ++r) {
        for (int a = 1; a <= 6; ++a) CHECK(turan_max_edges(r, a) == equipartite(r, a).edge_count());
    }
    CHECK(turan_max_edges(1000, 1000) == 499500000000LL);
    CHECK_THROWS_AS(turan_max_edges(0, 2), Error);
}

TEST_CASE("Turan bound over every graph of order 6") {
    const Graph k32 = equipartite(3, 2);
    int extremal = 0;
    for (const Graph& g : enumerate_graphs(6)) {
        if (!is_clique_free(g, 4)) continue;
        CHECK(g.edge_count() <= turan_max_edges(3, 2));
        if (g.edge_count() == turan_max_edges(3, 2)) {
            ++extremal;
            CHECK(is_isomorphic(g, k32));
        }
    }
    CHECK(extremal == 1);
}

TEST_CASE("dominating pair graph") {
    for (int r = 2; r <= 5; ++r) {
        for (int a = 3; a <= 5; ++a) CHECK(dominating_pair_graph(equipartite(r, a)) == equipartite(r, a));
    }
    for (int n = 3; n <= 8; ++n) CHECK(dominating_pair_graph(clique(n)) == clique(n));
    CHECK(is_isomorphic(dominating_pair_graph(j_graph(4, 3, 1)), equipartite(4, 3)));
    // C4: the diagonals also dominate.
    CHECK(dominating_pair_graph(equipartite(2, 2)) == clique(4));
    CHECK(dominating_pair_graph(Graph()) == Graph());

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 8, 0.6, rng);
        const Graph f = dominating_pair_graph(g);
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                CHECK(f.has_edge(u, v) == is_dominating(g, VertexSet::of({u, v})));
            }
        }
    }
}

TEST_CASE("dominating pair graphs of the J family are Kr(a)") {
    for (auto [r, a] : {std::pair{2, 4}, std::pair{3, 5}, std::pair{4, 6}, std::pair{3, 3}}) {
        for (int t = 0; t <= r / 2; ++t) {
            const Graph f = dominating_pair_graph(j_graph(r, a, t));
            CHECK(is_isomorphic(f, equipartite(r, a)));
            CHECK(is_clique_free(f, r + 1));
        }
    }
}
