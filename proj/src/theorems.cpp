#include "dompoly/theorems.hpp"

#include <algorithm>
#include <set>

#include "dompoly/canonical.hpp"
#include "dompoly/extremal.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/search.hpp"

namespace dompoly {

namespace {

constexpr int kMembershipMaxOrder = 24;

void check_membership_budget(int n, const char* claim) {
    if (n > kMembershipMaxOrder) {
        throw BudgetError(std::string(claim) + ": order " + std::to_string(n) + " exceeds 24");
    }
}

std::vector<std::string> sorted_keys(const std::vector<Graph>& graphs) {
    std::set<std::string> keys;
    for (const auto& g : graphs) keys.insert(canonical_key(g));
    return {keys.begin(), keys.end()};
}

// Compares the class of `g` in the corpus with the expected member set.
bool check_class(const Graph& g, const std::vector<Graph>& expected, std::span<const Graph> corpus,
                 nlohmann::json& evidence) {
    const ClassReport cls = equivalence_class(g, corpus);
    const auto want = sorted_keys(expected);
    evidence["corpus_size"] = corpus.size();
    evidence["class_members"] = cls.members;
    evidence["expected_members"] = want;
    evidence["certified"].push_back("completeness");
    return cls.members == want;
}

std::vector<int> without_pair(const std::vector<int>& parts, std::size_t i, std::size_t j) {
    std::vector<int> rest;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k != i && k != j) rest.push_back(parts[k]);
    }
    return rest;
}

Graph multipartite_or_empty(const std::vector<int>& parts) {
    return parts.empty() ? Graph() : complete_multipartite(PartitionSpec(parts));
}

// Lexicographically first (i, j), i < j, violating the uniqueness condition.
std::optional<std::pair<std::size_t, std::size_t>> first_violation(const PartitionSpec& spec) {
    const auto& a = spec.parts();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::max(a[i], a[j]) > 2 && a[j] - a[i] < 2) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

std::vector<std::int64_t> as_params(const PartitionSpec& spec) {
    return {spec.parts().begin(), spec.parts().end()};
}

}  // namespace

bool uniqueness_condition(const PartitionSpec& spec) {
    return !first_violation(spec).has_value();
}

VerificationOutcome verify_fact1(int a, int t) {
    if (a < 1 || (t != 0 && t != 1)) throw Error("fact1 requires a >= 1 and t in {0,1}");
    check_membership_budget(2 * a + t, "fact1");
    const Polynomial bipartite = polynomial(complete_multipartite(PartitionSpec{a, a + t}));
    const Polynomial h = polynomial(h_graph(a, t));
    VerificationOutcome out{"fact1", {a, t}, bipartite == h, {}};
    out.evidence["K(a,a+t)"] = bipartite.to_string();
    out.evidence["H_t(a)"] = h.to_string();
    return out;
}

VerificationOutcome verify_theorem2_members(int a, std::optional<std::span<const Graph>> corpus) {
    if (a < 1) throw Error("thm2 requires a >= 1");
    check_membership_budget(2 * a, "thm2");
    const Graph kaa = complete_multipartite(PartitionSpec{a, a});
    const Graph h0 = h_graph(a, 0);
    const Polynomial pk = polynomial(kaa);
    const Polynomial ph = polynomial(h0);
    const bool iso = is_isomorphic(kaa, h0);
    const bool expect_iso = a <= 2;

    VerificationOutcome out{"thm2", {a}, pk == ph && iso == expect_iso, {}};
    out.evidence["polynomial"] = pk.to_string();
    out.evidence["polynomials_equal"] = pk == ph;
    out.evidence["isomorphic"] = iso;
    out.evidence["expected_isomorphic"] = expect_iso;
    out.evidence["certified"] = nlohmann::json::array({"membership"});
    if (corpus) {
        std::vector<Graph> expected{kaa, h0};
        out.passed = check_class(kaa, expected, *corpus, out.evidence) && out.passed;
    }
    return out;
}

VerificationOutcome verify_theorem4_members(int r, int a, std::optional<std::span<const Graph>> corpus) {
    if (r < 2 || a < 1) throw Error("thm4 requires r >= 2 and a >= 1");
    const int n = r * a;
    check_membership_budget(n, "thm4");
    VerificationOutcome out{"thm4", {r, a}, true, {}};
    out.evidence["outside_proven_range"] = a < r + 2;
    out.evidence["certified"] = nlohmann::json::array({"membership"});

    const Graph target = equipartite(r, a);
    const Polynomial shared = polynomial(target);
    out.evidence["polynomial"] = shared.to_string();

    std::vector<Graph> members;
    nlohmann::json details = nlohmann::json::array();
    for (int t = 0; t <= r / 2; ++t) {
        const Graph j = j_graph(r, a, t);
        std::vector<int> want(r - 2 * t, a);
        want.insert(want.end(), t, 2 * a);
        std::sort(want.begin(), want.end());
        const auto comps = component_sizes(complement(j));
        const bool same_poly = polynomial(j) == shared;
        const bool regular = is_regular(j) && (n == 0 || j.degree(0) == n - a);
        const bool fingerprint = comps == want;
        const bool pair_graph = is_isomorphic(dominating_pair_graph(j), target);
        details.push_back({{"t", t},
                           {"polynomial_equal", same_poly},
                           {"regular_n_minus_a", regular},
                           {"complement_components", comps},
                           {"expected_components", want},
                           {"dominating_pair_graph_is_K_r(a)", pair_graph}});
        out.passed = out.passed && same_poly && regular && fingerprint && pair_graph;
        members.push_back(j);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t k = i + 1; k < members.size(); ++k) {
            if (is_isomorphic(members[i], members[k])) {
                distinct = false;
                out.evidence["isomorphic_pair"] = {i, k};
            }
        }
    }
    out.passed = out.passed && distinct;
    out.evidence["members"] = details;
    out.evidence["pairwise_non_isomorphic"] = distinct;
    out.evidence["class_count"] = members.size();
    out.evidence["expected_class_count"] = r / 2 + 1;
    if (corpus) out.passed = check_class(target, members, *corpus, out.evidence) && out.passed;
    return out;
}

Graph counterexample(const PartitionSpec& spec) {
    const auto pair = first_violation(spec);
    if (!pair) throw Error(spec.to_string() + " satisfies the uniqueness condition; no counterexample exists");
    const auto& a = spec.parts();
    auto [i, j] = *pair;
    return join(h_graph(a[i], a[j] - a[i]), multipartite_or_empty(without_pair(a, i, j)));
}

VerificationOutcome verify_counterexample(const PartitionSpec& spec) {
    const Graph g = complete_multipartite(spec);
    const Graph h = counterexample(spec);
    const Polynomial pg = polynomial(g);
    const Polynomial direct = polynomial(h);

    // Same polynomial through the join formula on the violating pair.
    const auto& a = spec.parts();
    auto [i, j] = *first_violation(spec);
    const Polynomial via_join = polynomial_join(polynomial_bruteforce(h_graph(a[i], a[j] - a[i])),
                                                polynomial(multipartite_or_empty(without_pair(a, i, j))));
    const int chi = chromatic_number(h);
    const bool iso = is_isomorphic(g, h);
    VerificationOutcome out{"counterexample", as_params(spec), false, {}};
    out.passed = direct == pg && via_join == pg && !iso && chi > spec.classes();
    out.evidence["counterexample"] = to_graph6(h);
    out.evidence["polynomial"] = pg.to_string();
    out.evidence["counterexample_polynomial"] = direct.to_string();
    out.evidence["join_formula_polynomial"] = via_join.to_string();
    out.evidence["isomorphic"] = iso;
    out.evidence["chromatic_number"] = chi;
    out.evidence["r"] = spec.classes();
    return out;
}

VerificationOutcome verify_theorem3_sufficiency(const PartitionSpec& spec, std::span<const Graph> corpus) {
    if (!uniqueness_condition(spec)) {
        throw Error(spec.to_string() + " violates the uniqueness condition; sufficiency does not apply");
    }
    VerificationOutcome out = verify_unique_in_corpus(complete_multipartite(spec), corpus);
    out.claim_id = "thm3";
    out.parameters = as_params(spec);
    out.evidence["direction"] = "sufficiency";
    return out;
}

VerificationOutcome verify_theorem3(const PartitionSpec& spec, std::span<const Graph> corpus) {
    if (uniqueness_condition(spec)) return verify_theorem3_sufficiency(spec, corpus);
    const Graph g = complete_multipartite(spec);
    const Graph h = counterexample(spec);
    const ClassReport cls = equivalence_class(g, corpus);
    VerificationOutcome out{"thm3", as_params(spec), false, {}};
    out.passed = cls.size() >= 2 && cls.contains(h);
    out.evidence["direction"] = "necessity";
    out.evidence["counterexample"] = canonical_key(h);
    out.evidence["class_members"] = cls.members;
    out.evidence["corpus_size"] = corpus.size();
    return out;
}

VerificationOutcome conjecture1_empirical(int a, std::span<const Graph> corpus) {
    if (a < 1) throw Error("conj1-empirical requires a >= 1");
    const Graph g = complete_multipartite(PartitionSpec{a, a + 1});
    const Graph h = h_graph(a, 1);
    const ClassReport cls = equivalence_class(g, corpus);
    const auto pair = sorted_keys({g, h});
    VerificationOutcome out{"conj1-empirical", {a}, cls.contains(g) && cls.contains(h), {}};
    out.evidence["class_members"] = cls.members;
    out.evidence["class_size"] = cls.size();
    out.evidence["corpus_size"] = corpus.size();
    out.evidence["matches_conjectured_pair"] = cls.members == pair;
    out.evidence["asserted"] = "membership of K(a,a+1) and H_1(a) only";
    return out;
}

}  // namespace dompoly
