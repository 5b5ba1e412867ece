#pragma once

#include <optional>
#include <span>

#include "dompoly/constructions.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/outcome.hpp"

namespace dompoly {

/// Every pair of parts has max <= 2 or differs by at least 2; exactly the
/// complete multipartite graphs that are D-unique.
bool uniqueness_condition(const PartitionSpec& spec);

/// D(K(a, a+t)) == D(H_t(a)).
VerificationOutcome verify_fact1(int a, int t);

/// K(a,a) and H_0(a) share a polynomial and are isomorphic exactly when
/// a <= 2. With a corpus of order 2a, additionally checks that the class of
/// K(a,a) is exactly those graphs.
VerificationOutcome verify_theorem2_members(int a, std::optional<std::span<const Graph>> corpus = std::nullopt);

/// J_r(a,t) for 0 <= t <= r/2: one shared polynomial, pairwise
/// non-isomorphic, (n-a)-regular, complement component sizes
/// {a x (r-2t), 2a x t}, dominating-pair graph isomorphic to K_r(a).
/// Runs below a = r+2 too, marking the result as outside the proven range.
/// With a corpus of order ra, additionally checks class completeness.
VerificationOutcome verify_theorem4_members(int r, int a,
                                            std::optional<std::span<const Graph>> corpus = std::nullopt);

/// H_k(a_i) joined with the remaining classes, for the lexicographically
/// first pair i < j (sorted parts) violating the uniqueness condition,
/// k = a_j - a_i. Throws when the condition holds.
Graph counterexample(const PartitionSpec& spec);

/// counterexample(spec) has the same polynomial as K(spec) (directly and
/// via the join formula) and is not isomorphic to it, with chromatic number
/// above r as a second certificate.
VerificationOutcome verify_counterexample(const PartitionSpec& spec);

/// Sufficiency direction: the condition holds and no other corpus graph
/// shares K(spec)'s polynomial. Throws if the condition fails or the corpus
/// order differs.
VerificationOutcome verify_theorem3_sufficiency(const PartitionSpec& spec, std::span<const Graph> corpus);

/// Both directions over one corpus of order n: singleton class when the
/// condition holds, otherwise a class of size >= 2 containing
/// counterexample(spec).
VerificationOutcome verify_theorem3(const PartitionSpec& spec, std::span<const Graph> corpus);

/// Reports the class of K(a, a+1) in the corpus. Passes when the class
/// contains both K(a,a+1) and H_1(a); whether it is exactly that pair is
/// recorded but not asserted.
VerificationOutcome conjecture1_empirical(int a, std::span<const Graph> corpus);

}  // namespace dompoly
