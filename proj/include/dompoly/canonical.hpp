#pragma once

#include <string>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

/// A canonical relabelling: graph == g.relabel(labeling) and graph is the
/// same for every graph isomorphic to g.
struct CanonicalForm {
    Graph graph;
    std::vector<int> labeling;
};

/// Individualization-refinement search: equitable partition refinement by
/// neighbor counts, branching on the first smallest non-singleton cell,
/// pruned with automorphisms discovered at equal leaves. Practical for the
/// desk-scale orders this library targets (n <= 16, plus highly symmetric
/// constructions up to n = 24).
CanonicalForm canonical_form(const Graph& g);

/// Stable string key of the isomorphism class: graph6 of the canonical
/// graph (n <= 62), a hex row dump otherwise.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace dompoly
