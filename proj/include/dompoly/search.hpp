#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/outcome.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Largest order enumerate_graphs generates from labeled graphs.
inline constexpr int kEnumerateMaxOrder = 7;
/// Largest order exhaustive_corpus builds by vertex extension.
inline constexpr int kExtensionMaxOrder = 9;

/// A D-equivalence class within a corpus: members are canonical graph6
/// strings, sorted and pairwise distinct.
struct ClassReport {
    Polynomial polynomial;
    std::vector<std::string> members;

    std::size_t size() const { return members.size(); }
    bool contains(const Graph& g) const;
};

/// Every isomorphism class of one corpus bucketed by domination polynomial.
/// Classes are sorted by polynomial; total_graphs counts distinct
/// isomorphism classes seen.
struct Atlas {
    int order = 0;
    std::size_t total_graphs = 0;
    std::vector<ClassReport> classes;

    /// nullptr when no corpus graph has polynomial p.
    const ClassReport* find(const Polynomial& p) const;
};

/// One canonical representative per isomorphism class of order-n graphs,
/// found by scanning all 2^C(n,2) labeled graphs (those with
/// non-decreasing degree sequence) and deduplicating by canonical form.
/// Sorted by canonical graph6. Throws BudgetError for n > 7.
std::vector<Graph> enumerate_graphs(int n, unsigned threads = 0);

/// Given one representative of every isomorphism class of order n,
/// returns one of every class of order n+1: each representative gains a
/// vertex of maximum degree in every possible way, then canonical dedupe.
std::vector<Graph> extend_by_vertex(std::span<const Graph> reps, unsigned threads = 0);

/// All isomorphism classes of order n (n <= 9) by repeated vertex
/// extension from the empty graph.
std::vector<Graph> exhaustive_corpus(int n, unsigned threads = 0);

/// Reads a whole graph6 file (single order) into memory.
std::vector<Graph> ingest_graph6(const std::string& path);

/// Polynomial per graph is computed in parallel; the merge is keyed and
/// sorted, so the atlas does not depend on corpus order or thread count.
Atlas build_atlas(std::span<const Graph> corpus, unsigned threads = 0);

/// Corpus members sharing g's polynomial, plus g's own class. Throws if
/// the corpus order differs from g's.
ClassReport equivalence_class(const Graph& g, std::span<const Graph> corpus);

/// Passes iff g's class in the corpus has exactly one member; otherwise
/// the evidence lists every other member as graph6.
VerificationOutcome verify_unique_in_corpus(const Graph& g, std::span<const Graph> corpus);

}  // namespace dompoly
