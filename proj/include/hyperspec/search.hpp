#pragma once

#include <hyperspec/canonical.hpp>
#include <hyperspec/hypergraph.hpp>
#include <hyperspec/random.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;   // canonical families visited
    std::optional<std::chrono::milliseconds> max_time;
    std::uint64_t local_iterations = 20'000;  // local-search moves after the enumeration stops
    std::uint64_t solver_nodes = 1'000'000;   // per 2-colorability check
};

struct SearchReport {
    std::size_t k = 0;
    std::size_t max_vertices = 0;
    std::uint64_t edge_bound = 0;  // C(max_vertices, k)
    std::uint64_t seed = 0;

    std::optional<std::size_t> best_spectrum_size;
    std::optional<Hypergraph> witness;
    std::vector<std::size_t> witness_spectrum;
    std::optional<std::size_t> m_tilde_estimate;

    bool exhaustive = false;
    bool budget_exhausted = false;
    std::string mode;  // "exhaustive", "local" or "exhaustive+local"
    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;        // extensions tested for canonicity
    std::uint64_t non_colorable = 0;     // canonical non-2-colorable families met
    std::uint64_t unknown = 0;           // solver budget ran out
    std::uint64_t local_moves = 0;
    double elapsed_ms = 0.0;
};

/// Minimum spectrum size over intersecting k-uniform non-2-colorable
/// hypergraphs on at most `max_vertices` vertices.
///
/// Up to kCanonicalMaxVertices vertices the families are generated in
/// canonical form, each extension adding an edge above the current largest
/// one (colex order), so every isomorphism class is met exactly once. A
/// non-2-colorable family is not extended: its supersets are no better in
/// spectrum size or edge count. If the budget stops the enumeration, or the
/// vertex bound is larger, randomized local search continues from
/// random_uniform starts and the report is not exhaustive.
///
/// Best witnesses are ranked by (spectrum size, edge count, canonical form).
SearchReport min_spectrum_search(std::size_t k, std::size_t max_vertices, const SearchBudget& budget,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace hyperspec
