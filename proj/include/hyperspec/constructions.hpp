#pragma once

#include <hyperspec/hypergraph.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace hyperspec {

inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

/// Projective plane of order 2 with lines {i, i+1, i+3} mod 7; edge i is the
/// line through i.
Hypergraph fano();

/// Product of a k1-uniform outer and k2-uniform inner hypergraph: one copy of
/// the inner vertex set per outer vertex, vertex (v1, v2) ↦ v1·|V(inner)| + v2.
/// Each outer edge combined with one inner edge per copy gives one edge of size
/// k1·k2. Edges are listed in lexicographic order.
Hypergraph compose(const Hypergraph& outer, const Hypergraph& inner,
                   std::uint64_t size_cap = kDefaultSizeCap);

/// m = 0: one 1-vertex edge; m = 1: fano(); m ≥ 2: compose(fano(), iterated_fano(m−1)).
Hypergraph iterated_fano(unsigned m, std::uint64_t size_cap = kDefaultSizeCap);

/// Edge count of iterated_fano(m), 7^((3^m − 1)/2), saturating at cap + 1.
std::uint64_t iterated_fano_edge_count(unsigned m, std::uint64_t cap);

/// All k-subsets of [n], lexicographic.
Hypergraph complete_subsets(std::size_t n, std::size_t k, std::uint64_t size_cap = kDefaultSizeCap);

/// Vertices are the (k−1)-subsets of [N] in lexicographic order; each k-subset
/// of [N] gives the edge of its k faces.
Hypergraph ramsey_clique_hypergraph(std::size_t n, std::size_t k,
                                    std::uint64_t size_cap = kDefaultSizeCap);

/// m distinct k-subsets of [n] drawn uniformly; deterministic given seed.
Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

/// CLI-facing description of a construction.
struct ConstructionSpec {
    std::string family;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;
    std::uint64_t size_cap = kDefaultSizeCap;
};

/// Builds any family except compose (which needs input hypergraphs).
Hypergraph build(const ConstructionSpec& spec);

/// Lexicographic k-combinations of [n].
std::vector<std::vector<Vertex>> combinations(std::size_t n, std::size_t k);

}  // namespace hyperspec
