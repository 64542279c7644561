#pragma once

#include <hyperspec/hypergraph.hpp>

#include <cstdint>
#include <vector>

namespace hyperspec {

/// Edge as a vertex bitmask; numeric order of masks is colex order of sets.
using EdgeMask = std::uint64_t;

/// Largest vertex count for which canonical forms are computed.
inline constexpr std::size_t kCanonicalMaxVertices = 10;

std::vector<EdgeMask> edge_masks(const Hypergraph& h);
Hypergraph from_masks(std::size_t n, const std::vector<EdgeMask>& masks);

struct CanonicalForm {
    std::size_t n = 0;
    std::vector<EdgeMask> edges;   // ascending
    std::vector<Vertex> labeling;  // labeling[v] = new label of v

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.edges == b.edges;
    }
};

/// Lexicographically smallest ascending mask list over all relabelings of
/// [0, n), by branch-and-bound over labels assigned in increasing order.
CanonicalForm canonical_form(std::size_t n, const std::vector<EdgeMask>& masks);
CanonicalForm canonical_form(const Hypergraph& h);

/// True iff no relabeling gives a smaller ascending mask list.
bool is_canonical(std::size_t n, const std::vector<EdgeMask>& masks);

/// Degree/edge-size signature first, canonical forms when the signatures agree.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperspec
