#pragma once

#include <hyperspec/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace hyperspec {

/// Undirected loopless graph with bit-row adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_, 0) {}

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    std::uint64_t num_edges() const noexcept { return edges_; }

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const {
        return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::size_t degree(std::size_t u) const;

    std::span<const Word> row(std::size_t u) const { return {rows_.data() + u * words_, words_}; }

    /// Bit row of vertices adjacent to every vertex in `set`; all vertices
    /// when `set` is empty.
    std::vector<Word> common_neighbors(std::span<const std::uint32_t> set) const;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> rows_;
    std::uint64_t edges_ = 0;
};

/// Erdős–Rényi G(n, p); deterministic given seed.
SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed);

std::size_t popcount_row(std::span<const Word> row);
std::vector<std::uint32_t> row_members(std::span<const Word> row);

}  // namespace hyperspec
