#pragma once

#include <hyperspec/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hyperspec {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Sorted, duplicate-free list of indices. Base for VertexSet and EdgeIndexSet.
template <typename Tag>
class IndexSet {
public:
    using value_type = std::uint32_t;

    IndexSet() = default;
    IndexSet(std::initializer_list<value_type> items) : IndexSet(std::vector<value_type>(items)) {}
    explicit IndexSet(std::vector<value_type> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }
    value_type operator[](std::size_t i) const { return items_[i]; }
    const std::vector<value_type>& values() const noexcept { return items_; }

    bool contains(value_type v) const {
        return std::binary_search(items_.begin(), items_.end(), v);
    }

    bool disjoint_from(const IndexSet& other) const {
        auto a = items_.begin();
        auto b = other.items_.begin();
        while (a != items_.end() && b != other.items_.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    IndexSet united(const IndexSet& other) const {
        std::vector<value_type> out;
        std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                       std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    IndexSet minus(const IndexSet& other) const {
        std::vector<value_type> out;
        std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                            other.items_.end(), std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<value_type> items_;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IndexSet<VertexTag>;
using EdgeIndexSet = IndexSet<EdgeTag>;

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

/// True iff every bit of `sub` is set in `super`.
inline bool bits_subset(std::span<const Word> sub, std::span<const Word> super) {
    for (std::size_t w = 0; w < sub.size(); ++w)
        if ((sub[w] & ~super[w]) != 0) return false;
    return true;
}

inline bool bits_disjoint(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if ((a[w] & b[w]) != 0) return false;
    return true;
}

/// A finite simple hypergraph: dense 0-based vertices and an ordered list of
/// distinct nonempty edges. Each edge is kept both as a sorted vertex list and
/// as a bit row so that |e ∩ f| is a popcount over machine words.
///
/// Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and builds. Vertex lists are normalised to sorted order;
    /// repeated vertices inside one edge collapse.
    Hypergraph(std::size_t num_vertices, std::vector<std::vector<Vertex>> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t words_per_edge() const noexcept { return words_; }

    std::span<const Vertex> edge(EdgeId e) const {
        return {vertices_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
    }
    std::size_t edge_size(EdgeId e) const { return offsets_[e + 1] - offsets_[e]; }
    std::span<const Word> edge_bits(EdgeId e) const {
        return {bits_.data() + static_cast<std::size_t>(e) * words_, words_};
    }
    bool edge_contains(EdgeId e, Vertex v) const {
        return (bits_[static_cast<std::size_t>(e) * words_ + v / 64] >> (v % 64)) & 1U;
    }

    std::size_t intersection_size(EdgeId a, EdgeId b) const {
        return and_popcount(edge_bits(a), edge_bits(b));
    }

    /// Index of the edge equal to `vertices` as a set, if any.
    std::optional<EdgeId> find_edge(std::span<const Vertex> vertices) const;

    std::vector<std::size_t> degrees() const;

    std::vector<std::vector<Vertex>> edge_lists() const;

    /// Bit row for an arbitrary vertex set over this hypergraph's vertex range.
    std::vector<Word> bits_of(const VertexSet& set) const;

    void check_edge_set(const EdgeIndexSet& set) const;
    void check_vertex_set(const VertexSet& set) const;

private:
    std::size_t num_vertices_ = 0;
    std::size_t words_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> offsets_;
    std::vector<Word> bits_;
    std::vector<EdgeId> by_bits_;  // edge ids sorted by bit row, for find_edge
};

/// Sorted distinct pairwise intersection sizes with pair multiplicities.
struct Spectrum {
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> multiplicities;

    std::size_t r() const noexcept { return sizes.size(); }
    bool contains(std::size_t s) const {
        return std::binary_search(sizes.begin(), sizes.end(), s);
    }
    std::optional<std::uint64_t> multiplicity(std::size_t s) const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// k if every edge has exactly k vertices.
std::optional<std::size_t> is_uniform(const Hypergraph& h);

/// Like is_uniform but throws NonUniform / EmptyHypergraph.
std::size_t require_uniform(const Hypergraph& h);

bool is_intersecting(const Hypergraph& h);

/// Exact pair scan over all C(m,2) edge pairs. `threads` = 0 picks the
/// configured default; the result does not depend on the thread count.
Spectrum intersection_spectrum(const Hypergraph& h, unsigned threads = 0);

/// Default worker count for parallel scans (HYPERSPEC_THREADS or hardware).
unsigned default_threads();
void set_default_threads(unsigned threads);

/// Average intersection size over unordered pairs of S.
Rational lambda_within(const Hypergraph& h, const EdgeIndexSet& s);

/// Average intersection size over S × T for disjoint S, T.
Rational lambda_across(const Hypergraph& h, const EdgeIndexSet& s, const EdgeIndexSet& t);

/// All edges containing X; X = ∅ gives every edge.
EdgeIndexSet edges_containing(const Hypergraph& h, const VertexSet& x);

/// Number of edges containing the vertex set encoded by `bits`.
std::size_t count_edges_containing(const Hypergraph& h, std::span<const Word> bits);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Binomial coefficient saturating at `cap` (returns cap + 1 when larger).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace hyperspec
