#pragma once

#include <hyperspec/hypergraph.hpp>
#include <hyperspec/random.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

/// Random (A, B) with shared vertex count and edge count, for the pair inequality.
struct PairInstance {
    Hypergraph a;
    Hypergraph b;
};
PairInstance pair_instance(std::uint64_t seed, std::uint64_t index);

/// k-uniform H with two disjoint edge sets S, T of equal size ℓ ≥ 2 and a
/// planted set W of x ∈ [0, 5] vertices in every edge of S and none of T.
struct PlantedInstance {
    Hypergraph h;
    EdgeIndexSet s;
    EdgeIndexSet t;
    VertexSet w;
};
PlantedInstance planted_instance(std::uint64_t seed, std::uint64_t index);

/// Random k-uniform hypergraph on 2k − 1 vertices with 2^(k−1) − 1 edges.
Hypergraph sparse_uniform_instance(std::size_t k, std::uint64_t seed, std::uint64_t index);

struct SuiteSummary {
    std::string name;
    std::uint64_t seed = 0;
    std::uint64_t instances = 0;
    std::uint64_t passed = 0;
    std::optional<Rational> worst_slack;  // smallest lhs − rhs seen
    std::vector<std::string> failures;    // first few failing instances
    double elapsed_ms = 0.0;

    bool ok() const { return passed == instances; }
};

SuiteSummary pair_inequality_suite(std::uint64_t instances, std::uint64_t seed);
SuiteSummary average_lambda_suite(std::uint64_t instances, std::uint64_t seed);
/// Solver returns Colorable on every sparse_uniform_instance(k, ...).
SuiteSummary sparse_coloring_suite(std::size_t k, std::uint64_t instances, std::uint64_t seed);

}  // namespace hyperspec
