#pragma once

#include <hyperspec/hypergraph.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hyperspec {

/// Exact lhs ≥ rhs comparison.
struct InequalityReport {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    Rational slack;  // lhs − rhs
};

struct PairInequalityReport : InequalityReport {
    // The same two sides evaluated through vertex degrees a_x, b_x:
    // Σ C(a_x,2) + Σ C(b_x,2)  versus  Σ a_x·b_x − Σ (a_x + b_x)/2.
    Rational degree_lhs;
    Rational degree_rhs;
    bool routes_agree = false;
};

/// For a k-uniform A and k′-uniform B with equal vertex and edge counts ℓ:
///   Σ_{pairs of A} |A∩A′| + Σ_{pairs of B} |B∩B′|  ≥  Σ_{A,B} |A∩B| − ℓ(k+k′)/2
/// where the cross sum runs over all ordered (A, B) including coincident sets.
PairInequalityReport check_pair_inequality(const Hypergraph& a, const Hypergraph& b);

/// For disjoint S, T of ℓ ≥ 2 edges each in a k-uniform H and a set W of x
/// vertices lying in every edge of S and in no edge of T:
///   (λ_S + λ_T)/2 ≥ λ_{S,T} + x/2 − k/(ℓ−1).
InequalityReport check_average_lambda(const Hypergraph& h, const EdgeIndexSet& s,
                                      const EdgeIndexSet& t, const VertexSet& w);

struct GreedyStep {
    EdgeId disjoint_edge;      // edge avoiding the current set
    Vertex added;              // vertex of that edge joined to the set
    std::uint64_t count_before;// edges containing the set before the step
    std::uint64_t count_after;
};

struct GreedyResult {
    VertexSet final_set;
    std::uint64_t base_count = 0;   // edges containing the starting set
    std::uint64_t final_count = 0;  // edges containing final_set
    Rational fraction;              // final_count / base_count
    std::vector<GreedyStep> steps;
};

/// Grows X by `steps` vertices. Each step takes the smallest-index edge Y
/// disjoint from the current set and adds the vertex of Y lying in the most
/// edges that contain the current set (smallest index on ties). On a
/// k-uniform intersecting H each step keeps at least a 1/k share.
///
/// Throws NoDisjointEdge when every edge meets the current set; the error
/// carries the proper 2-coloring (current set → 1, rest → 0) as witness.
GreedyResult greedy_increase(const Hypergraph& h, const VertexSet& x, std::size_t steps);

/// Every pair of edges in S meets in fewer than `lambda` vertices.
bool is_lambda_small(const Hypergraph& h, const EdgeIndexSet& s, std::size_t lambda);

struct LambdaPairCheck {
    bool valid = false;
    bool disjoint = false;
    bool size_ok = false;    // |X| = t
    bool within_ok = false;  // pairs inside X meet in ≤ λ
    bool cross_ok = false;   // X × Y pairs meet in ≥ λ
    std::size_t x_size = 0;
    std::size_t y_size = 0;
    std::optional<std::pair<EdgeId, EdgeId>> within_violation;
    std::optional<std::pair<EdgeId, EdgeId>> cross_violation;
};

/// Checks the three λ-pair conditions. The lower bound on |Y| is reported
/// (y_size) but not enforced.
LambdaPairCheck validate_lambda_pair(const Hypergraph& h, const EdgeIndexSet& x,
                                     const EdgeIndexSet& y, std::size_t lambda, std::size_t t);

}  // namespace hyperspec
