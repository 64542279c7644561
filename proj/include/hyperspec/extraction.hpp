#pragma once

#include <hyperspec/coloring.hpp>
#include <hyperspec/hypergraph.hpp>
#include <hyperspec/lemmas.hpp>
#include <hyperspec/random.hpp>
#include <hyperspec/simple_graph.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

/// Tuning constants for the extraction machinery.
///
/// The defaults are desk-scale values. paper_constants() gives t = 2⌈√k⌉,
/// x = 10t, d = 1/(8k) and a per-level schedule exponent of 25t, which are
/// only meaningful for very large k; at small k they make most steps fail,
/// and the trace records where.
struct ExtractionParams {
    std::size_t t = 4;
    std::size_t x = 4;
    std::optional<Rational> d;  // unset: measured density of the threshold graph
    std::size_t schedule_exponent = 0;  // m_i = |E| / k^(exponent·(i−1)); 0 disables
    std::uint64_t seed = kDefaultSeed;
    bool paper_constants = false;

    std::size_t drc_retries = 4000;      // DRC sampling attempts per round
    std::size_t drc_rounds = 8;          // DRC rounds before giving up on a subset X
    std::uint64_t search_nodes = 200'000;// t-subset search nodes per round
    std::uint64_t exhaustive_limit = 1'000'000;
    std::uint64_t samples = 100'000;
    std::size_t max_levels = 64;
    std::optional<std::chrono::milliseconds> budget;

    static ExtractionParams paper(std::size_t k, std::uint64_t seed = kDefaultSeed);
};

struct LambdaPair {
    EdgeIndexSet x;
    EdgeIndexSet y;
    std::size_t lambda = 0;
    bool validated = false;
};

/// Graph on the edges of A (local index j ↔ A[j]); adjacent iff the two
/// edges meet in at least `lambda` vertices.
SimpleGraph threshold_graph(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda);

/// Share of t-subsets of A that are λ-small: exact count when C(|A|, t) is
/// at most `exhaustive_limit`, otherwise `samples` uniform t-subsets.
struct SmallFraction {
    bool exhaustive = false;
    std::uint64_t small = 0;
    std::uint64_t total = 0;
    Rational fraction;
};

SmallFraction lambda_small_fraction(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda,
                                    std::size_t t, std::uint64_t seed,
                                    std::uint64_t exhaustive_limit = 1'000'000,
                                    std::uint64_t samples = 100'000);

struct DrcHypotheses {
    bool positive = false;      // d > 0 and 1 ≤ t ≤ n
    bool vertex_bound = false;  // m > 4·t·d^(−t)·n
    bool edge_bound = false;    // |E(G)| ≥ d·m²/2
    bool hold() const { return positive && vertex_bound && edge_bound; }
};

DrcHypotheses drc_hypotheses(const SimpleGraph& g, const Rational& d, std::size_t t, std::size_t n);

struct DrcConfig {
    std::size_t t = 2;
    std::size_t n = 1;
    std::uint64_t seed = kDefaultSeed;
    std::size_t retries = 64;
    std::uint64_t exhaustive_limit = 1'000'000;
    std::uint64_t samples = 100'000;
};

/// Accepted DRC subset. For exhaustive checks `bad_fraction` is exact; for
/// sampled checks it is the point estimate and acceptance used
/// `bad_fraction_upper`, a Wilson score bound at z = 3.
struct DrcOutcome {
    std::vector<std::uint32_t> u;  // graph vertices, ascending
    std::size_t attempts = 0;
    bool exhaustive = false;
    bool cleaned = false;          // bad t-subsets removed by vertex deletion
    std::uint64_t bad_subsets = 0; // before any cleanup
    std::uint64_t subsets_checked = 0;
    Rational bad_fraction;
    double bad_fraction_upper = 0.0;
};

inline constexpr double kWilsonZ = 3.0;

/// Sampling core: draws t vertices with repetition, takes their common
/// neighbourhood U and accepts when |U| > 2n and fewer than a (2t)^(−t)
/// share of t-subsets of U have under n common neighbours. When the exact
/// count is feasible and too high, deleting one vertex from every bad
/// t-subset is tried before retrying. Does not check the lemma's hypotheses.
std::optional<DrcOutcome> run_drc(const SimpleGraph& g, const DrcConfig& config);

/// run_drc after checking the hypotheses (HypothesesViolated otherwise).
std::optional<DrcOutcome> dependent_random_choice(const SimpleGraph& g, const Rational& d,
                                                  std::size_t t, std::size_t n,
                                                  std::uint64_t seed, std::size_t retries = 64);

struct RamseyPairResult {
    LambdaPair pair;
    std::vector<std::size_t> pool_sizes;       // pool size after each pull-out
    std::vector<std::size_t> pulled_colors;    // majority size of each pull-out
};

/// Repeatedly pulls a random edge out of the pool and keeps only the largest
/// bucket of the pool by intersection size with it (smaller size on ties).
/// Stops once t pulled edges share a majority size λ: X is those edges and Y
/// the remaining pool, so every pair inside X and across X × Y meets in
/// exactly λ vertices. PoolExhausted if the pool empties first.
RamseyPairResult find_lambda_pair_ramsey(const Hypergraph& h, const EdgeIndexSet& a,
                                         std::size_t t, std::uint64_t seed);

struct DrcPairResult {
    LambdaPair pair;
    SmallFraction precondition;
    Rational d;
    std::size_t n = 0;
    DrcHypotheses hypotheses;
    DrcOutcome drc;
    std::size_t rounds = 0;
    std::uint64_t search_nodes = 0;
};

/// λ-pair through dependent random choice on the threshold graph of A.
/// Requires at most half of the t-subsets of A to be λ-small
/// (PreconditionViolated). n is m·d^t/(5t), raised to t when smaller.
/// Y is the full common neighbourhood of X inside A.
DrcPairResult find_lambda_pair_drc(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda,
                                   const ExtractionParams& params);

struct Triple {
    EdgeId a;
    EdgeId b;
    VertexSet x;  // x smallest vertices of (A ∩ U) ∖ B
};

struct TripleFamily {
    EdgeId anchor = 0;
    std::size_t x = 0;
    std::vector<Triple> triples;
    bool maximal = false;              // rescan found no admissible unused pair
    std::uint64_t rescan_pairs = 0;

    EdgeIndexSet used() const;
};

/// Greedy maximal family over candidates Y: pairs (A, B) of unused edges are
/// scanned in index order and admitted when |(A ∩ U) ∖ B| ≥ x.
TripleFamily build_triple_family(const Hypergraph& h, const EdgeIndexSet& y, EdgeId anchor,
                                 std::size_t x);

enum class Branch { Initial, SameIntersection, SpreadOut };
std::string_view branch_name(Branch b) noexcept;

/// Numbers behind the spread case: the averaging inequality on S and T with
/// the common set W, and the split identity
///   C(h,2)λ_S + C(h,2)λ_T + h²λ_{S,T} = C(2h,2)λ_{S∪T},  h = |S| = |T|.
struct SpreadCertificate {
    EdgeIndexSet s;
    EdgeIndexSet t;
    VertexSet w;
    InequalityReport averaging;
    Rational lambda_s;
    Rational lambda_t;
    Rational lambda_st;
    Rational lambda_union;
    bool identity_holds = false;
    double separation_target = 0.0;  // λ − 2√k
    bool separated = false;          // λ_{S∪T} < separation_target
};

struct IncrementLevel {
    std::size_t lambda = 0;
    Branch branch = Branch::Initial;  // how this level's edge set was obtained
    std::size_t a_size = 0;
    std::string extractor;            // "drc" or "ramsey"
    std::vector<std::string> extractor_failures;
    LambdaPair pair;
    LambdaPairCheck check;
    double schedule_log2 = 0.0;       // log2 m_i when a schedule is set
    bool schedule_degenerate = false; // m_i < t

    // Continuation towards the next level.
    std::optional<Branch> next_branch;
    std::size_t family_size = 0;
    VertexSet seed_set;
    VertexSet grown_set;
    std::size_t greedy_steps = 0;
    std::size_t next_size = 0;
    std::optional<SpreadCertificate> spread;

    double elapsed_ms = 0.0;
};

struct IncrementTrace {
    std::size_t k = 0;
    std::vector<std::size_t> spectrum;
    ExtractionParams params;
    std::vector<IncrementLevel> levels;
    std::string stop_reason;  // "no_progress" or "budget_exhausted"
    std::string stop_detail;
    std::optional<Coloring> witness;  // proper 2-coloring found on the way
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
};

/// Runs the density-increment loop: extract a λ-pair from the current edge
/// set, build the triple family over Y around an anchor edge of X, take the
/// same-intersection or spread-out continuation, and grow a vertex set with
/// greedy_increase whose containing edges pairwise meet in more than λ
/// vertices. That edge set starts the next level at the largest spectrum
/// value for which at most half its t-subsets are small.
///
/// The spread-out case cannot end in a contradiction here; its inequality is
/// recorded and the run continues from the common vertex set of the largest
/// triple group.
IncrementTrace density_increment_run(const Hypergraph& h, const ExtractionParams& params);

}  // namespace hyperspec
