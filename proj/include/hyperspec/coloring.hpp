#pragma once

#include <hyperspec/hypergraph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace hyperspec {

/// One color per vertex: {0,1} for 2-colorings, {0,1,2} for 3-colorings.
using Coloring = std::vector<std::uint8_t>;

/// Smallest edge index whose vertices all share one color.
std::optional<EdgeId> monochromatic_edge(const Hypergraph& h, const Coloring& c);

enum class ColorStatus { Colorable, NotColorable, Unknown };

std::string_view color_status_name(ColorStatus s) noexcept;

struct SolveBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::optional<std::chrono::milliseconds> max_time;
    bool word_kernel = true;  // single-word bit masks when there are at most 64 vertices
};

struct ColorResult {
    ColorStatus status = ColorStatus::Unknown;
    std::optional<Coloring> coloring;  // set iff Colorable
    std::uint64_t nodes = 0;           // branching decisions
    double elapsed_ms = 0.0;
};

/// Exact 2-colorability by backtracking with the not-all-equal unit rule.
/// Vertices are branched in descending degree order (ties by index); the
/// first decision is fixed to color 0 since swapping colors preserves
/// properness. Colorable witnesses are re-verified before returning.
ColorResult find_2_coloring(const Hypergraph& h, const SolveBudget& budget = {});

struct RefuteResult {
    double mono_fraction = 0.0;   // trials with at least one monochromatic edge
    double mean_mono_edges = 0.0; // mean count of monochromatic edges per trial
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Uniform random 2-colorings; deterministic given seed.
RefuteResult random_refute(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed);

/// Uniform random 2-coloring drawn from `seed`.
Coloring random_coloring(std::size_t num_vertices, std::uint64_t seed);

/// Proper 3-coloring of an intersecting uniform hypergraph (k ≥ 2): vertices
/// off edge 0 get color 0, the first vertex of edge 0 gets 1, the rest get 2.
Coloring three_coloring_intersecting(const Hypergraph& h);

/// Monochromatic edge of `product` = compose(outer, inner) under `c`, found
/// without search: each copy of `inner` carries a monochromatic edge (inner is
/// not 2-colorable), the copies' colors 2-color `outer`, and a monochromatic
/// outer edge lifts to a monochromatic product edge. Throws CertificateFailed
/// if either factor turns out to be properly colored.
EdgeId compositional_mono_edge(const Hypergraph& outer, const Hypergraph& inner,
                               const Hypergraph& product, const Coloring& c);

/// Minimum vertex cover of the edges by branch and bound; nullopt when the
/// node budget runs out.
std::optional<std::size_t> cover_number(const Hypergraph& h, std::uint64_t max_nodes = 10'000'000);

}  // namespace hyperspec
