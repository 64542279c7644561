#include <hyperspec/coloring.hpp>
#include <hyperspec/random.hpp>

#include <array>
#include <numeric>

namespace hyperspec {

std::string_view color_status_name(ColorStatus s) noexcept {
    switch (s) {
        case ColorStatus::Colorable: return "colorable";
        case ColorStatus::NotColorable: return "not_colorable";
        case ColorStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<EdgeId> monochromatic_edge(const Hypergraph& h, const Coloring& c) {
    if (c.size() != h.num_vertices())
        fail(ErrorCode::LengthMismatch, "coloring has " + std::to_string(c.size()) +
                                            " entries for " + std::to_string(h.num_vertices()) +
                                            " vertices");
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        auto edge = h.edge(e);
        const auto first = c[edge[0]];
        bool mono = true;
        for (Vertex v : edge.subspan(1))
            if (c[v] != first) { mono = false; break; }
        if (mono) return e;
    }
    return std::nullopt;
}

namespace {

constexpr std::uint8_t kUnset = 2;

class NaeSolver {
public:
    enum class Outcome { Sat, Unsat, Aborted };

    NaeSolver(const Hypergraph& h, const SolveBudget& budget)
        : h_(h), budget_(budget), incidence_(h.num_vertices()), color_(h.num_vertices(), kUnset),
          counts_(h.num_edges(), {0, 0}), start_(std::chrono::steady_clock::now()) {
        for (EdgeId e = 0; e < h.num_edges(); ++e)
            for (Vertex v : h.edge(e)) incidence_[v].push_back(e);
        order_.resize(h.num_vertices());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [this](Vertex a, Vertex b) {
            return incidence_[a].size() > incidence_[b].size();
        });
    }

    Outcome run() { return search(0, true); }

    std::uint64_t nodes() const { return nodes_; }

    Coloring coloring() const {
        Coloring out(color_.size());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = color_[v] == kUnset ? 0 : color_[v];
        return out;
    }

private:
    bool assign(Vertex v, std::uint8_t c) {
        pending_.clear();
        pending_.emplace_back(v, c);
        while (!pending_.empty()) {
            auto [u, cu] = pending_.back();
            pending_.pop_back();
            if (color_[u] == cu) continue;
            if (color_[u] != kUnset) return false;
            color_[u] = cu;
            trail_.push_back(u);
            for (EdgeId e : incidence_[u]) ++counts_[e][cu];
            for (EdgeId e : incidence_[u]) {
                const auto size = h_.edge_size(e);
                if (counts_[e][cu] == size) return false;
                if (counts_[e][cu] + 1 == size && counts_[e][1 - cu] == 0) {
                    for (Vertex w : h_.edge(e))
                        if (color_[w] == kUnset) {
                            pending_.emplace_back(w, static_cast<std::uint8_t>(1 - cu));
                            break;
                        }
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            Vertex u = trail_.back();
            trail_.pop_back();
            for (EdgeId e : incidence_[u]) --counts_[e][color_[u]];
            color_[u] = kUnset;
        }
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) return true;
        if (budget_.max_time && (nodes_ & 1023) == 0)
            return std::chrono::steady_clock::now() - start_ > *budget_.max_time;
        return false;
    }

    Outcome search(std::size_t pos, bool root) {
        while (pos < order_.size() && color_[order_[pos]] != kUnset) ++pos;
        if (pos == order_.size()) return Outcome::Sat;
        if (out_of_budget()) return Outcome::Aborted;
        ++nodes_;
        const Vertex v = order_[pos];
        const int colors = root ? 1 : 2;
        for (int c = 0; c < colors; ++c) {
            const std::size_t mark = trail_.size();
            if (assign(v, static_cast<std::uint8_t>(c))) {
                auto outcome = search(pos + 1, false);
                if (outcome != Outcome::Unsat) return outcome;
            }
            undo(mark);
        }
        return Outcome::Unsat;
    }

    const Hypergraph& h_;
    SolveBudget budget_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::uint8_t> color_;
    std::vector<std::array<std::uint32_t, 2>> counts_;
    std::vector<Vertex> order_;
    std::vector<Vertex> trail_;
    std::vector<std::pair<Vertex, std::uint8_t>> pending_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

/// Same search as NaeSolver for at most 64 vertices, with each color class
/// and each edge held in one machine word.
class MaskSolver {
public:
    using Outcome = NaeSolver::Outcome;

    MaskSolver(const Hypergraph& h, const SolveBudget& budget)
        : budget_(budget), n_(h.num_vertices()), incident_(h.num_vertices()),
          start_(std::chrono::steady_clock::now()) {
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            const Word bits = h.edge_bits(e)[0];
            for (Vertex v : h.edge(e)) incident_[v].push_back(bits);
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [this](Vertex a, Vertex b) {
            return incident_[a].size() > incident_[b].size();
        });
    }

    Outcome run() { return search(0, true); }
    std::uint64_t nodes() const { return nodes_; }

    Coloring coloring() const {
        Coloring out(n_, 0);
        for (std::size_t v = 0; v < n_; ++v) out[v] = (mask_[1] >> v) & 1U;
        return out;
    }

private:
    bool assign(Vertex v, unsigned c) {
        pending_.clear();
        pending_.emplace_back(v, c);
        while (!pending_.empty()) {
            auto [u, cu] = pending_.back();
            pending_.pop_back();
            const Word bit = Word{1} << u;
            if (mask_[cu] & bit) continue;
            if (mask_[1 - cu] & bit) return false;
            mask_[cu] |= bit;
            const Word same = mask_[cu], other = mask_[1 - cu];
            for (Word e : incident_[u]) {
                const Word rest = e & ~same;
                if (rest == 0) return false;
                if ((rest & (rest - 1)) == 0 && (e & other) == 0)
                    pending_.emplace_back(static_cast<Vertex>(std::countr_zero(rest)), 1 - cu);
            }
        }
        return true;
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) return true;
        if (budget_.max_time && (nodes_ & 1023) == 0)
            return std::chrono::steady_clock::now() - start_ > *budget_.max_time;
        return false;
    }

    Outcome search(std::size_t pos, bool root) {
        const Word colored = mask_[0] | mask_[1];
        while (pos < n_ && (colored >> order_[pos] & 1U)) ++pos;
        if (pos == n_) return Outcome::Sat;
        if (out_of_budget()) return Outcome::Aborted;
        ++nodes_;
        const Vertex v = order_[pos];
        const int colors = root ? 1 : 2;
        for (int c = 0; c < colors; ++c) {
            const std::array<Word, 2> saved = mask_;
            if (assign(v, static_cast<unsigned>(c))) {
                auto outcome = search(pos + 1, false);
                if (outcome != Outcome::Unsat) return outcome;
            }
            mask_ = saved;
        }
        return Outcome::Unsat;
    }

    SolveBudget budget_;
    std::size_t n_;
    std::vector<std::vector<Word>> incident_;
    std::vector<Vertex> order_;
    std::array<Word, 2> mask_{0, 0};
    std::vector<std::pair<Vertex, unsigned>> pending_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

ColorResult find_2_coloring(const Hypergraph& h, const SolveBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    ColorResult result;
    auto finish = [&] {
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    };

    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (h.edge_size(e) == 1) {
            result.status = ColorStatus::NotColorable;
            return finish();
        }

    NaeSolver::Outcome outcome;
    Coloring c;
    if (h.num_vertices() <= 64 && budget.word_kernel) {
        MaskSolver solver(h, budget);
        outcome = solver.run();
        result.nodes = solver.nodes();
        if (outcome == NaeSolver::Outcome::Sat) c = solver.coloring();
    } else {
        NaeSolver solver(h, budget);
        outcome = solver.run();
        result.nodes = solver.nodes();
        if (outcome == NaeSolver::Outcome::Sat) c = solver.coloring();
    }
    switch (outcome) {
        case NaeSolver::Outcome::Sat: {
            if (auto bad = monochromatic_edge(h, c))
                fail(ErrorCode::CertificateFailed,
                     "solver produced a coloring with monochromatic edge " + std::to_string(*bad));
            result.status = ColorStatus::Colorable;
            result.coloring = std::move(c);
            break;
        }
        case NaeSolver::Outcome::Unsat: result.status = ColorStatus::NotColorable; break;
        case NaeSolver::Outcome::Aborted: result.status = ColorStatus::Unknown; break;
    }
    return finish();
}

Coloring random_coloring(std::size_t num_vertices, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "random_coloring"));
    Coloring c(num_vertices);
    std::uint64_t bits = 0;
    for (std::size_t v = 0; v < num_vertices; ++v) {
        if (v % 64 == 0) bits = rng.next();
        c[v] = static_cast<std::uint8_t>((bits >> (v % 64)) & 1U);
    }
    return c;
}

RefuteResult random_refute(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) fail(ErrorCode::InvalidArgument, "random_refute needs at least one trial");
    Rng rng(derive_seed(seed, "random_refute"));
    const std::size_t words = h.words_per_edge();
    std::vector<Word> mask(words);
    std::uint64_t hit = 0;
    std::uint64_t total_mono = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (auto& w : mask) w = rng.next();
        std::uint64_t mono = 0;
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            auto row = h.edge_bits(e);
            bool all_one = true, all_zero = true;
            for (std::size_t w = 0; w < words; ++w) {
                const Word on = row[w] & mask[w];
                if (on != row[w]) all_one = false;
                if (on != 0) all_zero = false;
            }
            if (all_one || all_zero) ++mono;
        }
        if (mono > 0) ++hit;
        total_mono += mono;
    }
    RefuteResult out;
    out.trials = trials;
    out.seed = seed;
    out.mono_fraction = static_cast<double>(hit) / static_cast<double>(trials);
    out.mean_mono_edges = static_cast<double>(total_mono) / static_cast<double>(trials);
    return out;
}

Coloring three_coloring_intersecting(const Hypergraph& h) {
    const std::size_t k = require_uniform(h);
    if (k < 2) fail(ErrorCode::InvalidArgument, "a 1-uniform hypergraph has no proper coloring");
    if (!is_intersecting(h)) fail(ErrorCode::NotIntersecting, "hypergraph is not intersecting");
    Coloring c(h.num_vertices(), 0);
    auto anchor = h.edge(0);
    c[anchor[0]] = 1;
    for (Vertex v : anchor.subspan(1)) c[v] = 2;
    if (auto bad = monochromatic_edge(h, c))
        fail(ErrorCode::CertificateFailed, "3-coloring left edge " + std::to_string(*bad) + " monochromatic");
    return c;
}

EdgeId compositional_mono_edge(const Hypergraph& outer, const Hypergraph& inner,
                               const Hypergraph& product, const Coloring& c) {
    const std::size_t n2 = inner.num_vertices();
    if (product.num_vertices() != outer.num_vertices() * n2)
        fail(ErrorCode::InvalidArgument, "product vertex count does not match outer × inner");
    if (c.size() != product.num_vertices())
        fail(ErrorCode::LengthMismatch, "coloring length does not match the product");

    std::vector<EdgeId> inner_choice(outer.num_vertices());
    Coloring induced(outer.num_vertices());
    Coloring local(n2);
    for (Vertex copy = 0; copy < outer.num_vertices(); ++copy) {
        std::copy_n(c.begin() + static_cast<std::ptrdiff_t>(copy * n2), n2, local.begin());
        auto mono = monochromatic_edge(inner, local);
        if (!mono)
            fail(ErrorCode::CertificateFailed, "copy " + std::to_string(copy) + " of the inner hypergraph is properly colored");
        inner_choice[copy] = *mono;
        induced[copy] = local[inner.edge(*mono)[0]];
    }
    auto outer_mono = monochromatic_edge(outer, induced);
    if (!outer_mono) fail(ErrorCode::CertificateFailed, "induced outer coloring is proper");

    std::vector<Vertex> lifted;
    for (Vertex copy : outer.edge(*outer_mono))
        for (Vertex v : inner.edge(inner_choice[copy])) lifted.push_back(static_cast<Vertex>(copy * n2 + v));
    auto id = product.find_edge(lifted);
    if (!id) fail(ErrorCode::CertificateFailed, "lifted edge is not an edge of the product");
    for (Vertex v : product.edge(*id))
        if (c[v] != c[lifted[0]]) fail(ErrorCode::CertificateFailed, "lifted edge is not monochromatic");
    return *id;
}

namespace {

class CoverSearch {
public:
    CoverSearch(const Hypergraph& h, std::uint64_t max_nodes)
        : h_(h), words_(h.words_per_edge()), max_nodes_(max_nodes) {}

    std::optional<std::size_t> run() {
        best_ = greedy_cover();
        std::vector<Word> cover(words_, 0), excluded(words_, 0);
        recurse(cover, excluded, 0);
        if (aborted_) return std::nullopt;
        return best_;
    }

private:
    std::size_t greedy_cover() const {
        std::vector<bool> covered(h_.num_edges(), false);
        std::size_t left = h_.num_edges(), size = 0;
        while (left > 0) {
            std::vector<std::size_t> hits(h_.num_vertices(), 0);
            for (EdgeId e = 0; e < h_.num_edges(); ++e)
                if (!covered[e])
                    for (Vertex v : h_.edge(e)) ++hits[v];
            auto v = static_cast<Vertex>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            for (EdgeId e = 0; e < h_.num_edges(); ++e)
                if (!covered[e] && h_.edge_contains(e, v)) { covered[e] = true; --left; }
            ++size;
        }
        return size;
    }

    void recurse(std::vector<Word>& cover, std::vector<Word> excluded, std::size_t size) {
        if (aborted_) return;
        if (++nodes_ > max_nodes_) { aborted_ = true; return; }

        // Branch on the uncovered edge with the fewest free vertices; a
        // greedy packing of pairwise disjoint uncovered edges bounds below.
        std::optional<EdgeId> pick;
        std::size_t pick_free = SIZE_MAX;
        std::vector<Word> packed(words_, 0);
        std::size_t packing = 0;
        for (EdgeId e = 0; e < h_.num_edges(); ++e) {
            auto row = h_.edge_bits(e);
            if (!bits_disjoint(row, cover)) continue;
            std::size_t free = 0;
            for (std::size_t w = 0; w < words_; ++w) free += std::popcount(row[w] & ~excluded[w]);
            if (free == 0) return;
            if (free < pick_free) { pick = e; pick_free = free; }
            if (bits_disjoint(row, packed)) {
                ++packing;
                for (std::size_t w = 0; w < words_; ++w) packed[w] |= row[w];
            }
        }
        if (!pick) { best_ = std::min(best_, size); return; }
        if (size + packing >= best_) return;

        for (Vertex v : h_.edge(*pick)) {
            const Word bit = Word{1} << (v % 64);
            if (excluded[v / 64] & bit) continue;
            cover[v / 64] |= bit;
            recurse(cover, excluded, size + 1);
            cover[v / 64] &= ~bit;
            excluded[v / 64] |= bit;
            if (aborted_) return;
        }
    }

    const Hypergraph& h_;
    std::size_t words_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::size_t best_ = 0;
};

}  // namespace

std::optional<std::size_t> cover_number(const Hypergraph& h, std::uint64_t max_nodes) {
    if (h.num_edges() == 0) return 0;
    return CoverSearch(h, max_nodes).run();
}

}  // namespace hyperspec
