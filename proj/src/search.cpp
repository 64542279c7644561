#include <hyperspec/coloring.hpp>
#include <hyperspec/constructions.hpp>
#include <hyperspec/search.hpp>

#include <bitset>
#include <tuple>

namespace hyperspec {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
    std::size_t spectrum_size = 0;
    std::size_t edges = 0;
    std::vector<EdgeMask> form;
    std::size_t n = 0;

    auto key() const { return std::tie(spectrum_size, edges, form); }
};

std::bitset<65> spectrum_bits(const std::vector<EdgeMask>& masks) {
    std::bitset<65> sizes;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) sizes.set(std::popcount(masks[i] & masks[j]));
    return sizes;
}

std::size_t used_vertices(const std::vector<EdgeMask>& masks) {
    EdgeMask all = 0;
    for (EdgeMask m : masks) all |= m;
    return all == 0 ? 0 : static_cast<std::size_t>(64 - std::countl_zero(all));
}

class Searcher {
public:
    Searcher(std::size_t k, std::size_t n, const SearchBudget& budget, std::uint64_t seed)
        : k_(k), n_(n), budget_(budget), seed_(seed), start_(Clock::now()) {
        for (const auto& c : combinations(n, k)) {
            EdgeMask m = 0;
            for (Vertex v : c) m |= EdgeMask{1} << v;
            all_edges_.push_back(m);
        }
        std::sort(all_edges_.begin(), all_edges_.end());
    }

    SearchReport run() {
        report_.k = k_;
        report_.max_vertices = n_;
        report_.edge_bound = all_edges_.size();
        report_.seed = seed_;

        bool completed = false;
        if (n_ <= kCanonicalMaxVertices) {
            std::vector<EdgeMask> family;
            completed = enumerate(family, 0);
            report_.mode = completed ? "exhaustive" : "exhaustive+local";
        } else {
            report_.mode = "local";
        }
        report_.exhaustive = completed && report_.unknown == 0;
        report_.budget_exhausted = !completed;
        if (!completed) local_search();

        if (best_) {
            report_.best_spectrum_size = best_->spectrum_size;
            report_.witness = from_masks(best_->n, best_->form);
            report_.witness_spectrum = intersection_spectrum(*report_.witness).sizes;
        }
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return report_;
    }

private:
    bool out_of_time() const { return budget_.max_time && Clock::now() - start_ > *budget_.max_time; }

    ColorStatus status(const std::vector<EdgeMask>& masks) {
        SolveBudget sb;
        sb.max_nodes = budget_.solver_nodes;
        return find_2_coloring(from_masks(n_, masks), sb).status;
    }

    void offer(const std::vector<EdgeMask>& masks) {
        Candidate c;
        c.edges = masks.size();
        c.spectrum_size = spectrum_bits(masks).count();
        if (n_ <= kCanonicalMaxVertices) {
            c.form = canonical_form(n_, masks).edges;
        } else {
            c.form = masks;
            std::sort(c.form.begin(), c.form.end());
        }
        c.n = used_vertices(c.form);
        if (!report_.m_tilde_estimate || c.edges < *report_.m_tilde_estimate) report_.m_tilde_estimate = c.edges;
        if (!best_ || c.key() < best_->key()) best_ = std::move(c);
    }

    bool enumerate(std::vector<EdgeMask>& family, std::size_t from) {
        for (std::size_t i = from; i < all_edges_.size(); ++i) {
            const EdgeMask e = all_edges_[i];
            bool meets = true;
            for (EdgeMask f : family)
                if ((e & f) == 0) { meets = false; break; }
            if (!meets) continue;
            ++report_.candidates;
            family.push_back(e);
            if (is_canonical(n_, family)) {
                ++report_.nodes;
                if (report_.nodes > budget_.max_nodes || ((report_.nodes & 255U) == 0 && out_of_time())) {
                    family.pop_back();
                    return false;
                }
                const ColorStatus st = status(family);
                if (st == ColorStatus::NotColorable) {
                    ++report_.non_colorable;
                    offer(family);
                } else {
                    if (st == ColorStatus::Unknown) ++report_.unknown;
                    if (!enumerate(family, i + 1)) {
                        family.pop_back();
                        return false;
                    }
                }
            }
            family.pop_back();
        }
        return true;
    }

    // (disjoint pairs, 2-colorable or unknown, spectrum size, edges); smaller is better.
    using Score = std::tuple<std::size_t, int, std::size_t, std::size_t>;

    Score score(const std::vector<EdgeMask>& masks, bool& non_colorable) {
        std::size_t disjoint = 0;
        for (std::size_t i = 0; i < masks.size(); ++i)
            for (std::size_t j = i + 1; j < masks.size(); ++j)
                if ((masks[i] & masks[j]) == 0) ++disjoint;
        non_colorable = masks.size() >= 2 && status(masks) == ColorStatus::NotColorable;
        return {disjoint, non_colorable ? 0 : 1, spectrum_bits(masks).count(), masks.size()};
    }

    EdgeMask random_edge(Rng& rng) const {
        EdgeMask m = 0;
        for (auto v : rng.sample_subset(static_cast<std::uint32_t>(n_), static_cast<std::uint32_t>(k_)))
            m |= EdgeMask{1} << v;
        return m;
    }

    void local_search() {
        Rng rng(derive_seed(seed_, "search_local"));
        const std::uint64_t total = budget_.local_iterations;
        const std::uint64_t per_restart = std::max<std::uint64_t>(200, total / 8);
        const std::uint64_t base = std::uint64_t{1} << std::min<std::size_t>(k_ - 1, 20);
        for (std::uint64_t restart = 0; report_.local_moves < total && !out_of_time(); ++restart) {
            const std::uint64_t m = std::min<std::uint64_t>(all_edges_.size(), base + rng.below(base + 1));
            auto start = random_uniform(n_, k_, m, derive_seed(seed_, "search_restart", restart));
            std::vector<EdgeMask> cur = edge_masks(start);
            bool nc = false;
            Score cur_score = score(cur, nc);
            if (std::get<0>(cur_score) == 0 && nc) offer(cur);

            for (std::uint64_t step = 0; step < per_restart && report_.local_moves < total; ++step) {
                ++report_.local_moves;
                if ((step & 63U) == 0 && out_of_time()) return;
                std::vector<EdgeMask> next = cur;
                const auto move = rng.below(3);
                if (move == 0 && !next.empty()) {
                    auto& e = next[rng.below(next.size())];
                    std::vector<Vertex> in, out;
                    for (Vertex v = 0; v < n_; ++v) (e >> v & 1U ? in : out).push_back(v);
                    if (out.empty()) continue;
                    e &= ~(EdgeMask{1} << in[rng.below(in.size())]);
                    e |= EdgeMask{1} << out[rng.below(out.size())];
                } else if (move == 1) {
                    next.push_back(random_edge(rng));
                } else if (next.size() > 2) {
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(rng.below(next.size())));
                } else {
                    continue;
                }
                std::sort(next.begin(), next.end());
                if (std::adjacent_find(next.begin(), next.end()) != next.end()) continue;
                const Score s = score(next, nc);
                if (s <= cur_score) {
                    cur = std::move(next);
                    cur_score = s;
                    if (std::get<0>(s) == 0 && nc) offer(cur);
                }
            }
        }
    }

    std::size_t k_;
    std::size_t n_;
    SearchBudget budget_;
    std::uint64_t seed_;
    Clock::time_point start_;
    std::vector<EdgeMask> all_edges_;
    std::optional<Candidate> best_;
    SearchReport report_;
};

}  // namespace

SearchReport min_spectrum_search(std::size_t k, std::size_t max_vertices, const SearchBudget& budget,
                                 std::uint64_t seed) {
    if (k < 2) fail(ErrorCode::InvalidArgument, "search needs k >= 2");
    if (max_vertices < k) fail(ErrorCode::InvalidArgument, "search needs max_vertices >= k");
    if (max_vertices > 64) fail(ErrorCode::SizeCapExceeded, "search is limited to 64 vertices");
    if (binomial_capped(max_vertices, k, kDefaultSizeCap) > kDefaultSizeCap)
        fail(ErrorCode::SizeCapExceeded, "too many candidate edges");
    Searcher s(k, max_vertices, budget, seed);
    return s.run();
}

}  // namespace hyperspec
