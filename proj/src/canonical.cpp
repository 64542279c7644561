#include <hyperspec/canonical.hpp>

#include <string>

namespace hyperspec {

std::vector<EdgeMask> edge_masks(const Hypergraph& h) {
    if (h.num_vertices() > 64) fail(ErrorCode::SizeCapExceeded, "edge masks need at most 64 vertices");
    std::vector<EdgeMask> out;
    out.reserve(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) out.push_back(h.num_vertices() == 0 ? 0 : h.edge_bits(e)[0]);
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph from_masks(std::size_t n, const std::vector<EdgeMask>& masks) {
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(masks.size());
    for (EdgeMask m : masks) {
        std::vector<Vertex> e;
        for (EdgeMask bits = m; bits; bits &= bits - 1) e.push_back(static_cast<Vertex>(std::countr_zero(bits)));
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

namespace {

int compare_blocks(const std::vector<EdgeMask>& a, const std::vector<EdgeMask>& b) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    // Same prefix: the longer block is smaller, since its next mask has a
    // lower top bit than anything the other list continues with.
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    return 0;
}

/// Labels are handed out in increasing order; after label j is placed, the
/// edges it completes form block j, and the ascending relabeled list is the
/// concatenation of blocks 0, 1, 2, ...
class Labeler {
public:
    Labeler(std::size_t n, const std::vector<EdgeMask>& masks, bool test_only)
        : n_(n), masks_(masks), test_only_(test_only), label_of_(n, -1), current_(n), best_(n) {}

    void use_identity_as_best() {
        for (EdgeMask m : masks_) best_[static_cast<std::size_t>(63 - std::countl_zero(m))].push_back(m);
        for (auto& b : best_) std::sort(b.begin(), b.end());
        have_best_ = true;
    }

    void run() { dfs(0, false, 0); }

    bool found_smaller() const { return found_smaller_; }

    CanonicalForm result() const {
        CanonicalForm out;
        out.n = n_;
        for (const auto& b : best_) out.edges.insert(out.edges.end(), b.begin(), b.end());
        out.labeling = best_labeling_;
        return out;
    }

private:
    void dfs(std::size_t level, bool better, std::size_t done) {
        if (done == masks_.size() || level == n_) {
            if (!test_only_ && (better || !have_best_)) record(level);
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (label_of_[v] >= 0) continue;
            const EdgeMask with_v = labeled_ | (EdgeMask{1} << v);
            label_of_[v] = static_cast<int>(level);
            auto& block = current_[level];
            block.clear();
            for (EdgeMask m : masks_)
                if ((m >> v & 1U) && (m & ~with_v) == 0) block.push_back(relabel(m));
            std::sort(block.begin(), block.end());

            bool child_better = better || !have_best_;
            if (!child_better) {
                const int c = compare_blocks(block, best_[level]);
                if (c > 0) { label_of_[v] = -1; continue; }
                child_better = c < 0;
            }
            if (test_only_ && child_better) {
                found_smaller_ = true;
                label_of_[v] = -1;
                return;
            }
            const EdgeMask saved = labeled_;
            labeled_ = with_v;
            const std::uint64_t before = replaced_;
            dfs(level + 1, child_better, done + block.size());
            labeled_ = saved;
            label_of_[v] = -1;
            if (found_smaller_) return;
            if (replaced_ != before) better = false;
        }
    }

    EdgeMask relabel(EdgeMask m) const {
        EdgeMask out = 0;
        for (EdgeMask bits = m; bits; bits &= bits - 1)
            out |= EdgeMask{1} << label_of_[static_cast<std::size_t>(std::countr_zero(bits))];
        return out;
    }

    void record(std::size_t level) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j < level) best_[j] = current_[j];
            else best_[j].clear();
        }
        best_labeling_.assign(n_, 0);
        Vertex next = static_cast<Vertex>(level);
        for (std::size_t v = 0; v < n_; ++v)
            best_labeling_[v] = label_of_[v] >= 0 ? static_cast<Vertex>(label_of_[v]) : next++;
        have_best_ = true;
        ++replaced_;
    }

    std::size_t n_;
    const std::vector<EdgeMask>& masks_;
    bool test_only_;
    std::vector<int> label_of_;
    EdgeMask labeled_ = 0;
    std::vector<std::vector<EdgeMask>> current_;
    std::vector<std::vector<EdgeMask>> best_;
    std::vector<Vertex> best_labeling_;
    bool have_best_ = false;
    bool found_smaller_ = false;
    std::uint64_t replaced_ = 0;
};

void check_size(std::size_t n, const std::vector<EdgeMask>& masks) {
    if (n > kCanonicalMaxVertices)
        fail(ErrorCode::SizeCapExceeded, "canonical forms are limited to " +
                                             std::to_string(kCanonicalMaxVertices) + " vertices");
    const EdgeMask range = n == 64 ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1;
    for (EdgeMask m : masks) {
        if (m == 0) fail(ErrorCode::EmptyEdge, "empty edge mask");
        if (m & ~range) fail(ErrorCode::OutOfRangeVertex, "edge mask uses a vertex outside [0, n)");
    }
}

}  // namespace

CanonicalForm canonical_form(std::size_t n, const std::vector<EdgeMask>& masks) {
    check_size(n, masks);
    Labeler l(n, masks, false);
    l.run();
    return l.result();
}

CanonicalForm canonical_form(const Hypergraph& h) { return canonical_form(h.num_vertices(), edge_masks(h)); }

bool is_canonical(std::size_t n, const std::vector<EdgeMask>& masks) {
    check_size(n, masks);
    Labeler l(n, masks, true);
    l.use_identity_as_best();
    l.run();
    return !l.found_smaller();
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<std::size_t> sa, sb;
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        sa.push_back(a.edge_size(e));
        sb.push_back(b.edge_size(e));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperspec
