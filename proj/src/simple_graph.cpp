#include <hyperspec/random.hpp>
#include <hyperspec/simple_graph.hpp>

namespace hyperspec {

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) fail(ErrorCode::InvalidIndex, "graph vertex out of range");
    if (u == v) fail(ErrorCode::InvalidArgument, "loops are not allowed");
    if (adjacent(u, v)) return;
    rows_[u * words_ + v / 64] |= Word{1} << (v % 64);
    rows_[v * words_ + u / 64] |= Word{1} << (u % 64);
    ++edges_;
}

std::size_t SimpleGraph::degree(std::size_t u) const { return popcount_row(row(u)); }

std::vector<Word> SimpleGraph::common_neighbors(std::span<const std::uint32_t> set) const {
    std::vector<Word> out(words_, ~Word{0});
    if (n_ % 64 != 0 && words_ > 0) out.back() = (Word{1} << (n_ % 64)) - 1;
    for (auto u : set) {
        auto r = row(u);
        for (std::size_t w = 0; w < words_; ++w) out[w] &= r[w];
    }
    return out;
}

SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "random_graph"));
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

std::size_t popcount_row(std::span<const Word> row) {
    std::size_t total = 0;
    for (Word w : row) total += std::popcount(w);
    return total;
}

std::vector<std::uint32_t> row_members(std::span<const Word> row) {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < row.size(); ++w) {
        Word bits = row[w];
        while (bits) {
            out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace hyperspec
