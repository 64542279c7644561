#include <hyperspec/hypergraph.hpp>

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace hyperspec {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::EmptyEdge: return "EmptyEdge";
        case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
        case ErrorCode::TooFewEdges: return "TooFewEdges";
        case ErrorCode::OverlappingSets: return "OverlappingSets";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonUniform: return "NonUniform";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::TooManyEdgesRequested: return "TooManyEdgesRequested";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotIntersecting: return "NotIntersecting";
        case ErrorCode::MismatchedVertexCount: return "MismatchedVertexCount";
        case ErrorCode::MismatchedEdgeCount: return "MismatchedEdgeCount";
        case ErrorCode::WitnessViolation: return "WitnessViolation";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NoDisjointEdge: return "NoDisjointEdge";
        case ErrorCode::StepOutOfRange: return "StepOutOfRange";
        case ErrorCode::HypothesesViolated: return "HypothesesViolated";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::PoolExhausted: return "PoolExhausted";
        case ErrorCode::DrcFailed: return "DrcFailed";
        case ErrorCode::NoQualifyingSubset: return "NoQualifyingSubset";
        case ErrorCode::WidthTooLarge: return "WidthTooLarge";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::CertificateFailed: return "CertificateFailed";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<std::vector<Vertex>> edges)
    : num_vertices_(num_vertices), words_(words_for(num_vertices)) {
    offsets_.reserve(edges.size() + 1);
    offsets_.push_back(0);
    bits_.assign(edges.size() * words_, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto& list = edges[e];
        if (list.empty()) fail(ErrorCode::EmptyEdge, "edge " + std::to_string(e) + " is empty");
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (Vertex v : list) {
            if (v >= num_vertices)
                fail(ErrorCode::OutOfRangeVertex, "edge " + std::to_string(e) + " has vertex " +
                                                      std::to_string(v) + " >= " +
                                                      std::to_string(num_vertices));
            bits_[e * words_ + v / 64] |= Word{1} << (v % 64);
        }
        vertices_.insert(vertices_.end(), list.begin(), list.end());
        offsets_.push_back(vertices_.size());
    }

    by_bits_.resize(edges.size());
    for (EdgeId e = 0; e < by_bits_.size(); ++e) by_bits_[e] = e;
    auto less = [this](EdgeId a, EdgeId b) {
        auto ra = edge_bits(a), rb = edge_bits(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(by_bits_.begin(), by_bits_.end(), less);
    for (std::size_t i = 1; i < by_bits_.size(); ++i) {
        auto ra = edge_bits(by_bits_[i - 1]), rb = edge_bits(by_bits_[i]);
        if (std::equal(ra.begin(), ra.end(), rb.begin())) {
            auto [lo, hi] = std::minmax(by_bits_[i - 1], by_bits_[i]);
            fail(ErrorCode::DuplicateEdge, "edges " + std::to_string(lo) + " and " +
                                               std::to_string(hi) + " are equal");
        }
    }
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
    std::vector<Word> row(words_, 0);
    for (Vertex v : vertices) {
        if (v >= num_vertices_) return std::nullopt;
        row[v / 64] |= Word{1} << (v % 64);
    }
    auto it = std::lower_bound(by_bits_.begin(), by_bits_.end(), row, [this](EdgeId e, const auto& r) {
        auto re = edge_bits(e);
        return std::lexicographical_compare(re.begin(), re.end(), r.begin(), r.end());
    });
    if (it == by_bits_.end()) return std::nullopt;
    auto re = edge_bits(*it);
    if (!std::equal(re.begin(), re.end(), row.begin())) return std::nullopt;
    return *it;
}

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> deg(num_vertices_, 0);
    for (Vertex v : vertices_) ++deg[v];
    return deg;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(num_edges());
    for (EdgeId e = 0; e < num_edges(); ++e) {
        auto span = edge(e);
        out.emplace_back(span.begin(), span.end());
    }
    return out;
}

std::vector<Word> Hypergraph::bits_of(const VertexSet& set) const {
    check_vertex_set(set);
    std::vector<Word> row(words_, 0);
    for (Vertex v : set) row[v / 64] |= Word{1} << (v % 64);
    return row;
}

void Hypergraph::check_edge_set(const EdgeIndexSet& set) const {
    if (!set.empty() && set.values().back() >= num_edges())
        fail(ErrorCode::InvalidIndex, "edge index " + std::to_string(set.values().back()) +
                                          " out of range");
}

void Hypergraph::check_vertex_set(const VertexSet& set) const {
    if (!set.empty() && set.values().back() >= num_vertices_)
        fail(ErrorCode::OutOfRangeVertex, "vertex " + std::to_string(set.values().back()) +
                                              " out of range");
}

std::optional<std::uint64_t> Spectrum::multiplicity(std::size_t s) const {
    auto it = std::lower_bound(sizes.begin(), sizes.end(), s);
    if (it == sizes.end() || *it != s) return std::nullopt;
    return multiplicities[static_cast<std::size_t>(it - sizes.begin())];
}

std::optional<std::size_t> is_uniform(const Hypergraph& h) {
    if (h.num_edges() == 0) fail(ErrorCode::EmptyHypergraph, "hypergraph has no edges");
    std::size_t k = h.edge_size(0);
    for (EdgeId e = 1; e < h.num_edges(); ++e)
        if (h.edge_size(e) != k) return std::nullopt;
    return k;
}

std::size_t require_uniform(const Hypergraph& h) {
    auto k = is_uniform(h);
    if (!k) fail(ErrorCode::NonUniform, "hypergraph is not uniform");
    return *k;
}

bool is_intersecting(const Hypergraph& h) {
    const std::size_t m = h.num_edges();
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            if (bits_disjoint(h.edge_bits(a), h.edge_bits(b))) return false;
    return true;
}

namespace {

std::atomic<unsigned> g_threads{0};

unsigned env_threads() {
    if (const char* env = std::getenv("HYPERSPEC_THREADS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

unsigned default_threads() {
    unsigned t = g_threads.load();
    return t == 0 ? env_threads() : t;
}

void set_default_threads(unsigned threads) { g_threads.store(threads); }

Spectrum intersection_spectrum(const Hypergraph& h, unsigned threads) {
    const std::size_t m = h.num_edges();
    if (m < 2) fail(ErrorCode::TooFewEdges, "spectrum needs at least 2 edges");
    std::size_t max_size = 0;
    for (EdgeId e = 0; e < m; ++e) max_size = std::max(max_size, h.edge_size(e));

    if (threads == 0) threads = default_threads();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, m - 1));

    // Rows are dealt round-robin so triangular work balances; histograms are
    // summed afterwards, so the result is independent of the split.
    std::vector<std::vector<std::uint64_t>> partial(threads,
                                                    std::vector<std::uint64_t>(max_size + 1, 0));
    auto work = [&](unsigned id) {
        auto& hist = partial[id];
        for (std::size_t a = id; a < m; a += threads) {
            auto ra = h.edge_bits(static_cast<EdgeId>(a));
            for (std::size_t b = a + 1; b < m; ++b)
                ++hist[and_popcount(ra, h.edge_bits(static_cast<EdgeId>(b)))];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }

    Spectrum out;
    for (std::size_t s = 0; s <= max_size; ++s) {
        std::uint64_t total = 0;
        for (const auto& hist : partial) total += hist[s];
        if (total > 0) {
            out.sizes.push_back(s);
            out.multiplicities.push_back(total);
        }
    }
    return out;
}

Rational lambda_within(const Hypergraph& h, const EdgeIndexSet& s) {
    h.check_edge_set(s);
    if (s.size() < 2) fail(ErrorCode::TooFewEdges, "lambda_within needs at least 2 edges");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) sum += h.intersection_size(s[i], s[j]);
    const std::uint64_t n = s.size();
    return Rational(BigInt(sum), BigInt(n * (n - 1) / 2));
}

Rational lambda_across(const Hypergraph& h, const EdgeIndexSet& s, const EdgeIndexSet& t) {
    h.check_edge_set(s);
    h.check_edge_set(t);
    if (s.empty() || t.empty()) fail(ErrorCode::EmptySet, "lambda_across needs nonempty sets");
    if (!s.disjoint_from(t)) fail(ErrorCode::OverlappingSets, "S and T must be disjoint");
    std::uint64_t sum = 0;
    for (EdgeId a : s)
        for (EdgeId b : t) sum += h.intersection_size(a, b);
    return Rational(BigInt(sum), BigInt(static_cast<std::uint64_t>(s.size()) * t.size()));
}

std::size_t count_edges_containing(const Hypergraph& h, std::span<const Word> bits) {
    std::size_t count = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (bits_subset(bits, h.edge_bits(e))) ++count;
    return count;
}

EdgeIndexSet edges_containing(const Hypergraph& h, const VertexSet& x) {
    const auto bits = h.bits_of(x);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (bits_subset(bits, h.edge_bits(e))) out.push_back(e);
    return EdgeIndexSet(std::move(out));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    BigInt b = binomial(n, k);
    if (b > cap) return cap + 1;
    return b.convert_to<std::uint64_t>();
}

}  // namespace hyperspec
