#include <hyperspec/constructions.hpp>
#include <hyperspec/random.hpp>

#include <set>

namespace hyperspec {

namespace {

void check_cap(const BigInt& count, std::uint64_t cap, const std::string& what) {
    if (count > cap)
        fail(ErrorCode::SizeCapExceeded, what + " would have " + count.str() +
                                             " items, cap is " + std::to_string(cap));
}

std::int64_t param(const ConstructionSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        fail(ErrorCode::InvalidArgument, "family " + spec.family + " needs --param " + name + "=...");
    if (it->second < 0) fail(ErrorCode::InvalidArgument, "parameter " + name + " must be >= 0");
    return it->second;
}

}  // namespace

std::vector<std::vector<Vertex>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<Vertex>> out;
    if (k > n) return out;
    std::vector<Vertex> current(k);
    for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Vertex>(i);
    while (true) {
        out.push_back(current);
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

Hypergraph fano() {
    std::vector<std::vector<Vertex>> lines;
    for (Vertex i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return Hypergraph(7, std::move(lines));
}

Hypergraph compose(const Hypergraph& outer, const Hypergraph& inner, std::uint64_t size_cap) {
    const std::size_t k1 = require_uniform(outer);
    require_uniform(inner);
    const std::size_t n2 = inner.num_vertices();
    const std::size_t m2 = inner.num_edges();

    BigInt count = BigInt(outer.num_edges()) * boost::multiprecision::pow(BigInt(m2), static_cast<unsigned>(k1));
    check_cap(count, size_cap, "composition");

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(count.convert_to<std::size_t>());
    std::vector<std::size_t> choice(k1);
    for (EdgeId e = 0; e < outer.num_edges(); ++e) {
        auto copies = outer.edge(e);
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            std::vector<Vertex> edge;
            for (std::size_t j = 0; j < k1; ++j) {
                const auto base = static_cast<Vertex>(copies[j] * n2);
                for (Vertex v : inner.edge(static_cast<EdgeId>(choice[j]))) edge.push_back(base + v);
            }
            edges.push_back(std::move(edge));
            std::size_t j = k1;
            while (j > 0 && ++choice[j - 1] == m2) choice[--j] = 0;
            if (j == 0) break;
        }
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph(outer.num_vertices() * n2, std::move(edges));
}

std::uint64_t iterated_fano_edge_count(unsigned m, std::uint64_t cap) {
    BigInt k = boost::multiprecision::pow(BigInt(3), m);
    BigInt exponent = (k - 1) / 2;
    if (exponent > 64) return cap + 1;
    BigInt count = boost::multiprecision::pow(BigInt(7), exponent.convert_to<unsigned>());
    if (count > cap) return cap + 1;
    return count.convert_to<std::uint64_t>();
}

Hypergraph iterated_fano(unsigned m, std::uint64_t size_cap) {
    if (iterated_fano_edge_count(m, size_cap) > size_cap)
        fail(ErrorCode::SizeCapExceeded, "iterated_fano(" + std::to_string(m) +
                                             ") exceeds the edge cap of " + std::to_string(size_cap));
    if (m == 0) return Hypergraph(1, {{0}});
    if (m == 1) return fano();
    return compose(fano(), iterated_fano(m - 1, size_cap), size_cap);
}

Hypergraph complete_subsets(std::size_t n, std::size_t k, std::uint64_t size_cap) {
    if (k < 1 || k > n) fail(ErrorCode::InvalidArgument, "complete_subsets needs 1 <= k <= n");
    check_cap(binomial(n, k), size_cap, "complete_subsets");
    return Hypergraph(n, combinations(n, k));
}

Hypergraph ramsey_clique_hypergraph(std::size_t n, std::size_t k, std::uint64_t size_cap) {
    if (k < 2 || n < k) fail(ErrorCode::InvalidArgument, "ramsey_clique_hypergraph needs k >= 2, N >= k");
    check_cap(binomial(n, k - 1), size_cap, "ramsey_clique_hypergraph vertex set");
    check_cap(binomial(n, k), size_cap, "ramsey_clique_hypergraph");

    auto faces = combinations(n, k - 1);
    std::map<std::vector<Vertex>, Vertex> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], static_cast<Vertex>(i));

    std::vector<std::vector<Vertex>> edges;
    for (const auto& clique : combinations(n, k)) {
        std::vector<Vertex> edge;
        for (std::size_t drop = 0; drop < k; ++drop) {
            std::vector<Vertex> face;
            for (std::size_t j = 0; j < k; ++j)
                if (j != drop) face.push_back(clique[j]);
            edge.push_back(index.at(face));
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(faces.size(), std::move(edges));
}

Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
    if (k < 1 || k > n) fail(ErrorCode::InvalidArgument, "random_uniform needs 1 <= k <= n");
    const std::uint64_t total = binomial_capped(n, k, std::uint64_t{1} << 40);
    if (total < m)
        fail(ErrorCode::TooManyEdgesRequested, "only " + std::to_string(total) + " distinct " +
                                                   std::to_string(k) + "-subsets exist");
    Rng rng(derive_seed(seed, "random_uniform"));
    std::vector<std::vector<Vertex>> edges;
    if (total <= 4 * static_cast<std::uint64_t>(m) && total <= 2'000'000) {
        // Dense request: shuffle the full list and keep a prefix.
        auto all = combinations(n, k);
        rng.shuffle(all);
        all.resize(m);
        edges = std::move(all);
    } else {
        std::set<std::vector<Vertex>> seen;
        while (edges.size() < m) {
            auto picked = rng.sample_subset(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
            std::vector<Vertex> edge(picked.begin(), picked.end());
            if (seen.insert(edge).second) edges.push_back(std::move(edge));
        }
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph build(const ConstructionSpec& spec) {
    const auto& f = spec.family;
    if (f == "fano") return fano();
    if (f == "iterated-fano") return iterated_fano(static_cast<unsigned>(param(spec, "m")), spec.size_cap);
    if (f == "complete-subsets")
        return complete_subsets(static_cast<std::size_t>(param(spec, "n")),
                                static_cast<std::size_t>(param(spec, "k")), spec.size_cap);
    if (f == "ramsey-clique")
        return ramsey_clique_hypergraph(static_cast<std::size_t>(param(spec, "N")),
                                        static_cast<std::size_t>(param(spec, "k")), spec.size_cap);
    if (f == "random-uniform") {
        const auto m = static_cast<std::size_t>(param(spec, "m"));
        if (m > spec.size_cap) fail(ErrorCode::SizeCapExceeded, "random-uniform edge count exceeds cap");
        return random_uniform(static_cast<std::size_t>(param(spec, "n")),
                              static_cast<std::size_t>(param(spec, "k")), m, spec.seed);
    }
    if (f == "compose") fail(ErrorCode::InvalidArgument, "compose takes two input hypergraphs");
    fail(ErrorCode::InvalidArgument, "unknown family '" + f + "'");
}

}  // namespace hyperspec
