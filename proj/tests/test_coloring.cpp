#include <doctest.h>

#include <hyperspec/coloring.hpp>
#include <hyperspec/constructions.hpp>

using namespace hyperspec;

namespace {

// Oracle: try every 2-coloring.
bool brute_colorable(const Hypergraph& h) {
    const std::size_t n = h.num_vertices();
    const auto lists = h.edge_lists();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool proper = true;
        for (const auto& e : lists) {
            std::size_t ones = 0;
            for (Vertex v : e) ones += mask >> v & 1U;
            if (ones == 0 || ones == e.size()) { proper = false; break; }
        }
        if (proper) return true;
    }
    return false;
}

// Oracle: smallest cover by subset enumeration.
std::size_t brute_cover(const Hypergraph& h) {
    const std::size_t n = h.num_vertices();
    std::size_t best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool covers = true;
        for (EdgeId e = 0; e < h.num_edges() && covers; ++e) {
            bool hit = false;
            for (Vertex v : h.edge(e)) hit = hit || (mask >> v & 1U);
            covers = hit;
        }
        if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

}  // namespace

TEST_CASE("monochromatic edge") {
    const auto f = fano();
    CHECK(monochromatic_edge(f, Coloring(7, 0)) == std::optional<EdgeId>(0));
    const auto tri = complete_subsets(3, 2);
    CHECK(monochromatic_edge(tri, Coloring{0, 0, 1}) == tri.find_edge(std::vector<Vertex>{0, 1}));
    CHECK(monochromatic_edge(complete_subsets(5, 2), Coloring{0, 0, 1, 1, 1}));
    CHECK_THROWS_AS(monochromatic_edge(f, Coloring(6, 0)), Error);
}

TEST_CASE("solver on named families") {
    CHECK(find_2_coloring(fano()).status == ColorStatus::NotColorable);
    CHECK(find_2_coloring(complete_subsets(3, 2)).status == ColorStatus::NotColorable);
    CHECK(find_2_coloring(complete_subsets(5, 3)).status == ColorStatus::NotColorable);
    CHECK(find_2_coloring(ramsey_clique_hypergraph(6, 3)).status == ColorStatus::NotColorable);
    CHECK(find_2_coloring(ramsey_clique_hypergraph(5, 3)).status == ColorStatus::Colorable);
    const auto single = find_2_coloring(Hypergraph(3, {{0, 1, 2}}));
    REQUIRE(single.status == ColorStatus::Colorable);
    CHECK(!monochromatic_edge(Hypergraph(3, {{0, 1, 2}}), *single.coloring));
}

TEST_CASE("solver agrees with exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 4 + seed % 9;
        const std::size_t k = 2 + seed % 3;
        const std::size_t room = binomial_capped(n, k, 40);
        const std::size_t m = 1 + seed % std::min<std::size_t>(room, 40);
        const auto h = random_uniform(n, k, m, seed);
        const auto r = find_2_coloring(h);
        REQUIRE(r.status != ColorStatus::Unknown);
        CHECK((r.status == ColorStatus::Colorable) == brute_colorable(h));
        if (r.coloring) CHECK(!monochromatic_edge(h, *r.coloring));
    }
}

TEST_CASE("solver budget gives unknown") {
    SolveBudget tiny;
    tiny.max_nodes = 1;
    CHECK(find_2_coloring(ramsey_clique_hypergraph(6, 3), tiny).status == ColorStatus::Unknown);
}

TEST_CASE("random refutation") {
    const auto r = random_refute(fano(), 10'000, 5);
    CHECK(r.mono_fraction == 1.0);
    CHECK(r.trials == 10'000);
    const auto again = random_refute(fano(), 10'000, 5);
    CHECK(again.mean_mono_edges == r.mean_mono_edges);
    // One edge of size 4: a coloring is monochromatic on it with probability 2/16.
    const auto single = random_refute(Hypergraph(4, {{0, 1, 2, 3}}), 100'000, 7);
    CHECK(single.mean_mono_edges == doctest::Approx(0.125).epsilon(0.08));
}

TEST_CASE("three coloring of intersecting hypergraphs") {
    const auto f = fano();
    const auto c = three_coloring_intersecting(f);
    CHECK(!monochromatic_edge(f, c));
    for (Vertex v = 0; v < 7; ++v) CHECK((c[v] != 0) == f.edge_contains(0, v));
    CHECK(three_coloring_intersecting(Hypergraph(2, {{0, 1}})) == Coloring{1, 2});
    CHECK_THROWS_AS(three_coloring_intersecting(Hypergraph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("compositional certificate on random colorings") {
    const auto f = fano();
    const auto p = compose(f, f);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto c = random_coloring(p.num_vertices(), s);
        const EdgeId e = compositional_mono_edge(f, f, p, c);
        REQUIRE(e < p.num_edges());
        const auto first = c[p.edge(e)[0]];
        for (Vertex v : p.edge(e)) CHECK(c[v] == first);
    }
}

TEST_CASE("cover number") {
    CHECK(cover_number(fano()) == std::optional<std::size_t>(3));
    CHECK(cover_number(Hypergraph(3, {{0, 1, 2}})) == std::optional<std::size_t>(1));
    CHECK(cover_number(complete_subsets(5, 3)) == std::optional<std::size_t>(3));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto h = random_uniform(10, 3, 5 + seed % 20, seed);
        CHECK(cover_number(h) == std::optional<std::size_t>(brute_cover(h)));
    }
}

TEST_CASE("word kernel and generic kernel agree") {
    SolveBudget generic;
    generic.word_kernel = false;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 6 + seed % 40;
        const std::size_t k = 2 + seed % 4;
        const auto h = random_uniform(n, k, std::min<std::size_t>(binomial_capped(n, k, 200), 5 + seed % 120), seed);
        const auto a = find_2_coloring(h);
        const auto b = find_2_coloring(h, generic);
        CHECK(a.status == b.status);
        CHECK(a.nodes == b.nodes);
        CHECK(a.coloring == b.coloring);
    }
    const auto f = fano();
    CHECK(find_2_coloring(f, generic).status == ColorStatus::NotColorable);
}
