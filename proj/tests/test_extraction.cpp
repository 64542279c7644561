#include <doctest.h>

#include <hyperspec/constructions.hpp>
#include <hyperspec/extraction.hpp>

using namespace hyperspec;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

EdgeIndexSet all_edges(const Hypergraph& h) {
    std::vector<EdgeId> ids(h.num_edges());
    for (EdgeId e = 0; e < ids.size(); ++e) ids[e] = e;
    return EdgeIndexSet(std::move(ids));
}

SimpleGraph complete_graph(std::size_t m) {
    SimpleGraph g(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

// Oracle: t-subsets of A whose pairs all meet in fewer than λ vertices.
std::uint64_t brute_small(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda, std::size_t t) {
    std::uint64_t count = 0;
    for (const auto& c : combinations(a.size(), t)) {
        bool small = true;
        for (std::size_t i = 0; i < t && small; ++i)
            for (std::size_t j = i + 1; j < t && small; ++j)
                small = h.intersection_size(a[c[i]], a[c[j]]) < lambda;
        count += small;
    }
    return count;
}

}  // namespace

TEST_CASE("threshold graph") {
    const auto f = fano();
    CHECK(threshold_graph(f, all_edges(f), 1).num_edges() == 21);
    CHECK(threshold_graph(f, all_edges(f), 2).num_edges() == 0);
    const auto g = threshold_graph(f, EdgeIndexSet{2, 4, 6}, 1);
    CHECK(g.num_vertices() == 3);
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("lambda-small fraction against enumeration") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto h = random_uniform(9, 3, 14, seed);
        const auto a = all_edges(h);
        for (std::size_t lambda : {1U, 2U}) {
            const auto f = lambda_small_fraction(h, a, lambda, 3, seed);
            CHECK(f.exhaustive);
            CHECK(f.small == brute_small(h, a, lambda, 3));
            CHECK(f.total == 364);
        }
    }
    // Sampled mode lands near the exact count.
    const auto h = random_uniform(12, 4, 40, 3);
    const auto a = all_edges(h);
    const auto exact = lambda_small_fraction(h, a, 2, 3, 1);
    const auto sampled = lambda_small_fraction(h, a, 2, 3, 1, 10, 40'000);
    CHECK(!sampled.exhaustive);
    CHECK(sampled.fraction.convert_to<double>() == doctest::Approx(exact.fraction.convert_to<double>()).epsilon(0.05));
}

TEST_CASE("DRC hypotheses and a complete graph") {
    const auto g = complete_graph(128);
    const Rational half(1, 2);
    const auto hyp = drc_hypotheses(g, half, 2, 3);
    CHECK(hyp.hold());
    const auto out = dependent_random_choice(g, half, 2, 3, 1);
    REQUIRE(out);
    CHECK(out->u.size() > 6);
    CHECK(out->bad_subsets == 0);

    // 4·t·d^(−t)·n = 4·2·4·8 = 256 ≥ 128.
    CHECK(!drc_hypotheses(g, half, 2, 8).vertex_bound);
    CHECK(code_of([&] { dependent_random_choice(g, half, 2, 8, 1); }) == ErrorCode::HypothesesViolated);
    CHECK(code_of([&] { dependent_random_choice(g, Rational(0), 2, 3, 1); }) == ErrorCode::HypothesesViolated);
}

TEST_CASE("DRC on random graphs: recount the accepted set") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = random_graph(512, 0.6, seed);
        const auto out = dependent_random_choice(g, Rational(1, 2), 2, 8, seed);
        REQUIRE(out);
        CHECK(out->u.size() > 16);
        CHECK(out->exhaustive);
        std::uint64_t bad = 0, total = 0;
        for (std::size_t i = 0; i < out->u.size(); ++i)
            for (std::size_t j = i + 1; j < out->u.size(); ++j) {
                std::size_t common = 0;
                for (std::size_t w = 0; w < 512; ++w) common += g.adjacent(out->u[i], w) && g.adjacent(out->u[j], w);
                bad += common < 8;
                ++total;
            }
        CHECK(bad * 16 < total);
        CHECK(out->bad_subsets == bad);
    }
}

TEST_CASE("ramsey extraction on fano") {
    const auto f = fano();
    const auto r = find_lambda_pair_ramsey(f, all_edges(f), 2, 0);
    CHECK(r.pair.lambda == 1);
    CHECK(r.pair.x.size() == 2);
    CHECK(r.pair.y.size() == 5);
    CHECK(r.pair.validated);
    CHECK(validate_lambda_pair(f, r.pair.x, r.pair.y, 1, 2).valid);
    CHECK(code_of([&] { find_lambda_pair_ramsey(f, EdgeIndexSet{0}, 2, 0); }) == ErrorCode::PoolExhausted);
}

TEST_CASE("extractors on iterated fano") {
    const auto h = iterated_fano(2);
    const auto a = all_edges(h);
    const auto ramsey = find_lambda_pair_ramsey(h, a, 4, 0);
    CHECK(validate_lambda_pair(h, ramsey.pair.x, ramsey.pair.y, ramsey.pair.lambda, 4).valid);

    ExtractionParams p;
    p.seed = 0;
    const auto drc = find_lambda_pair_drc(h, a, 1, p);
    CHECK(drc.pair.lambda == 1);
    CHECK(drc.pair.x.size() == 4);
    CHECK(drc.pair.y.size() >= drc.n);
    CHECK(validate_lambda_pair(h, drc.pair.x, drc.pair.y, 1, 4).valid);

    CHECK(code_of([&] { find_lambda_pair_drc(h, a, 7, p); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("triple family on fano") {
    const auto f = fano();
    const auto fam = build_triple_family(f, EdgeIndexSet{1, 2, 3, 4, 5, 6}, 0, 1);
    REQUIRE(fam.triples.size() == 3);
    CHECK(fam.triples[0].a == 1);
    CHECK(fam.triples[0].b == 2);
    CHECK(fam.triples[0].x == VertexSet{1});
    CHECK(fam.triples[1].a == 3);
    CHECK(fam.triples[1].b == 4);
    CHECK(fam.triples[1].x == VertexSet{3});
    CHECK(fam.triples[2].a == 5);
    CHECK(fam.triples[2].b == 6);
    CHECK(fam.triples[2].x == VertexSet{1});
    CHECK(fam.maximal);
    CHECK(fam.used().size() == 6);
    CHECK(build_triple_family(f, EdgeIndexSet{1, 2, 3, 4, 5, 6}, 0, 2).triples.empty());
    CHECK(code_of([&] { build_triple_family(f, EdgeIndexSet{1, 2}, 0, 4); }) == ErrorCode::WidthTooLarge);
}

TEST_CASE("density increment") {
    const auto f = fano();
    const auto ft = density_increment_run(f, ExtractionParams{});
    CHECK(ft.levels.size() == 1);
    CHECK(ft.stop_reason == "no_progress");

    ExtractionParams p;
    p.seed = 0;
    const auto h = iterated_fano(2);
    const auto t = density_increment_run(h, p);
    REQUIRE(t.levels.size() >= 2);
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        CHECK(t.levels[i].check.valid);
        CHECK(validate_lambda_pair(h, t.levels[i].pair.x, t.levels[i].pair.y, t.levels[i].lambda, 4).valid);
        if (i > 0) CHECK(t.levels[i].lambda > t.levels[i - 1].lambda);
    }
    CHECK(!t.notes.empty());

    CHECK(code_of([] { density_increment_run(Hypergraph(4, {{0, 1}, {2, 3}}), ExtractionParams{}); }) ==
          ErrorCode::NotIntersecting);
}
