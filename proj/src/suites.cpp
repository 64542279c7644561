#include <hyperspec/coloring.hpp>
#include <hyperspec/constructions.hpp>
#include <hyperspec/lemmas.hpp>
#include <hyperspec/suites.hpp>

#include <chrono>
#include <set>

namespace hyperspec {

namespace {

constexpr std::size_t kMaxFailures = 5;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

void note(SuiteSummary& s, bool ok, std::uint64_t index, const std::optional<Rational>& slack,
          const std::string& why) {
    if (ok) ++s.passed;
    else if (s.failures.size() < kMaxFailures) s.failures.push_back("instance " + std::to_string(index) + ": " + why);
    if (slack && (!s.worst_slack || *slack < *s.worst_slack)) s.worst_slack = *slack;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PairInstance pair_instance(std::uint64_t seed, std::uint64_t index) {
    Rng rng(derive_seed(seed, "pair_instance", index));
    const std::size_t n = draw(rng, 2, 10);
    const std::size_t k = draw(rng, 1, n);
    const std::size_t k2 = draw(rng, 1, n);
    const std::uint64_t room = std::min(binomial_capped(n, k, 12), binomial_capped(n, k2, 12));
    const std::size_t ell = draw(rng, 1, std::min<std::size_t>(room, 12));
    return {random_uniform(n, k, ell, derive_seed(seed, "pair_instance_a", index)),
            random_uniform(n, k2, ell, derive_seed(seed, "pair_instance_b", index))};
}

PlantedInstance planted_instance(std::uint64_t seed, std::uint64_t index) {
    Rng rng(derive_seed(seed, "planted_instance", index));
    const std::size_t x = draw(rng, 0, 5);
    const std::size_t k = draw(rng, std::max<std::size_t>(x + 1, 2), 8);
    const std::size_t n = x + k + 2 + draw(rng, 0, 3);
    const std::size_t rest = n - x;
    // With x = 0, S and T draw from the same k-subsets and must not collide.
    const std::uint64_t room = x == 0 ? binomial_capped(rest, k, 12) / 2
                                      : std::min(binomial_capped(rest, k - x, 6), binomial_capped(rest, k, 6));
    const std::size_t ell = draw(rng, 2, std::min<std::size_t>(6, room));

    // W = [0, x); everything else is drawn from [x, n).
    std::set<std::vector<Vertex>> s_edges, t_edges;
    while (s_edges.size() < ell) {
        std::vector<Vertex> e;
        for (Vertex v = 0; v < x; ++v) e.push_back(v);
        for (auto v : rng.sample_subset(static_cast<std::uint32_t>(rest), static_cast<std::uint32_t>(k - x)))
            e.push_back(static_cast<Vertex>(v + x));
        s_edges.insert(std::move(e));
    }
    while (t_edges.size() < ell) {
        std::vector<Vertex> e;
        for (auto v : rng.sample_subset(static_cast<std::uint32_t>(rest), static_cast<std::uint32_t>(k)))
            e.push_back(static_cast<Vertex>(v + x));
        if (!s_edges.count(e)) t_edges.insert(std::move(e));
    }

    std::vector<std::vector<Vertex>> all(s_edges.begin(), s_edges.end());
    all.insert(all.end(), t_edges.begin(), t_edges.end());
    PlantedInstance out{Hypergraph(n, all), {}, {}, {}};
    std::vector<EdgeId> s_ids, t_ids;
    for (const auto& e : s_edges) s_ids.push_back(*out.h.find_edge(e));
    for (const auto& e : t_edges) t_ids.push_back(*out.h.find_edge(e));
    out.s = EdgeIndexSet(std::move(s_ids));
    out.t = EdgeIndexSet(std::move(t_ids));
    std::vector<Vertex> w(x);
    for (Vertex v = 0; v < x; ++v) w[v] = v;
    out.w = VertexSet(std::move(w));
    return out;
}

Hypergraph sparse_uniform_instance(std::size_t k, std::uint64_t seed, std::uint64_t index) {
    if (k < 2 || k > 20) fail(ErrorCode::InvalidArgument, "sparse instances need 2 <= k <= 20");
    const std::size_t m = (std::size_t{1} << (k - 1)) - 1;
    return random_uniform(2 * k - 1, k, m, derive_seed(seed, "sparse_uniform_" + std::to_string(k), index));
}

SuiteSummary pair_inequality_suite(std::uint64_t instances, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteSummary s;
    s.name = "pair_inequality";
    s.seed = seed;
    s.instances = instances;
    for (std::uint64_t i = 0; i < instances; ++i) {
        auto inst = pair_instance(seed, i);
        auto r = check_pair_inequality(inst.a, inst.b);
        note(s, r.holds && r.routes_agree, i, r.slack, r.holds ? "degree route disagrees" : "inequality fails");
    }
    s.elapsed_ms = ms_since(start);
    return s;
}

SuiteSummary average_lambda_suite(std::uint64_t instances, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteSummary s;
    s.name = "average_lambda";
    s.seed = seed;
    s.instances = instances;
    for (std::uint64_t i = 0; i < instances; ++i) {
        auto inst = planted_instance(seed, i);
        auto r = check_average_lambda(inst.h, inst.s, inst.t, inst.w);
        note(s, r.holds, i, r.slack, "inequality fails");
    }
    s.elapsed_ms = ms_since(start);
    return s;
}

SuiteSummary sparse_coloring_suite(std::size_t k, std::uint64_t instances, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteSummary s;
    s.name = "sparse_coloring_k" + std::to_string(k);
    s.seed = seed;
    s.instances = instances;
    for (std::uint64_t i = 0; i < instances; ++i) {
        auto h = sparse_uniform_instance(k, seed, i);
        auto r = find_2_coloring(h);
        note(s, r.status == ColorStatus::Colorable, i, std::nullopt,
             std::string("solver returned ") + std::string(color_status_name(r.status)));
    }
    s.elapsed_ms = ms_since(start);
    return s;
}

}  // namespace hyperspec
