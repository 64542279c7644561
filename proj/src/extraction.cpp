#include <hyperspec/extraction.hpp>

#include <cmath>
#include <functional>
#include <map>

namespace hyperspec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// t distinct values from [0, m) in draw order.
std::vector<std::uint32_t> sample_distinct(Rng& rng, std::size_t m, std::size_t t) {
    if (2 * t > m) {
        auto s = rng.sample_subset(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(t));
        return s;
    }
    std::vector<std::uint32_t> out;
    while (out.size() < t) {
        auto v = static_cast<std::uint32_t>(rng.below(m));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

double wilson_upper(std::uint64_t bad, std::uint64_t total, double z) {
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(bad) / n;
    const double z2 = z * z;
    const double centre = p + z2 / (2 * n);
    const double margin = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return (centre + margin) / (1 + z2 / n);
}

Rational pow_rational(const Rational& base, std::size_t e) {
    Rational r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

BigInt floor_rational(const Rational& q) {
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

}  // namespace

ExtractionParams ExtractionParams::paper(std::size_t k, std::uint64_t seed) {
    ExtractionParams p;
    const auto root = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(k))));
    p.t = 2 * root;
    p.x = 10 * p.t;
    p.d = Rational(BigInt(1), BigInt(8 * k));
    p.schedule_exponent = 25 * p.t;
    p.seed = seed;
    p.paper_constants = true;
    return p;
}

SimpleGraph threshold_graph(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda) {
    h.check_edge_set(a);
    if (a.size() < 2) fail(ErrorCode::TooFewEdges, "threshold_graph needs at least 2 edges");
    SimpleGraph g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto ri = h.edge_bits(a[i]);
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (and_popcount(ri, h.edge_bits(a[j])) >= lambda) g.add_edge(i, j);
    }
    return g;
}

SmallFraction lambda_small_fraction(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda,
                                    std::size_t t, std::uint64_t seed,
                                    std::uint64_t exhaustive_limit, std::uint64_t samples) {
    h.check_edge_set(a);
    if (t < 2) fail(ErrorCode::InvalidArgument, "t-subsets need t >= 2");
    SmallFraction out;
    const std::size_t m = a.size();
    if (m < t) {
        out.exhaustive = true;
        out.fraction = 0;
        return out;
    }
    const std::uint64_t total = binomial_capped(m, t, exhaustive_limit);
    if (total <= exhaustive_limit) {
        // Count t-cliques of the "small" graph (pairs meeting in < λ).
        SimpleGraph small(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (h.intersection_size(a[i], a[j]) < lambda) small.add_edge(i, j);
        std::uint64_t count = 0;
        std::function<void(std::vector<Word>&, std::size_t)> extend = [&](std::vector<Word>& cand, std::size_t depth) {
            if (depth == t) { ++count; return; }
            for (auto v : row_members(cand)) {
                std::vector<Word> next(cand.size(), 0);
                auto r = small.row(v);
                for (std::size_t w = 0; w < next.size(); ++w) next[w] = cand[w] & r[w];
                // keep only vertices after v
                for (std::size_t u = 0; u <= v; ++u) next[u / 64] &= ~(Word{1} << (u % 64));
                extend(next, depth + 1);
            }
        };
        auto all = small.common_neighbors({});
        extend(all, 0);
        out.exhaustive = true;
        out.small = count;
        out.total = total;
    } else {
        Rng rng(derive_seed(seed, "lambda_small_fraction"));
        std::uint64_t count = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            auto pick = sample_distinct(rng, m, t);
            bool small = true;
            for (std::size_t i = 0; i < t && small; ++i)
                for (std::size_t j = i + 1; j < t; ++j)
                    if (h.intersection_size(a[pick[i]], a[pick[j]]) >= lambda) { small = false; break; }
            if (small) ++count;
        }
        out.small = count;
        out.total = samples;
    }
    out.fraction = Rational(BigInt(out.small), BigInt(out.total));
    return out;
}

DrcHypotheses drc_hypotheses(const SimpleGraph& g, const Rational& d, std::size_t t, std::size_t n) {
    DrcHypotheses hyp;
    hyp.positive = d > 0 && t >= 1 && t <= n;
    if (d <= 0) return hyp;
    const BigInt m = g.num_vertices();
    hyp.vertex_bound = Rational(m) > Rational(BigInt(4 * t)) * pow_rational(1 / d, t) * Rational(BigInt(n));
    hyp.edge_bound = Rational(BigInt(g.num_edges())) >= d * Rational(m * m) / 2;
    return hyp;
}

std::optional<DrcOutcome> run_drc(const SimpleGraph& g, const DrcConfig& config) {
    const std::size_t m = g.num_vertices();
    const std::size_t t = config.t;
    if (m == 0 || t == 0) return std::nullopt;
    Rng rng(derive_seed(config.seed, "dependent_random_choice"));

    const BigInt bound_den = boost::multiprecision::pow(BigInt(2 * t), static_cast<unsigned>(t));
    const double bound = 1.0 / bound_den.convert_to<double>();

    for (std::size_t attempt = 1; attempt <= config.retries; ++attempt) {
        std::vector<std::uint32_t> picks(t);
        for (auto& p : picks) p = static_cast<std::uint32_t>(rng.below(m));
        const auto urow = g.common_neighbors(picks);
        const auto members = row_members(urow);
        if (members.size() <= 2 * config.n) continue;

        DrcOutcome out;
        out.attempts = attempt;
        const std::uint64_t total = binomial_capped(members.size(), t, config.exhaustive_limit);
        if (total <= config.exhaustive_limit) {
            std::vector<std::vector<std::uint32_t>> bad;
            std::vector<std::uint32_t> chosen;
            std::function<void(std::size_t, const std::vector<Word>&)> walk =
                [&](std::size_t from, const std::vector<Word>& common) {
                    if (chosen.size() == t) {
                        if (popcount_row(common) < config.n) bad.push_back(chosen);
                        return;
                    }
                    for (std::size_t i = from; i + (t - chosen.size()) <= members.size(); ++i) {
                        std::vector<Word> next(common);
                        auto r = g.row(members[i]);
                        for (std::size_t w = 0; w < next.size(); ++w) next[w] &= r[w];
                        chosen.push_back(static_cast<std::uint32_t>(i));
                        walk(i + 1, next);
                        chosen.pop_back();
                    }
                };
            walk(0, g.common_neighbors({}));
            out.exhaustive = true;
            out.bad_subsets = bad.size();
            out.subsets_checked = total;
            if (BigInt(bad.size()) * bound_den < BigInt(total)) {
                out.u = members;
                out.bad_fraction = Rational(BigInt(bad.size()), BigInt(total));
                out.bad_fraction_upper = out.bad_fraction.convert_to<double>();
                return out;
            }
            std::vector<bool> alive(members.size(), true);
            for (const auto& subset : bad) {
                bool intact = true;
                for (auto i : subset) intact = intact && alive[i];
                if (intact) alive[subset.back()] = false;
            }
            std::vector<std::uint32_t> kept;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (alive[i]) kept.push_back(members[i]);
            if (kept.size() > 2 * config.n) {
                out.u = std::move(kept);
                out.cleaned = true;
                out.bad_fraction = 0;
                out.bad_fraction_upper = 0.0;
                return out;
            }
        } else {
            std::uint64_t bad = 0;
            for (std::uint64_t s = 0; s < config.samples; ++s) {
                auto pick = sample_distinct(rng, members.size(), t);
                std::vector<std::uint32_t> vertices;
                for (auto i : pick) vertices.push_back(members[i]);
                if (popcount_row(g.common_neighbors(vertices)) < config.n) ++bad;
            }
            const double upper = wilson_upper(bad, config.samples, kWilsonZ);
            out.bad_subsets = bad;
            out.subsets_checked = config.samples;
            if (upper < bound) {
                out.u = members;
                out.bad_fraction = Rational(BigInt(bad), BigInt(config.samples));
                out.bad_fraction_upper = upper;
                return out;
            }
        }
    }
    return std::nullopt;
}

std::optional<DrcOutcome> dependent_random_choice(const SimpleGraph& g, const Rational& d,
                                                  std::size_t t, std::size_t n,
                                                  std::uint64_t seed, std::size_t retries) {
    auto hyp = drc_hypotheses(g, d, t, n);
    if (!hyp.positive) fail(ErrorCode::HypothesesViolated, "need d > 0 and 1 <= t <= n");
    if (!hyp.vertex_bound) fail(ErrorCode::HypothesesViolated, "need m > 4 t d^-t n");
    if (!hyp.edge_bound) fail(ErrorCode::HypothesesViolated, "need at least d m^2 / 2 edges");
    DrcConfig config;
    config.t = t;
    config.n = n;
    config.seed = seed;
    config.retries = retries;
    return run_drc(g, config);
}

RamseyPairResult find_lambda_pair_ramsey(const Hypergraph& h, const EdgeIndexSet& a,
                                         std::size_t t, std::uint64_t seed) {
    h.check_edge_set(a);
    if (t == 0) fail(ErrorCode::InvalidArgument, "t must be positive");
    if (a.size() < t) fail(ErrorCode::PoolExhausted, "pool is smaller than t");
    Rng rng(derive_seed(seed, "find_lambda_pair_ramsey"));
    std::vector<EdgeId> pool(a.begin(), a.end());
    std::map<std::size_t, std::vector<EdgeId>> pulled;
    RamseyPairResult result;

    while (true) {
        if (pool.size() < 2)
            fail(ErrorCode::PoolExhausted, "pool emptied before " + std::to_string(t) +
                                               " pull-outs shared a majority size");
        const auto idx = static_cast<std::size_t>(rng.below(pool.size()));
        const EdgeId e = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));

        std::map<std::size_t, std::vector<EdgeId>> buckets;
        for (EdgeId f : pool) buckets[h.intersection_size(e, f)].push_back(f);
        auto best = buckets.begin();
        for (auto it = buckets.begin(); it != buckets.end(); ++it)
            if (it->second.size() > best->second.size()) best = it;
        const std::size_t colour = best->first;
        pool = std::move(best->second);
        result.pool_sizes.push_back(pool.size());
        result.pulled_colors.push_back(colour);

        auto& same = pulled[colour];
        same.push_back(e);
        if (same.size() == t) {
            result.pair.x = EdgeIndexSet(std::vector<EdgeId>(same));
            result.pair.y = EdgeIndexSet(std::vector<EdgeId>(pool));
            result.pair.lambda = colour;
            result.pair.validated = validate_lambda_pair(h, result.pair.x, result.pair.y, colour, t).valid;
            return result;
        }
    }
}

DrcPairResult find_lambda_pair_drc(const Hypergraph& h, const EdgeIndexSet& a, std::size_t lambda,
                                   const ExtractionParams& params) {
    h.check_edge_set(a);
    const std::size_t t = params.t;
    DrcPairResult result;
    result.precondition = lambda_small_fraction(h, a, lambda, t, derive_seed(params.seed, "precondition"),
                                                params.exhaustive_limit, params.samples);
    if (a.size() <= t) fail(ErrorCode::NoQualifyingSubset, "edge set too small for a t-subset and Y");
    if (result.precondition.fraction > Rational(1, 2))
        fail(ErrorCode::PreconditionViolated, "more than half of the t-subsets are lambda-small");

    const SimpleGraph g = threshold_graph(h, a, lambda);
    const BigInt m = a.size();
    result.d = params.d ? *params.d : Rational(BigInt(2 * g.num_edges()), m * m);
    if (result.d <= 0) fail(ErrorCode::DrcFailed, "threshold graph has no edges");
    BigInt n = floor_rational(Rational(m) * pow_rational(result.d, t) / Rational(BigInt(5 * t)));
    result.n = std::max<std::size_t>(t, n > BigInt(a.size()) ? a.size() : n.convert_to<std::size_t>());
    result.hypotheses = drc_hypotheses(g, result.d, t, result.n);

    bool any_drc = false;
    for (std::size_t round = 0; round < params.drc_rounds; ++round) {
        DrcConfig config;
        config.t = t;
        config.n = result.n;
        config.seed = derive_seed(params.seed, "find_lambda_pair_drc", round);
        config.retries = params.drc_retries;
        config.exhaustive_limit = params.exhaustive_limit;
        config.samples = params.samples;
        result.rounds = round + 1;
        auto drc = run_drc(g, config);
        if (!drc) continue;
        any_drc = true;

        // Depth-first search for a t-subset of A' with pairwise intersections
        // at most λ and at least n common neighbours.
        std::vector<std::uint32_t> order = drc->u;
        Rng rng(derive_seed(params.seed, "lambda_pair_subset", round));
        rng.shuffle(order);
        std::vector<std::uint32_t> chosen;
        std::vector<Word> found_common;
        std::uint64_t nodes = 0;
        std::function<bool(std::size_t, const std::vector<Word>&)> dfs =
            [&](std::size_t from, const std::vector<Word>& common) -> bool {
                if (chosen.size() == t) { found_common = common; return true; }
                for (std::size_t i = from; i < order.size(); ++i) {
                    if (++nodes > params.search_nodes) return false;
                    const auto v = order[i];
                    bool ok = true;
                    for (auto c : chosen)
                        if (h.intersection_size(a[v], a[c]) > lambda) { ok = false; break; }
                    if (!ok) continue;
                    std::vector<Word> next(common);
                    auto r = g.row(v);
                    for (std::size_t w = 0; w < next.size(); ++w) next[w] &= r[w];
                    if (popcount_row(next) < result.n) continue;
                    chosen.push_back(v);
                    if (dfs(i + 1, next)) return true;
                    chosen.pop_back();
                }
                return false;
            };
        const bool found = dfs(0, g.common_neighbors({}));
        result.search_nodes += nodes;
        if (!found) continue;

        std::vector<EdgeId> xs, ys;
        for (auto v : chosen) xs.push_back(a[v]);
        for (auto v : row_members(found_common)) ys.push_back(a[v]);
        result.drc = std::move(*drc);
        result.pair.x = EdgeIndexSet(std::move(xs));
        result.pair.y = EdgeIndexSet(std::move(ys));
        result.pair.lambda = lambda;
        result.pair.validated = validate_lambda_pair(h, result.pair.x, result.pair.y, lambda, t).valid;
        return result;
    }
    if (!any_drc) fail(ErrorCode::DrcFailed, "dependent random choice found no acceptable subset");
    fail(ErrorCode::NoQualifyingSubset, "no t-subset of A' is small with enough common neighbours");
}

EdgeIndexSet TripleFamily::used() const {
    std::vector<EdgeId> ids;
    for (const auto& tr : triples) {
        ids.push_back(tr.a);
        ids.push_back(tr.b);
    }
    return EdgeIndexSet(std::move(ids));
}

TripleFamily build_triple_family(const Hypergraph& h, const EdgeIndexSet& y, EdgeId anchor,
                                 std::size_t x) {
    h.check_edge_set(y);
    if (anchor >= h.num_edges()) fail(ErrorCode::InvalidIndex, "anchor edge out of range");
    if (x > h.edge_size(anchor))
        fail(ErrorCode::WidthTooLarge, "x = " + std::to_string(x) + " exceeds |U| = " +
                                           std::to_string(h.edge_size(anchor)));
    if (y.empty()) fail(ErrorCode::EmptySet, "candidate set Y is empty");

    const auto ubits = h.edge_bits(anchor);
    const std::size_t words = h.words_per_edge();
    std::vector<Word> diff(words);
    auto admissible = [&](EdgeId a, EdgeId b) {
        auto ra = h.edge_bits(a), rb = h.edge_bits(b);
        std::size_t count = 0;
        for (std::size_t w = 0; w < words; ++w) {
            diff[w] = ra[w] & ubits[w] & ~rb[w];
            count += std::popcount(diff[w]);
        }
        return count >= x;
    };

    TripleFamily family;
    family.anchor = anchor;
    family.x = x;
    std::vector<bool> used(y.size(), false);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (used[i]) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (j == i || used[j] || !admissible(y[i], y[j])) continue;
            auto members = row_members(diff);
            members.resize(x);
            family.triples.push_back({y[i], y[j], VertexSet(std::move(members))});
            used[i] = used[j] = true;
            break;
        }
    }

    family.maximal = true;
    for (std::size_t i = 0; i < y.size() && family.maximal; ++i) {
        if (used[i]) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (j == i || used[j]) continue;
            ++family.rescan_pairs;
            if (admissible(y[i], y[j])) { family.maximal = false; break; }
        }
    }
    return family;
}

std::string_view branch_name(Branch b) noexcept {
    switch (b) {
        case Branch::Initial: return "initial";
        case Branch::SameIntersection: return "same-intersection";
        case Branch::SpreadOut: return "spread-out";
    }
    return "initial";
}

namespace {

/// Up to `count` edges from `pool` with pairwise intersections ≤ λ, found by
/// a small depth-first search; falls back to the first `count` edges.
EdgeIndexSet pick_small_subset(const Hypergraph& h, const std::vector<EdgeId>& pool, std::size_t count,
                               std::size_t lambda) {
    std::vector<EdgeId> chosen;
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (chosen.size() == count) return true;
        for (std::size_t i = from; i < pool.size() && nodes < 100'000; ++i, ++nodes) {
            bool ok = true;
            for (auto c : chosen)
                if (h.intersection_size(c, pool[i]) > lambda) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(pool[i]);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0)) chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
    return EdgeIndexSet(std::move(chosen));
}

std::optional<std::size_t> choose_next_lambda(const Hypergraph& h, const EdgeIndexSet& edges,
                                              const std::vector<std::size_t>& spectrum,
                                              std::size_t current, const ExtractionParams& params,
                                              std::size_t level) {
    for (auto it = spectrum.rbegin(); it != spectrum.rend() && *it > current; ++it) {
        auto frac = lambda_small_fraction(h, edges, *it, params.t,
                                          derive_seed(params.seed, "next_lambda", level),
                                          params.exhaustive_limit, params.samples);
        if (frac.fraction <= Rational(1, 2)) return *it;
    }
    return std::nullopt;
}

}  // namespace

IncrementTrace density_increment_run(const Hypergraph& h, const ExtractionParams& params) {
    const auto start = Clock::now();
    IncrementTrace trace;
    trace.k = require_uniform(h);
    if (!is_intersecting(h)) fail(ErrorCode::NotIntersecting, "density increment needs an intersecting hypergraph");
    if (params.t < 2) fail(ErrorCode::InvalidArgument, "t must be at least 2");
    trace.params = params;
    trace.spectrum = intersection_spectrum(h).sizes;
    const std::size_t k = trace.k;
    const std::size_t t = params.t;
    const std::size_t x = params.x;

    trace.notes.push_back("spread-out case is recorded as a certified averaging inequality and the run "
                          "continues from the largest triple group's common vertex set");
    if (params.paper_constants)
        trace.notes.push_back("paper constants: t = 2*ceil(sqrt(k)), x = 10t, d = 1/(8k), schedule k^(25t) per level");
    else
        trace.notes.push_back("desk-scale parameters: d is the measured threshold-graph density and level "
                              "sizes follow the measured shrink");
    if (params.schedule_exponent > 0 && h.num_edges() < (std::uint64_t{1} << std::min<std::size_t>(k - 1, 63)))
        trace.notes.push_back("edge count below 2^(k-1); the m_i schedule degenerates");

    auto stop = [&](std::string reason, std::string detail) {
        trace.stop_reason = std::move(reason);
        trace.stop_detail = std::move(detail);
        trace.elapsed_ms = ms_since(start);
        return trace;
    };

    std::vector<EdgeId> all(h.num_edges());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    EdgeIndexSet current(std::move(all));
    std::size_t lambda = trace.spectrum.front();
    Branch branch = Branch::Initial;

    for (std::size_t level_index = 0;; ++level_index) {
        if (params.budget && Clock::now() - start > *params.budget)
            return stop("budget_exhausted", "time budget spent before level " + std::to_string(level_index));
        if (level_index >= params.max_levels) return stop("budget_exhausted", "level limit reached");

        const auto level_start = Clock::now();
        IncrementLevel level;
        level.branch = branch;
        level.a_size = current.size();

        std::optional<LambdaPair> pair;
        try {
            auto found = find_lambda_pair_drc(h, current, lambda, params);
            pair = std::move(found.pair);
            level.extractor = "drc";
        } catch (const Error& err) {
            level.extractor_failures.push_back("drc: " + std::string(error_code_name(err.code())) + ": " + err.what());
        }
        if (!pair) {
            try {
                auto found = find_lambda_pair_ramsey(h, current, t, derive_seed(params.seed, "driver_ramsey", level_index));
                const bool increases = trace.levels.empty() || found.pair.lambda > trace.levels.back().lambda;
                if (increases) {
                    pair = std::move(found.pair);
                    level.extractor = "ramsey";
                } else {
                    level.extractor_failures.push_back("ramsey: majority size " + std::to_string(found.pair.lambda) +
                                                       " does not increase");
                }
            } catch (const Error& err) {
                level.extractor_failures.push_back("ramsey: " + std::string(error_code_name(err.code())) + ": " + err.what());
            }
        }
        if (!pair) {
            std::string detail = "no lambda-pair at lambda = " + std::to_string(lambda);
            for (const auto& f : level.extractor_failures) detail += "; " + f;
            return stop("no_progress", detail);
        }

        level.lambda = pair->lambda;
        level.pair = *pair;
        level.check = validate_lambda_pair(h, pair->x, pair->y, pair->lambda, t);
        level.pair.validated = level.check.valid;
        const auto rank = static_cast<std::size_t>(
            std::lower_bound(trace.spectrum.begin(), trace.spectrum.end(), level.lambda) - trace.spectrum.begin());
        if (params.schedule_exponent > 0) {
            level.schedule_log2 = std::log2(static_cast<double>(h.num_edges())) -
                                  static_cast<double>(params.schedule_exponent * rank) * std::log2(static_cast<double>(k));
            level.schedule_degenerate = level.schedule_log2 < std::log2(static_cast<double>(t));
        }
        trace.levels.push_back(level);
        auto& rec = trace.levels.back();
        auto finish_level = [&] { rec.elapsed_ms = ms_since(level_start); };

        if (!rec.check.valid) {
            finish_level();
            return stop("no_progress", "extracted pair failed validation");
        }
        if (rec.lambda >= trace.spectrum.back()) {
            finish_level();
            return stop("no_progress", "no intersection size above " + std::to_string(rec.lambda));
        }

        const EdgeId anchor = rec.pair.x[0];
        TripleFamily family;
        try {
            family = build_triple_family(h, rec.pair.y, anchor, x);
        } catch (const Error& err) {
            finish_level();
            return stop("no_progress", std::string(error_code_name(err.code())) + ": " + err.what());
        }
        rec.family_size = family.triples.size();

        VertexSet seed_set;
        std::size_t steps = 0;
        if (4 * family.triples.size() < rec.pair.y.size()) {
            rec.next_branch = Branch::SameIntersection;
            const auto rest = rec.pair.y.minus(family.used());
            const EdgeId pivot = rest[0];
            std::vector<Vertex> shared;
            for (Vertex v : h.edge(pivot))
                if (h.edge_contains(anchor, v)) shared.push_back(v);
            if (rec.lambda >= x && shared.size() >= x) {
                // Drop x vertices of A ∩ U so that the rest lies in the most edges of Y'.
                const std::size_t keep = shared.size() - x;
                std::vector<Vertex> best;
                std::size_t best_hits = 0;
                bool have = false;
                std::vector<bool> mask(shared.size(), false);
                std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(keep), true);
                do {
                    std::vector<Vertex> cand;
                    for (std::size_t i = 0; i < shared.size(); ++i)
                        if (mask[i]) cand.push_back(shared[i]);
                    const auto bits = h.bits_of(VertexSet(cand));
                    std::size_t hits = 0;
                    for (EdgeId e : rest)
                        if (bits_subset(bits, h.edge_bits(e))) ++hits;
                    if (!have || hits > best_hits) { best = cand; best_hits = hits; have = true; }
                } while (std::prev_permutation(mask.begin(), mask.end()));
                seed_set = VertexSet(std::move(best));
            }
            steps = std::min(x + 1, k - seed_set.size());
        } else {
            rec.next_branch = Branch::SpreadOut;
            std::map<VertexSet, std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < family.triples.size(); ++i) groups[family.triples[i].x].push_back(i);
            auto largest = groups.begin();
            for (auto it = groups.begin(); it != groups.end(); ++it)
                if (it->second.size() > largest->second.size()) largest = it;
            seed_set = largest->first;

            const std::size_t half = t / 2;
            if (half >= 2 && largest->second.size() >= half) {
                std::vector<EdgeId> as, bs;
                for (auto i : largest->second) {
                    as.push_back(family.triples[i].a);
                    bs.push_back(family.triples[i].b);
                }
                SpreadCertificate cert;
                cert.s = pick_small_subset(h, as, half, rec.lambda);
                cert.t = pick_small_subset(h, bs, half, rec.lambda);
                cert.w = seed_set;
                cert.averaging = check_average_lambda(h, cert.s, cert.t, cert.w);
                cert.lambda_s = lambda_within(h, cert.s);
                cert.lambda_t = lambda_within(h, cert.t);
                cert.lambda_st = lambda_across(h, cert.s, cert.t);
                cert.lambda_union = lambda_within(h, cert.s.united(cert.t));
                const BigInt pairs_half = BigInt(half) * (half - 1) / 2;
                const BigInt pairs_full = BigInt(2 * half) * (2 * half - 1) / 2;
                cert.identity_holds = Rational(pairs_half) * cert.lambda_s + Rational(pairs_half) * cert.lambda_t +
                                          Rational(BigInt(half * half)) * cert.lambda_st ==
                                      Rational(pairs_full) * cert.lambda_union;
                cert.separation_target = static_cast<double>(rec.lambda) - 2.0 * std::sqrt(static_cast<double>(k));
                cert.separated = cert.lambda_union.convert_to<double>() < cert.separation_target;
                rec.spread = std::move(cert);
            }
            const std::size_t need = rec.lambda + 1 > seed_set.size() ? rec.lambda + 1 - seed_set.size() : 1;
            steps = std::min(k - seed_set.size(), std::max<std::size_t>(1, need));
        }
        rec.seed_set = seed_set;
        rec.greedy_steps = steps;

        GreedyResult grown;
        try {
            grown = greedy_increase(h, seed_set, steps);
        } catch (const Error& err) {
            if (err.witness) trace.witness = err.witness;
            finish_level();
            return stop("no_progress", std::string(error_code_name(err.code())) + ": " + err.what());
        }
        rec.grown_set = grown.final_set;
        const auto next = edges_containing(h, grown.final_set);
        rec.next_size = next.size();
        finish_level();

        if (next.size() < t + 1)
            return stop("no_progress", "only " + std::to_string(next.size()) + " edges contain the grown set");
        auto next_lambda = choose_next_lambda(h, next, trace.spectrum, rec.lambda, params, level_index);
        if (!next_lambda) return stop("no_progress", "no larger lambda level qualifies");

        current = next;
        lambda = *next_lambda;
        branch = *rec.next_branch;
    }
}

}  // namespace hyperspec
