// Acceptance run: one PASS/FAIL line per criterion. Values marked "oracle"
// are recomputed here from plain edge lists, independently of the library
// kernels they check.

#include <hyperspec/canonical.hpp>
#include <hyperspec/coloring.hpp>
#include <hyperspec/constructions.hpp>
#include <hyperspec/extraction.hpp>
#include <hyperspec/lemmas.hpp>
#include <hyperspec/report.hpp>
#include <hyperspec/search.hpp>
#include <hyperspec/suites.hpp>

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

using namespace hyperspec;

namespace {

// Wall-clock limits in seconds; 0 means the criterion states none.
constexpr double kLimitFano = 1;
constexpr double kLimitIterated = 10;
constexpr double kLimitEvidence = 30;
constexpr double kLimitSparse = 60;
constexpr double kLimitDrc = 60;
constexpr double kLimitExtraction = 120;
constexpr double kLimitSearch = 600;

constexpr std::uint64_t kSolverBudget = 100'000'000;
constexpr std::uint64_t kSuiteSeed = kDefaultSeed;
constexpr int kDrcSeeds = 100;
constexpr int kDrcRequired = 95;

using Clock = std::chrono::steady_clock;
using Lists = std::vector<std::vector<Vertex>>;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    Json data = Json::object();           // deterministic results, compared by the rerun
    std::optional<double> timed_seconds;  // part of the run the limit applies to

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// ---- oracles ---------------------------------------------------------------

std::size_t meet(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> c;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
    return c.size();
}

std::map<std::size_t, std::uint64_t> oracle_spectrum(const Lists& l) {
    std::map<std::size_t, std::uint64_t> out;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) ++out[meet(l[i], l[j])];
    return out;
}

bool oracle_mono(const Lists& l, const Coloring& c) {
    for (const auto& e : l) {
        bool same = true;
        for (Vertex v : e) same = same && c[v] == c[e[0]];
        if (same) return true;
    }
    return false;
}

/// Every 2-coloring of the vertex set has a monochromatic edge.
bool oracle_not_colorable(std::size_t n, const Lists& l) {
    Coloring c(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t v = 0; v < n; ++v) c[v] = mask >> v & 1U;
        if (!oracle_mono(l, c)) return false;
    }
    return true;
}

std::size_t oracle_cover(std::size_t n, const Lists& l) {
    std::size_t best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool covers = true;
        for (const auto& e : l) {
            bool hit = false;
            for (Vertex v : e) hit = hit || (mask >> v & 1U);
            if (!hit) { covers = false; break; }
        }
        if (covers) best = std::min<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

Rational oracle_avg_within(const Lists& l, const std::vector<EdgeId>& s) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) sum += meet(l[s[i]], l[s[j]]);
    return Rational(sum) / Rational(BigInt(s.size() * (s.size() - 1) / 2));
}

Rational oracle_avg_across(const Lists& l, const std::vector<EdgeId>& s, const std::vector<EdgeId>& t) {
    BigInt sum = 0;
    for (EdgeId a : s)
        for (EdgeId b : t) sum += meet(l[a], l[b]);
    return Rational(sum) / Rational(BigInt(s.size() * t.size()));
}

bool oracle_lambda_pair(const Lists& l, const std::vector<EdgeId>& x, const std::vector<EdgeId>& y,
                        std::size_t lambda, std::size_t t) {
    if (x.size() != t) return false;
    for (EdgeId a : x)
        if (std::find(y.begin(), y.end(), a) != y.end()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (meet(l[x[i]], l[x[j]]) > lambda) return false;
    for (EdgeId a : x)
        for (EdgeId b : y)
            if (meet(l[a], l[b]) < lambda) return false;
    return true;
}

std::uint64_t oracle_containing(const Lists& l, const std::vector<Vertex>& x) {
    std::uint64_t count = 0;
    for (const auto& e : l)
        count += std::includes(e.begin(), e.end(), x.begin(), x.end());
    return count;
}

/// Some vertex permutation maps the edge set of `a` onto that of `b`.
bool oracle_isomorphic(std::size_t n, const Lists& a, const Lists& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::vector<Vertex>> target = b;
    std::sort(target.begin(), target.end());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Lists image;
        for (const auto& e : a) {
            std::vector<Vertex> im;
            for (Vertex v : e) im.push_back(perm[v]);
            std::sort(im.begin(), im.end());
            image.push_back(im);
        }
        std::sort(image.begin(), image.end());
        if (image == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<EdgeId> ids(const EdgeIndexSet& s) { return {s.begin(), s.end()}; }

// ---- criteria --------------------------------------------------------------

Outcome fano_suite() {
    Outcome o;
    const auto f = fano();
    const auto l = f.edge_lists();
    o.require(is_uniform(f) == std::optional<std::size_t>(3), "3-uniform");
    o.require(is_intersecting(f), "intersecting");
    const auto s = intersection_spectrum(f);
    o.require(s.sizes == std::vector<std::size_t>{1} && s.multiplicities == std::vector<std::uint64_t>{21},
              "spectrum {1} with multiplicity 21");
    o.require(oracle_spectrum(l) == std::map<std::size_t, std::uint64_t>{{1, 21}}, "oracle spectrum");
    const auto r = find_2_coloring(f);
    o.require(r.status == ColorStatus::NotColorable, "solver returns not_colorable");
    o.require(oracle_not_colorable(7, l), "oracle: all 128 colorings have a monochromatic line");
    o.require(cover_number(f) == std::optional<std::size_t>(3), "cover number 3");
    o.require(oracle_cover(7, l) == 3, "oracle cover scan gives 3");
    const auto c = three_coloring_intersecting(f);
    o.require(!monochromatic_edge(f, c) && !oracle_mono(l, c), "3-coloring is proper");
    o.note("solver nodes " + std::to_string(r.nodes));
    return o;
}

Outcome iterated_suite() {
    Outcome o;
    const auto h = iterated_fano(2);
    const auto l = h.edge_lists();
    const std::uint64_t expected_edges = 7 * 7 * 7 * 7;  // 7^((9−1)/2)
    o.require(h.num_vertices() == 49, "49 vertices");
    o.require(h.num_edges() == expected_edges, "2401 edges");
    o.require(is_uniform(h) == std::optional<std::size_t>(9), "9-uniform");
    o.require(is_intersecting(h), "intersecting");
    const auto s = intersection_spectrum(h);
    o.require(s.sizes == std::vector<std::size_t>{1, 3, 5, 7}, "spectrum {1,3,5,7}");
    const auto oracle = oracle_spectrum(l);
    std::uint64_t pairs = 0;
    bool agree = oracle.size() == s.sizes.size();
    for (std::size_t i = 0; agree && i < s.sizes.size(); ++i) {
        agree = oracle.count(s.sizes[i]) && oracle.at(s.sizes[i]) == s.multiplicities[i];
        pairs += s.multiplicities[i];
    }
    o.require(agree, "oracle pair scan matches sizes and multiplicities");
    o.require(pairs == 2'881'200, "2,881,200 pairs scanned");
    return o;
}

Outcome evidence_suite() {
    Outcome o;
    const auto start = Clock::now();
    const auto f = fano();
    const auto h = compose(f, f);
    const auto l = h.edge_lists();
    const auto refute = random_refute(h, 10'000, kSuiteSeed);
    o.require(refute.mono_fraction == 1.0, "random_refute mono fraction 1.0");
    std::uint64_t verified = 0;
    for (std::uint64_t i = 0; i < 10'000; ++i) {
        const auto c = random_coloring(h.num_vertices(), derive_seed(kSuiteSeed, "evidence", i));
        const EdgeId e = compositional_mono_edge(f, f, h, c);
        bool mono = true;
        for (Vertex v : l[e]) mono = mono && c[v] == c[l[e][0]];
        verified += mono;
    }
    o.require(verified == 10'000, "compositional edge verified monochromatic on all 10^4 colorings");
    o.timed_seconds = seconds_since(start);

    SolveBudget budget;
    budget.max_nodes = kSolverBudget;
    const auto r = find_2_coloring(h, budget);
    o.require(r.status != ColorStatus::Colorable, "exact solver does not report colorable");
    o.note("exact solver under 1e8 nodes: " + std::string(color_status_name(r.status)) + " after " +
           std::to_string(r.nodes) + " nodes, " + std::to_string(static_cast<int>(r.elapsed_ms / 1000)) + " s" +
           (r.status == ColorStatus::Unknown ? " (compositional certificate is the binding check)" : ""));
    return o;
}

Outcome sparse_suite() {
    Outcome o;
    for (std::size_t k : {4, 5, 6}) {
        std::uint64_t colorable = 0, nodes = 0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            const auto h = sparse_uniform_instance(k, kSuiteSeed, i);
            o.require(h.num_edges() == (std::size_t{1} << (k - 1)) - 1 && is_uniform(h) == k,
                      "instance shape k=" + std::to_string(k));
            const auto r = find_2_coloring(h);
            nodes += r.nodes;
            if (r.status == ColorStatus::Colorable && !oracle_mono(h.edge_lists(), *r.coloring)) ++colorable;
        }
        o.require(colorable == 200, "all 200 k=" + std::to_string(k) + " instances colorable with verified witness");
        o.data["k" + std::to_string(k)] = {{"colorable", colorable}, {"nodes", nodes}};
    }
    return o;
}

Outcome pair_suite() {
    Outcome o;
    const auto f = fano();
    const auto tight = check_pair_inequality(f, f);
    o.require(tight.lhs == 42 && tight.rhs == 42 && tight.holds, "Fano tight case lhs = rhs = 42");
    const auto summary = pair_inequality_suite(1000, kSuiteSeed);
    o.require(summary.ok(), "1000 instances hold with agreeing degree route");
    std::uint64_t oracle_agree = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto inst = pair_instance(kSuiteSeed, i);
        const auto la = inst.a.edge_lists(), lb = inst.b.edge_lists();
        BigInt within = 0, cross = 0;
        for (std::size_t a = 0; a < la.size(); ++a)
            for (std::size_t b = a + 1; b < la.size(); ++b) within += meet(la[a], la[b]);
        for (std::size_t a = 0; a < lb.size(); ++a)
            for (std::size_t b = a + 1; b < lb.size(); ++b) within += meet(lb[a], lb[b]);
        for (const auto& a : la)
            for (const auto& b : lb) cross += meet(a, b);
        const Rational rhs = Rational(cross) - Rational(BigInt(la.size() * (la[0].size() + lb[0].size())), BigInt(2));
        const auto r = check_pair_inequality(inst.a, inst.b);
        oracle_agree += r.lhs == Rational(within) && r.rhs == rhs && Rational(within) >= rhs;
    }
    o.require(oracle_agree == 1000, "oracle double sums agree and hold on all 1000");
    o.data = to_json(summary);
    return o;
}

Outcome planted_suite() {
    Outcome o;
    const auto summary = average_lambda_suite(500, kSuiteSeed);
    o.require(summary.ok(), "500 planted instances hold");
    std::uint64_t agree = 0;
    std::map<std::size_t, std::uint64_t> by_x;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto inst = planted_instance(kSuiteSeed, i);
        const auto l = inst.h.edge_lists();
        const auto s = ids(inst.s), t = ids(inst.t);
        const std::size_t k = l[0].size();
        const Rational lhs = (oracle_avg_within(l, s) + oracle_avg_within(l, t)) / 2;
        const Rational rhs = oracle_avg_across(l, s, t) + Rational(BigInt(inst.w.size()), BigInt(2)) -
                             Rational(BigInt(k), BigInt(s.size() - 1));
        const auto r = check_average_lambda(inst.h, inst.s, inst.t, inst.w);
        agree += r.lhs == lhs && r.rhs == rhs && lhs >= rhs;
        ++by_x[inst.w.size()];
    }
    o.require(agree == 500, "oracle rationals agree and hold on all 500");
    o.require(by_x.size() == 6, "planted sizes x = 0..5 all occur");
    o.data = to_json(summary);
    return o;
}

Outcome greedy_suite() {
    Outcome o;
    for (const auto& [name, h] : {std::pair<std::string, Hypergraph>{"fano", fano()},
                                  std::pair<std::string, Hypergraph>{"iterated_fano_2", iterated_fano(2)}}) {
        const auto l = h.edge_lists();
        const std::size_t k = l[0].size();
        Json runs = Json::array();
        for (std::size_t i = 0; i <= 3; ++i) {
            const auto r = greedy_increase(h, VertexSet{}, i);
            const std::vector<Vertex> x(r.final_set.begin(), r.final_set.end());
            const Rational oracle(BigInt(oracle_containing(l, x)), BigInt(l.size()));
            const Rational bound = Rational(1) / Rational(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(i)));
            o.require(r.fraction == oracle, name + " i=" + std::to_string(i) + " fraction matches recount");
            o.require(r.fraction >= bound, name + " i=" + std::to_string(i) + " fraction >= k^-i");
            if (name == "fano" && i == 1) o.require(r.fraction == Rational(3, 7), "Fano i=1 fraction 3/7");
            runs.push_back(to_json(r));
        }
        o.data[name] = runs;
    }
    return o;
}

Outcome drc_suite() {
    Outcome o;
    const Rational d(1, 2);
    const std::size_t t = 2, n = 8;
    int successes = 0, hypotheses = 0;
    Json per_seed = Json::array();
    for (int seed = 0; seed < kDrcSeeds; ++seed) {
        const auto g = random_graph(512, 0.6, static_cast<std::uint64_t>(seed));
        // m > 4 t d^-t n = 256 and |E| >= d m^2 / 2 = 65536
        const bool hyp = drc_hypotheses(g, d, t, n).hold();
        hypotheses += hyp && g.num_edges() >= 65536;
        if (!hyp) {
            per_seed.push_back(nullptr);
            continue;
        }
        const auto out = dependent_random_choice(g, d, t, n, static_cast<std::uint64_t>(seed));
        bool ok = false;
        if (out && out->u.size() > 16) {
            std::vector<std::bitset<512>> rows(512);
            for (std::size_t u = 0; u < 512; ++u)
                for (std::size_t v = 0; v < 512; ++v) rows[u][v] = g.adjacent(u, v);
            std::uint64_t bad = 0, total = 0;
            for (std::size_t i = 0; i < out->u.size(); ++i)
                for (std::size_t j = i + 1; j < out->u.size(); ++j) {
                    bad += (rows[out->u[i]] & rows[out->u[j]]).count() < n;
                    ++total;
                }
            ok = bad * 16 < total;  // fraction < (2t)^-t = 1/16
        }
        successes += ok;
        per_seed.push_back(out ? to_json(*out) : Json(nullptr));
    }
    o.require(hypotheses == kDrcSeeds, "hypotheses hold on every seed");
    o.require(successes >= kDrcRequired, std::to_string(successes) + " of 100 seeds succeed (need 95)");
    o.note(std::to_string(successes) + "/100 seeds succeed");
    o.data = {{"successes", successes}, {"runs", per_seed}};
    return o;
}

Outcome folklore_suite() {
    Outcome o;
    const std::vector<std::pair<std::string, Hypergraph>> corpus = {
        {"fano", fano()},
        {"complete_subsets(3,2)", complete_subsets(3, 2)},
        {"complete_subsets(5,3)", complete_subsets(5, 3)},
        {"ramsey_clique(6,3)", ramsey_clique_hypergraph(6, 3)},
    };
    for (const auto& [name, h] : corpus) {
        const auto l = h.edge_lists();
        const auto r = find_2_coloring(h);
        o.require(r.status == ColorStatus::NotColorable, name + " not 2-colorable");
        o.require(oracle_not_colorable(h.num_vertices(), l), name + " oracle: every coloring has a mono edge");
        o.require(intersection_spectrum(h).contains(1), name + " has 1 in its spectrum");
        o.require(oracle_spectrum(l).count(1) == 1, name + " oracle spectrum contains 1");
        o.data[name] = intersection_spectrum(h).sizes;
    }
    return o;
}

Outcome extraction_suite() {
    Outcome o;
    const auto h = iterated_fano(2);
    const auto l = h.edge_lists();
    std::vector<EdgeId> all(h.num_edges());
    std::iota(all.begin(), all.end(), 0);
    const EdgeIndexSet edges(all);
    const std::size_t t = 4;
    const std::uint64_t seed = 0;

    const auto ramsey = find_lambda_pair_ramsey(h, edges, t, seed);
    o.require(validate_lambda_pair(h, ramsey.pair.x, ramsey.pair.y, ramsey.pair.lambda, t).valid,
              "Ramsey pair validates");
    o.require(oracle_lambda_pair(l, ids(ramsey.pair.x), ids(ramsey.pair.y), ramsey.pair.lambda, t),
              "Ramsey pair passes the oracle check");

    ExtractionParams params;
    params.t = t;
    params.seed = seed;
    const auto drc = find_lambda_pair_drc(h, edges, 1, params);
    o.require(validate_lambda_pair(h, drc.pair.x, drc.pair.y, 1, t).valid, "DRC pair validates");
    o.require(oracle_lambda_pair(l, ids(drc.pair.x), ids(drc.pair.y), 1, t), "DRC pair passes the oracle check");

    const auto trace = density_increment_run(h, params);
    const std::vector<std::size_t> allowed{1, 3, 5, 7};
    bool increasing = true, valid = true;
    std::string lambdas;
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
        const auto& lv = trace.levels[i];
        lambdas += (i ? "," : "") + std::to_string(lv.lambda);
        increasing = increasing && std::count(allowed.begin(), allowed.end(), lv.lambda) == 1 &&
                     (i == 0 || lv.lambda > trace.levels[i - 1].lambda);
        valid = valid && lv.check.valid && oracle_lambda_pair(l, ids(lv.pair.x), ids(lv.pair.y), lv.lambda, t);
    }
    o.require(trace.levels.size() >= 2, "at least 2 levels");
    o.require(increasing, "levels strictly increase within {1,3,5,7}");
    o.require(valid, "every level's pair validates");
    o.note("levels lambda = " + lambdas + ", stop: " + trace.stop_reason);
    o.data = {{"ramsey", to_json(ramsey)}, {"drc", to_json(drc)}, {"trace", to_json(trace)}};
    return o;
}

Outcome search_suite() {
    Outcome o;
    const auto r = min_spectrum_search(3, 7, SearchBudget{}, kSuiteSeed);
    o.require(r.best_spectrum_size == std::optional<std::size_t>(1), "best spectrum size 1");
    o.require(r.exhaustive, "exhaustive");
    o.require(r.witness.has_value(), "witness present");
    if (r.witness) {
        const auto& w = *r.witness;
        const auto l = w.edge_lists();
        o.require(w.num_edges() == 7, "witness has 7 edges");
        o.require(is_uniform(w) == std::optional<std::size_t>(3) && is_intersecting(w), "witness 3-uniform intersecting");
        o.require(w.num_vertices() == 7 && oracle_isomorphic(7, l, fano().edge_lists()),
                  "oracle permutation maps witness onto Fano");
        o.require(oracle_not_colorable(w.num_vertices(), l), "oracle: witness not 2-colorable");
        o.require(oracle_spectrum(l).size() == 1, "oracle spectrum size 1");
    }
    o.note("canonical families " + std::to_string(r.nodes) + ", m~ " +
           (r.m_tilde_estimate ? std::to_string(*r.m_tilde_estimate) : std::string("none")));
    o.data = to_json(r);
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
};

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Fano suite", kLimitFano, fano_suite},
        {2, "iterated Fano suite", kLimitIterated, iterated_suite},
        {3, "non-2-colorability evidence for iterated_fano(2)", kLimitEvidence, evidence_suite},
        {4, "fewer than 2^(k-1) edges are 2-colorable (k = 4,5,6)", kLimitSparse, sparse_suite},
        {5, "pair inequality suite", 0, pair_suite},
        {6, "planted averaging suite", 0, planted_suite},
        {7, "greedy increase fractions", 0, greedy_suite},
        {8, "dependent random choice statistics", kLimitDrc, drc_suite},
        {9, "non-2-colorable corpus has intersection size 1", 0, folklore_suite},
        {10, "extraction round trip on iterated_fano(2)", kLimitExtraction, extraction_suite},
        {11, "search ground truth k = 3, 7 vertices", kLimitSearch, search_suite},
    };

    int failures = 0;
    std::map<int, std::string> first_dumps;
    auto report = [&](int id, const std::string& title, bool pass, const std::string& timing,
                      const std::vector<std::string>& notes) {
        std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << timing << ")";
        for (const auto& n : notes) std::cout << "; " << n;
        std::cout << std::endl;
        failures += !pass;
    };

    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const Error& e) {
            o.require(false, std::string("error ") + std::string(error_code_name(e.code())) + ": " + e.what());
        }
        const double total = seconds_since(start);
        const double timed = o.timed_seconds.value_or(total);
        std::string timing = seconds(timed);
        if (c.limit > 0) {
            timing += " < " + seconds(c.limit);
            if (o.timed_seconds) timing += ", total " + seconds(total);
            o.require(timed < c.limit, "time limit");
        }
        if (c.id >= 4) first_dumps[c.id] = o.data.dump();
        report(c.id, c.title, o.pass, timing, o.notes);
    }

    // Determinism: rerun 4..11 and compare the deterministic JSON.
    {
        const auto start = Clock::now();
        std::vector<std::string> notes;
        bool same = true;
        for (const auto& c : criteria) {
            if (c.id < 4) continue;
            std::string dump;
            try {
                dump = c.run().data.dump();
            } catch (const Error& e) {
                dump = std::string("error ") + e.what();
            }
            if (dump != first_dumps[c.id]) {
                same = false;
                notes.push_back("criterion " + std::to_string(c.id) + " differs on rerun");
            }
        }
        if (same) notes.push_back("criteria 4-11 byte-identical on rerun");
        report(12, "determinism of criteria 4-11", same, seconds(seconds_since(start)), notes);
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
