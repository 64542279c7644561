#include <hyperspec/lemmas.hpp>

#include <string>

namespace hyperspec {

namespace {

InequalityReport compare(Rational lhs, Rational rhs) {
    InequalityReport r;
    r.holds = lhs >= rhs;
    r.slack = lhs - rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

std::uint64_t within_sum(const Hypergraph& h) {
    std::uint64_t sum = 0;
    for (EdgeId a = 0; a < h.num_edges(); ++a)
        for (EdgeId b = a + 1; b < h.num_edges(); ++b) sum += h.intersection_size(a, b);
    return sum;
}

}  // namespace

PairInequalityReport check_pair_inequality(const Hypergraph& a, const Hypergraph& b) {
    const std::size_t k = require_uniform(a);
    const std::size_t k2 = require_uniform(b);
    if (a.num_vertices() != b.num_vertices())
        fail(ErrorCode::MismatchedVertexCount, "A and B must share the vertex set");
    if (a.num_edges() != b.num_edges())
        fail(ErrorCode::MismatchedEdgeCount, "A and B must have the same number of edges");
    const std::uint64_t ell = a.num_edges();

    std::uint64_t cross = 0;
    for (EdgeId e = 0; e < a.num_edges(); ++e)
        for (EdgeId f = 0; f < b.num_edges(); ++f) cross += and_popcount(a.edge_bits(e), b.edge_bits(f));

    PairInequalityReport report;
    static_cast<InequalityReport&>(report) =
        compare(Rational(within_sum(a) + within_sum(b)),
                Rational(BigInt(cross)) - Rational(BigInt(ell * (k + k2)), BigInt(2)));

    const auto da = a.degrees();
    const auto db = b.degrees();
    BigInt pairs = 0, products = 0, halves = 0;
    for (std::size_t x = 0; x < da.size(); ++x) {
        pairs += BigInt(da[x]) * (da[x] == 0 ? 0 : da[x] - 1) / 2;
        pairs += BigInt(db[x]) * (db[x] == 0 ? 0 : db[x] - 1) / 2;
        products += BigInt(da[x]) * db[x];
        halves += da[x] + db[x];
    }
    report.degree_lhs = Rational(pairs);
    report.degree_rhs = Rational(products) - Rational(halves, BigInt(2));
    report.routes_agree = report.degree_lhs == report.lhs && report.degree_rhs == report.rhs;
    return report;
}

InequalityReport check_average_lambda(const Hypergraph& h, const EdgeIndexSet& s,
                                      const EdgeIndexSet& t, const VertexSet& w) {
    const std::size_t k = require_uniform(h);
    h.check_edge_set(s);
    h.check_edge_set(t);
    h.check_vertex_set(w);
    if (s.size() != t.size()) fail(ErrorCode::SizeMismatch, "S and T must have the same size");
    if (s.size() < 2) fail(ErrorCode::SizeMismatch, "S and T need at least 2 edges each");
    if (!s.disjoint_from(t)) fail(ErrorCode::OverlappingSets, "S and T must be disjoint");

    const auto wbits = h.bits_of(w);
    for (EdgeId e : s)
        if (!bits_subset(wbits, h.edge_bits(e)))
            fail(ErrorCode::WitnessViolation, "W is not contained in edge " + std::to_string(e));
    for (EdgeId e : t)
        if (!bits_disjoint(wbits, h.edge_bits(e)))
            fail(ErrorCode::WitnessViolation, "W meets edge " + std::to_string(e) + " of T");

    const std::uint64_t ell = s.size();
    Rational lhs = (lambda_within(h, s) + lambda_within(h, t)) / 2;
    Rational rhs = lambda_across(h, s, t) + Rational(BigInt(w.size()), BigInt(2)) -
                   Rational(BigInt(k), BigInt(ell - 1));
    return compare(std::move(lhs), std::move(rhs));
}

GreedyResult greedy_increase(const Hypergraph& h, const VertexSet& x, std::size_t steps) {
    const std::size_t k = require_uniform(h);
    h.check_vertex_set(x);
    if (x.size() > k || steps > k - x.size())
        fail(ErrorCode::StepOutOfRange, "steps must satisfy 0 <= i <= k - |X|");
    if (!is_intersecting(h)) fail(ErrorCode::NotIntersecting, "greedy_increase needs an intersecting hypergraph");

    std::vector<Word> current = h.bits_of(x);
    GreedyResult result;
    result.base_count = count_edges_containing(h, current);
    if (result.base_count == 0) fail(ErrorCode::EmptySet, "no edge contains X");

    std::vector<Vertex> members(x.begin(), x.end());
    std::uint64_t count = result.base_count;
    for (std::size_t step = 0; step < steps; ++step) {
        std::optional<EdgeId> avoid;
        for (EdgeId e = 0; e < h.num_edges(); ++e)
            if (bits_disjoint(current, h.edge_bits(e))) { avoid = e; break; }
        if (!avoid) {
            std::vector<std::uint8_t> witness(h.num_vertices(), 0);
            for (Vertex v : members) witness[v] = 1;
            Error err(ErrorCode::NoDisjointEdge,
                      "every edge meets the current set of size " + std::to_string(members.size()) +
                          "; the hypergraph is 2-colorable");
            err.witness = std::move(witness);
            throw err;
        }

        Vertex best_vertex = 0;
        std::uint64_t best_count = 0;
        bool have = false;
        for (Vertex v : h.edge(*avoid)) {
            auto trial = current;
            trial[v / 64] |= Word{1} << (v % 64);
            const std::uint64_t c = count_edges_containing(h, trial);
            if (!have || c > best_count) { best_vertex = v; best_count = c; have = true; }
        }
        current[best_vertex / 64] |= Word{1} << (best_vertex % 64);
        members.push_back(best_vertex);
        result.steps.push_back({*avoid, best_vertex, count, best_count});
        count = best_count;
    }
    result.final_set = VertexSet(std::move(members));
    result.final_count = count;
    result.fraction = Rational(BigInt(count), BigInt(result.base_count));
    return result;
}

bool is_lambda_small(const Hypergraph& h, const EdgeIndexSet& s, std::size_t lambda) {
    h.check_edge_set(s);
    if (s.size() < 2) fail(ErrorCode::TooFewEdges, "is_lambda_small needs at least 2 edges");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (h.intersection_size(s[i], s[j]) >= lambda) return false;
    return true;
}

LambdaPairCheck validate_lambda_pair(const Hypergraph& h, const EdgeIndexSet& x,
                                     const EdgeIndexSet& y, std::size_t lambda, std::size_t t) {
    h.check_edge_set(x);
    h.check_edge_set(y);
    LambdaPairCheck check;
    check.x_size = x.size();
    check.y_size = y.size();
    check.disjoint = x.disjoint_from(y);
    check.size_ok = x.size() == t;
    check.within_ok = true;
    for (std::size_t i = 0; i < x.size() && check.within_ok; ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (h.intersection_size(x[i], x[j]) > lambda) {
                check.within_ok = false;
                check.within_violation = std::make_pair(x[i], x[j]);
                break;
            }
    check.cross_ok = true;
    for (EdgeId a : x) {
        for (EdgeId b : y)
            if (h.intersection_size(a, b) < lambda) {
                check.cross_ok = false;
                check.cross_violation = std::make_pair(a, b);
                break;
            }
        if (!check.cross_ok) break;
    }
    check.valid = check.disjoint && check.size_ok && check.within_ok && check.cross_ok;
    return check;
}

}  // namespace hyperspec
