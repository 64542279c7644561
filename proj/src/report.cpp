#include <hyperspec/report.hpp>

namespace hyperspec {

namespace {

template <typename Tag>
Json ids(const IndexSet<Tag>& s) {
    return Json(s.values());
}

Json optional_pair(const std::optional<std::pair<EdgeId, EdgeId>>& p) {
    if (!p) return nullptr;
    return Json::array({p->first, p->second});
}

}  // namespace

std::string rational_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Json to_json(const InequalityReport& r) {
    return {{"lhs", rational_string(r.lhs)},
            {"rhs", rational_string(r.rhs)},
            {"holds", r.holds},
            {"slack", rational_string(r.slack)}};
}

Json to_json(const PairInequalityReport& r) {
    Json j = to_json(static_cast<const InequalityReport&>(r));
    j["degree_lhs"] = rational_string(r.degree_lhs);
    j["degree_rhs"] = rational_string(r.degree_rhs);
    j["routes_agree"] = r.routes_agree;
    return j;
}

Json to_json(const GreedyResult& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"disjoint_edge", s.disjoint_edge},
                         {"added", s.added},
                         {"count_before", s.count_before},
                         {"count_after", s.count_after}});
    return {{"final_set", ids(r.final_set)},
            {"base_count", r.base_count},
            {"final_count", r.final_count},
            {"fraction", rational_string(r.fraction)},
            {"steps", steps}};
}

Json to_json(const LambdaPairCheck& c) {
    return {{"valid", c.valid},
            {"disjoint", c.disjoint},
            {"size_ok", c.size_ok},
            {"within_ok", c.within_ok},
            {"cross_ok", c.cross_ok},
            {"x_size", c.x_size},
            {"y_size", c.y_size},
            {"within_violation", optional_pair(c.within_violation)},
            {"cross_violation", optional_pair(c.cross_violation)}};
}

Json to_json(const LambdaPair& p) {
    return {{"x", ids(p.x)}, {"y", ids(p.y)}, {"lambda", p.lambda}, {"validated", p.validated}};
}

Json to_json(const SmallFraction& f) {
    return {{"exhaustive", f.exhaustive},
            {"small", f.small},
            {"total", f.total},
            {"fraction", rational_string(f.fraction)}};
}

Json to_json(const DrcOutcome& d) {
    return {{"u_size", d.u.size()},
            {"u", d.u},
            {"attempts", d.attempts},
            {"exhaustive", d.exhaustive},
            {"cleaned", d.cleaned},
            {"bad_subsets", d.bad_subsets},
            {"subsets_checked", d.subsets_checked},
            {"bad_fraction", rational_string(d.bad_fraction)},
            {"bad_fraction_upper", d.bad_fraction_upper}};
}

Json to_json(const RamseyPairResult& r) {
    return {{"pair", to_json(r.pair)}, {"pool_sizes", r.pool_sizes}, {"pulled_colors", r.pulled_colors}};
}

Json to_json(const DrcPairResult& r) {
    return {{"pair", to_json(r.pair)},
            {"precondition", to_json(r.precondition)},
            {"d", rational_string(r.d)},
            {"n", r.n},
            {"hypotheses",
             {{"positive", r.hypotheses.positive},
              {"vertex_bound", r.hypotheses.vertex_bound},
              {"edge_bound", r.hypotheses.edge_bound},
              {"hold", r.hypotheses.hold()}}},
            {"drc", to_json(r.drc)},
            {"rounds", r.rounds},
            {"search_nodes", r.search_nodes}};
}

Json to_json(const SpreadCertificate& c) {
    return {{"s", ids(c.s)},
            {"t", ids(c.t)},
            {"w", ids(c.w)},
            {"averaging", to_json(c.averaging)},
            {"lambda_s", rational_string(c.lambda_s)},
            {"lambda_t", rational_string(c.lambda_t)},
            {"lambda_st", rational_string(c.lambda_st)},
            {"lambda_union", rational_string(c.lambda_union)},
            {"identity_holds", c.identity_holds},
            {"separation_target", c.separation_target},
            {"separated", c.separated}};
}

Json to_json(const SuiteSummary& s) {
    return {{"name", s.name},
            {"seed", s.seed},
            {"instances", s.instances},
            {"passed", s.passed},
            {"ok", s.ok()},
            {"worst_slack", s.worst_slack ? Json(rational_string(*s.worst_slack)) : Json(nullptr)},
            {"failures", s.failures}};
}

Json to_json(const Error& e) {
    Json j = {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (e.line) j["line"] = *e.line;
    if (e.witness) j["witness"] = *e.witness;
    return j;
}

Json spectrum_json(const Hypergraph& h, const Spectrum& s) {
    std::optional<std::size_t> k = h.num_edges() == 0 ? std::nullopt : is_uniform(h);
    return {{"k", k ? Json(*k) : Json(nullptr)},
            {"intersecting", is_intersecting(h)},
            {"sizes", s.sizes},
            {"multiplicities", s.multiplicities},
            {"num_vertices", h.num_vertices()},
            {"num_edges", h.num_edges()}};
}

Json color_json(const ColorResult& r, const std::optional<RefuteResult>& refute) {
    Json j = {{"status", std::string(color_status_name(r.status))},
              {"coloring", r.coloring ? Json(*r.coloring) : Json(nullptr)},
              {"nodes", r.nodes},
              {"mono_fraction", refute ? Json(refute->mono_fraction) : Json(nullptr)}};
    if (refute) {
        j["trials"] = refute->trials;
        j["seed"] = refute->seed;
        j["mean_mono_edges"] = refute->mean_mono_edges;
    }
    return j;
}

Json hypergraph_json(const Hypergraph& h) {
    return {{"num_vertices", h.num_vertices()}, {"edges", h.edge_lists()}};
}

Json to_json(const IncrementTrace& t) {
    Json levels = Json::array();
    for (const auto& l : t.levels) {
        Json j = {{"lambda", l.lambda},
                  {"branch", std::string(branch_name(l.branch))},
                  {"a_size", l.a_size},
                  {"extractor", l.extractor},
                  {"extractor_failures", l.extractor_failures},
                  {"pair", to_json(l.pair)},
                  {"check", to_json(l.check)},
                  {"schedule_log2", l.schedule_log2},
                  {"schedule_degenerate", l.schedule_degenerate},
                  {"next_branch", l.next_branch ? Json(std::string(branch_name(*l.next_branch))) : Json(nullptr)},
                  {"family_size", l.family_size},
                  {"seed_set", ids(l.seed_set)},
                  {"grown_set", ids(l.grown_set)},
                  {"greedy_steps", l.greedy_steps},
                  {"next_size", l.next_size},
                  {"spread", l.spread ? to_json(*l.spread) : Json(nullptr)}};
        levels.push_back(std::move(j));
    }
    const auto& p = t.params;
    Json params = {{"t", p.t},
                   {"x", p.x},
                   {"d", p.d ? Json(rational_string(*p.d)) : Json(nullptr)},
                   {"schedule_exponent", p.schedule_exponent},
                   {"seed", p.seed},
                   {"paper_constants", p.paper_constants},
                   {"drc_retries", p.drc_retries},
                   {"drc_rounds", p.drc_rounds},
                   {"search_nodes", p.search_nodes},
                   {"exhaustive_limit", p.exhaustive_limit},
                   {"samples", p.samples},
                   {"max_levels", p.max_levels},
                   {"budget_ms", p.budget ? Json(p.budget->count()) : Json(nullptr)}};
    std::vector<std::size_t> lambdas;
    for (const auto& l : t.levels) lambdas.push_back(l.lambda);
    return {{"k", t.k},
            {"spectrum", t.spectrum},
            {"params", params},
            {"levels", levels},
            {"lambdas", lambdas},
            {"stop_reason", t.stop_reason},
            {"stop_detail", t.stop_detail},
            {"witness", t.witness ? Json(*t.witness) : Json(nullptr)},
            {"notes", t.notes}};
}

Json trace_timings(const IncrementTrace& t) {
    std::vector<double> levels;
    for (const auto& l : t.levels) levels.push_back(l.elapsed_ms);
    return {{"total_ms", t.elapsed_ms}, {"levels_ms", levels}};
}

Json to_json(const SearchReport& r) {
    return {{"k", r.k},
            {"best_spectrum_size", r.best_spectrum_size ? Json(*r.best_spectrum_size) : Json(nullptr)},
            {"witness", r.witness ? hypergraph_json(*r.witness) : Json(nullptr)},
            {"witness_spectrum", r.witness_spectrum},
            {"m_tilde_estimate", r.m_tilde_estimate ? Json(*r.m_tilde_estimate) : Json(nullptr)},
            {"exhaustive", r.exhaustive},
            {"budget_exhausted", r.budget_exhausted},
            {"mode", r.mode},
            {"space", {{"max_vertices", r.max_vertices}, {"edge_bound", r.edge_bound}}},
            {"seed", r.seed},
            {"nodes", r.nodes},
            {"candidates", r.candidates},
            {"non_colorable", r.non_colorable},
            {"unknown", r.unknown},
            {"local_moves", r.local_moves}};
}

Json envelope(Json body, Json timings) {
    body["schema"] = "1";
    if (!timings.is_null()) body["timings"] = std::move(timings);
    return body;
}

std::string dump_without_timings(const Json& j) {
    Json copy = j;
    if (copy.is_object()) copy.erase("timings");
    return copy.dump();
}

}  // namespace hyperspec
