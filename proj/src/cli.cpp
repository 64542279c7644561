#include <hyperspec/cli.hpp>
#include <hyperspec/coloring.hpp>
#include <hyperspec/constructions.hpp>
#include <hyperspec/extraction.hpp>
#include <hyperspec/hg_format.hpp>
#include <hyperspec/report.hpp>
#include <hyperspec/search.hpp>
#include <hyperspec/suites.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <sstream>

namespace hyperspec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw CLI::ValidationError(what, "not an unsigned integer: " + text);
    return v;
}

void emit(std::ostream& out, const Json& j, bool plain) {
    if (!plain) {
        out << j.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() || value.is_array()) continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

struct Options {
    std::string threads;
    bool plain = false;

    // construct
    std::string family;
    std::vector<std::string> params;
    std::string output;
    std::string outer, inner;
    std::string size_cap = std::to_string(kDefaultSizeCap);
    std::string seed = "0xE11975";

    // shared
    std::string file;

    // color
    std::string budget_nodes;
    std::string budget_ms;
    std::string trials;

    // verify
    std::string suite = "lemmas";
    std::string instances = "200";

    // extract
    std::string mode = "increment";
    std::string t = "4";
    std::string x = "4";
    std::string lambda;
    bool paper_constants = false;

    // search
    std::string k;
    std::string max_vertices;
};

int cmd_construct(const Options& o, std::ostream& out) {
    ConstructionSpec spec;
    spec.family = o.family;
    spec.seed = parse_u64(o.seed, "--seed");
    spec.size_cap = parse_u64(o.size_cap, "--size-cap");
    for (const auto& p : o.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param", "expected name=value: " + p);
        spec.params[p.substr(0, eq)] = static_cast<std::int64_t>(parse_u64(p.substr(eq + 1), "--param"));
    }
    Hypergraph h;
    if (spec.family == "compose") {
        if (o.outer.empty() || o.inner.empty())
            throw CLI::ValidationError("compose", "needs --outer and --inner files");
        h = compose(read_hypergraph(o.outer), read_hypergraph(o.inner), spec.size_cap);
    } else {
        h = build(spec);
    }
    if (o.output.empty()) {
        out << serialize_hypergraph(h);
        return 0;
    }
    write_hypergraph(o.output, h);
    const auto k = h.num_edges() == 0 ? std::nullopt : is_uniform(h);
    Json body = {{"family", spec.family},
                 {"params", spec.params},
                 {"num_vertices", h.num_vertices()},
                 {"num_edges", h.num_edges()},
                 {"k", k ? Json(*k) : Json(nullptr)},
                 {"output", o.output}};
    if (spec.family == "random-uniform") body["seed"] = spec.seed;
    emit(out, envelope(body), o.plain);
    return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.file);
    const auto start = Clock::now();
    const auto s = intersection_spectrum(h);
    emit(out, envelope(spectrum_json(h, s), {{"scan_ms", ms_since(start)}}), o.plain);
    return 0;
}

int cmd_color(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.file);
    SolveBudget budget;
    if (!o.budget_nodes.empty()) budget.max_nodes = parse_u64(o.budget_nodes, "--budget-nodes");
    if (!o.budget_ms.empty()) budget.max_time = std::chrono::milliseconds(parse_u64(o.budget_ms, "--budget-ms"));
    const auto r = find_2_coloring(h, budget);
    std::optional<RefuteResult> refute;
    if (!o.trials.empty()) refute = random_refute(h, parse_u64(o.trials, "--trials"), parse_u64(o.seed, "--seed"));
    emit(out, envelope(color_json(r, refute), {{"solve_ms", r.elapsed_ms}}), o.plain);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto seed = parse_u64(o.seed, "--seed");
    const auto n = parse_u64(o.instances, "--instances");
    std::vector<SuiteSummary> suites;
    if (o.suite == "lemmas") {
        suites.push_back(pair_inequality_suite(n, seed));
        suites.push_back(average_lambda_suite(n, seed));
    } else if (o.suite == "coloring") {
        for (std::size_t k : {4, 5, 6}) suites.push_back(sparse_coloring_suite(k, n, seed));
    } else {
        throw CLI::ValidationError("--suite", "expected lemmas or coloring");
    }
    Json list = Json::array();
    Json timings = Json::object();
    bool ok = true;
    for (const auto& s : suites) {
        list.push_back(to_json(s));
        timings[s.name + "_ms"] = s.elapsed_ms;
        ok = ok && s.ok();
    }
    emit(out, envelope({{"suite", o.suite}, {"seed", seed}, {"suites", list}, {"ok", ok}}, timings), o.plain);
    return ok ? 0 : 1;
}

int cmd_extract(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.file);
    const auto seed = parse_u64(o.seed, "--seed");
    const std::size_t k = require_uniform(h);
    ExtractionParams params = o.paper_constants ? ExtractionParams::paper(k, seed) : ExtractionParams{};
    params.seed = seed;
    if (!o.paper_constants) {
        params.t = parse_u64(o.t, "--t");
        params.x = parse_u64(o.x, "--x");
    }
    if (!o.budget_ms.empty()) params.budget = std::chrono::milliseconds(parse_u64(o.budget_ms, "--budget-ms"));

    std::vector<EdgeId> all(h.num_edges());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    const EdgeIndexSet edges(std::move(all));
    const auto start = Clock::now();
    if (o.mode == "increment") {
        const auto trace = density_increment_run(h, params);
        emit(out, envelope(to_json(trace), trace_timings(trace)), o.plain);
    } else if (o.mode == "ramsey") {
        const auto r = find_lambda_pair_ramsey(h, edges, params.t, seed);
        emit(out, envelope(to_json(r), {{"total_ms", ms_since(start)}}), o.plain);
    } else if (o.mode == "drc") {
        const std::size_t lambda = o.lambda.empty() ? intersection_spectrum(h).sizes.front()
                                                    : parse_u64(o.lambda, "--lambda");
        const auto r = find_lambda_pair_drc(h, edges, lambda, params);
        emit(out, envelope(to_json(r), {{"total_ms", ms_since(start)}}), o.plain);
    } else {
        throw CLI::ValidationError("--mode", "expected increment, ramsey or drc");
    }
    return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
    SearchBudget budget;
    if (!o.budget_nodes.empty()) budget.max_nodes = parse_u64(o.budget_nodes, "--budget-nodes");
    if (!o.budget_ms.empty()) budget.max_time = std::chrono::milliseconds(parse_u64(o.budget_ms, "--budget-ms"));
    const auto r = min_spectrum_search(parse_u64(o.k, "--k"), parse_u64(o.max_vertices, "--max-vertices"), budget,
                                       parse_u64(o.seed, "--seed"));
    Json body = to_json(r);
    if (!o.output.empty() && r.witness) {
        write_hypergraph(o.output, *r.witness);
        body["output"] = o.output;
    }
    emit(out, envelope(body, {{"total_ms", r.elapsed_ms}}), o.plain);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection spectra of intersecting hypergraphs", "hyperspec"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads for pair scans (default: HYPERSPEC_THREADS or hardware)");
    app.add_flag("--plain", o.plain, "print top-level scalar fields as 'key: value' lines instead of JSON");

    auto* construct = app.add_subcommand("construct", "build a named family and write it as .hg");
    construct->add_option("--family", o.family, "fano | iterated-fano | complete-subsets | ramsey-clique | random-uniform | compose")
        ->required();
    construct->add_option("--param", o.params, "family parameter name=value (m; n,k; N,k; n,k,m)");
    construct->add_option("-o,--output", o.output, "output .hg path (stdout when omitted)");
    construct->add_option("--outer", o.outer, "outer factor for compose");
    construct->add_option("--inner", o.inner, "inner factor for compose");
    construct->add_option("--size-cap", o.size_cap, "maximum edge count");
    construct->add_option("--seed", o.seed, "seed for random-uniform");

    auto* spectrum = app.add_subcommand("spectrum", "intersection spectrum of a .hg file");
    spectrum->add_option("file", o.file)->required();

    auto* color = app.add_subcommand("color", "exact 2-colorability, optionally with random refutation");
    color->add_option("file", o.file)->required();
    color->add_option("--budget-nodes", o.budget_nodes, "solver node budget (default 1e8)");
    color->add_option("--budget-ms", o.budget_ms, "solver time budget");
    color->add_option("--trials", o.trials, "random colorings for the refutation check");
    color->add_option("--seed", o.seed, "seed for the refutation check");

    auto* verify = app.add_subcommand("verify", "randomized property suites");
    verify->add_option("--suite", o.suite, "lemmas | coloring");
    verify->add_option("--seed", o.seed);
    verify->add_option("--instances", o.instances, "instances per suite");

    auto* extract = app.add_subcommand("extract", "lambda-pair extraction and the density-increment trace");
    extract->add_option("file", o.file)->required();
    extract->add_option("--mode", o.mode, "increment | ramsey | drc");
    extract->add_option("--t", o.t, "size of X");
    extract->add_option("--x", o.x, "triple width");
    extract->add_option("--lambda", o.lambda, "level for --mode drc (default: smallest spectrum value)");
    extract->add_option("--seed", o.seed);
    extract->add_flag("--paper-constants", o.paper_constants, "t = 2ceil(sqrt k), x = 10t, d = 1/(8k)");
    extract->add_option("--budget-ms", o.budget_ms, "time budget for the increment loop");

    auto* search = app.add_subcommand("search", "minimum spectrum size over small non-2-colorable intersecting families");
    search->add_option("--k", o.k)->required();
    search->add_option("--max-vertices", o.max_vertices)->required();
    search->add_option("--budget-ms", o.budget_ms);
    search->add_option("--budget-nodes", o.budget_nodes, "canonical families visited (default 1e7)");
    search->add_option("--seed", o.seed);
    search->add_option("-o,--output", o.output, "write the witness as .hg");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (!o.threads.empty()) set_default_threads(static_cast<unsigned>(parse_u64(o.threads, "--threads")));

        if (*construct) return cmd_construct(o, out);
        if (*spectrum) return cmd_spectrum(o, out);
        if (*color) return cmd_color(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*extract) return cmd_extract(o, out);
        if (*search) return cmd_search(o, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        err << app.help();
        return 2;
    } catch (const Error& e) {
        err << envelope(to_json(e)).dump() << '\n';
        return 1;
    }
}

}  // namespace hyperspec
