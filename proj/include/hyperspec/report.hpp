#pragma once

#include <hyperspec/coloring.hpp>
#include <hyperspec/error.hpp>
#include <hyperspec/extraction.hpp>
#include <hyperspec/hypergraph.hpp>
#include <hyperspec/lemmas.hpp>
#include <hyperspec/search.hpp>
#include <hyperspec/suites.hpp>

#include <json.hpp>

namespace hyperspec {

using Json = nlohmann::json;

/// Exact rationals travel as "p/q" strings ("p" when integral).
std::string rational_string(const Rational& q);

Json to_json(const InequalityReport& r);
Json to_json(const PairInequalityReport& r);
Json to_json(const GreedyResult& r);
Json to_json(const LambdaPairCheck& c);
Json to_json(const LambdaPair& p);
Json to_json(const SmallFraction& f);
Json to_json(const DrcOutcome& d);
Json to_json(const RamseyPairResult& r);
Json to_json(const DrcPairResult& r);
Json to_json(const SpreadCertificate& c);
Json to_json(const SuiteSummary& s);
Json to_json(const Error& e);

Json spectrum_json(const Hypergraph& h, const Spectrum& s);
Json color_json(const ColorResult& r, const std::optional<RefuteResult>& refute);
Json hypergraph_json(const Hypergraph& h);

/// Trace body; per-level times go to trace_timings.
Json to_json(const IncrementTrace& t);
Json trace_timings(const IncrementTrace& t);

Json to_json(const SearchReport& r);

/// Adds "schema": "1" and, when `timings` is non-null, a "timings" member.
Json envelope(Json body, Json timings = nullptr);

/// Dump without the "timings" member, for byte comparison across runs.
std::string dump_without_timings(const Json& j);

}  // namespace hyperspec
