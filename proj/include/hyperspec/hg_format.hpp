#pragma once

#include <hyperspec/hypergraph.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace hyperspec {

// ".hg" text format:
//
//   # optional comment lines
//   <n> <m>
//   <ascending vertex indices of edge 0>
//   ...
//
// Serialization is canonical: edges in lexicographic order, single spaces,
// LF endings, no comments.

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace hyperspec
