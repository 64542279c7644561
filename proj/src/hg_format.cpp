#include <hyperspec/hg_format.hpp>

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace hyperspec {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    Error err(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
    err.line = line;
    throw err;
}

std::vector<std::uint64_t> parse_numbers(std::string_view text, std::size_t line) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r')
            ++end;
        std::uint64_t value = 0;
        auto token = text.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            parse_fail(line, "malformed integer '" + std::string(token) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<std::vector<Vertex>> edges;
    std::map<std::vector<Vertex>, std::size_t> seen;

    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] == '#') continue;
        if (is_blank(line)) continue;

        auto numbers = parse_numbers(line, line_no);
        if (!have_header) {
            if (numbers.size() != 2) parse_fail(line_no, "header must be '<n> <m>'");
            n = numbers[0];
            m = numbers[1];
            if (n > std::numeric_limits<Vertex>::max()) parse_fail(line_no, "vertex count too large");
            have_header = true;
            continue;
        }
        if (edges.size() == m) parse_fail(line_no, "more edge lines than declared");
        if (numbers.empty()) parse_fail(line_no, "empty edge");
        std::vector<Vertex> edge;
        for (std::size_t i = 0; i < numbers.size(); ++i) {
            if (numbers[i] >= n) parse_fail(line_no, "vertex " + std::to_string(numbers[i]) + " out of range");
            if (i > 0 && numbers[i] <= numbers[i - 1])
                parse_fail(line_no, "vertex indices must be strictly ascending");
            edge.push_back(static_cast<Vertex>(numbers[i]));
        }
        if (auto [it, fresh] = seen.emplace(edge, line_no); !fresh)
            parse_fail(line_no, "duplicate of edge on line " + std::to_string(it->second));
        edges.push_back(std::move(edge));
    }
    if (!have_header) parse_fail(line_no == 0 ? 1 : line_no, "missing header");
    if (edges.size() != m)
        parse_fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    auto lists = h.edge_lists();
    std::sort(lists.begin(), lists.end());
    std::ostringstream out;
    out << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& edge : lists) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << edge[i];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_hypergraph(buffer.str());
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << serialize_hypergraph(h);
}

}  // namespace hyperspec
