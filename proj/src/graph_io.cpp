#include <cliquesub/errors.hpp>
#include <cliquesub/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cliquesub {

namespace {

    bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    struct LineCursor {
        std::string_view line;
        std::size_t pos = 0;
        std::size_t line_no;
        std::size_t line_start;

        void skip_space()
        {
            while (pos < line.size() && is_space(line[pos]))
                ++pos;
        }
        bool at_end()
        {
            skip_space();
            return pos == line.size();
        }
        std::uint64_t number(const char * what)
        {
            skip_space();
            std::uint64_t value = 0;
            auto first = line.data() + pos;
            auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
            if (ec != std::errc{} || ptr == first)
                throw ParseError(std::string("expected ") + what, line_no, line_start + pos);
            pos += static_cast<std::size_t>(ptr - first);
            return value;
        }
    };

    constexpr std::uint64_t max_vertices = 68719476735ULL;

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    std::optional<std::uint64_t> declared;
    std::uint64_t max_end = 0;
    bool any_edge = false;
    bool seen_content = false;

    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        LineCursor cur{text.substr(start, end - start), 0, line_no, start};
        cur.skip_space();
        if (! cur.at_end() && cur.line[cur.pos] != '#') {
            if (cur.line[cur.pos] == 'n') {
                if (seen_content)
                    throw ParseError("header 'n <count>' must precede the edges", line_no, start + cur.pos);
                ++cur.pos;
                if (cur.pos < cur.line.size() && ! is_space(cur.line[cur.pos]))
                    throw ParseError("malformed header", line_no, start + cur.pos);
                declared = cur.number("vertex count");
                if (*declared > max_vertices)
                    throw ParseError("vertex count too large", line_no, start);
            }
            else {
                std::uint64_t u = cur.number("vertex index");
                std::uint64_t v = cur.number("vertex index");
                if (! cur.at_end())
                    throw ParseError("trailing characters after edge", line_no, start + cur.pos);
                if (u == v)
                    throw ParseError("loop at vertex " + std::to_string(u), line_no, start);
                if (declared && (u >= *declared || v >= *declared))
                    throw ParseError("endpoint outside declared vertex count", line_no, start);
                if (u > max_vertices || v > max_vertices)
                    throw ParseError("vertex index too large", line_no, start);
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                max_end = std::max({max_end, u, v});
                any_edge = true;
            }
            seen_content = true;
        }
        if (end == text.size())
            break;
        start = end + 1;
    }

    std::uint64_t n = declared ? *declared : (any_edge ? max_end + 1 : 0);
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text)
{
    std::size_t offset = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        offset = header.size();
    std::size_t stop = text.size();
    while (stop > offset && is_space(text[stop - 1]))
        --stop;
    std::string_view body = text.substr(offset, stop - offset);

    auto sextet = [&](std::size_t i) -> std::uint64_t {
        if (i >= body.size())
            throw ParseError("graph6 data truncated", 1, offset + i);
        auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside the graph6 range 63..126", 1, offset + i);
        return c - 63u;
    };

    if (body.empty())
        throw ParseError("empty graph6 string", 1, offset);
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(body[0]) != 126) {
        n = sextet(0);
        pos = 1;
    }
    else if (body.size() > 1 && static_cast<unsigned char>(body[1]) == 126) {
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | sextet(i);
        pos = 8;
    }
    else {
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | sextet(i);
        pos = 4;
    }

    std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
    std::uint64_t expected = pos + (bits + 5) / 6;
    if (body.size() != expected)
        throw ParseError("graph6 length " + std::to_string(body.size()) + " does not match " + std::to_string(n) +
                             " vertices (expected " + std::to_string(expected) + ")",
                         1, offset + std::min<std::uint64_t>(body.size(), expected));

    std::vector<Bitset> rows(n, Bitset(n));
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            std::uint64_t chunk = sextet(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1u) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    if (bits % 6) {
        std::uint64_t last = sextet(pos + bits / 6);
        if (last & ((1u << (6 - bits % 6)) - 1))
            throw ParseError("nonzero padding bits in graph6 data", 1, offset + pos + bits / 6);
    }
    return Graph::from_rows(std::move(rows));
}

std::string format_graph6(const Graph & g)
{
    std::uint64_t n = g.order();
    if (n > max_vertices)
        throw InputError("graph too large for graph6");
    std::string out;
    if (n < 63)
        out.push_back(static_cast<char>(n + 63));
    else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph read_graph(std::istream & in, GraphFormat format)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

void write_graph(std::ostream & out, const Graph & g, GraphFormat format)
{
    if (format == GraphFormat::graph6)
        out << format_graph6(g) << '\n';
    else
        out << format_edge_list(g);
}

GraphFormat format_for_path(const std::filesystem::path & path)
{
    auto ext = path.extension().string();
    return (ext == ".g6" || ext == ".graph6") ? GraphFormat::graph6 : GraphFormat::edge_list;
}

Graph read_graph_file(const std::filesystem::path & path) { return read_graph_file(path, format_for_path(path)); }

Graph read_graph_file(const std::filesystem::path & path, GraphFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open graph file " + path.string());
    return read_graph(in, format);
}

void write_graph_file(const std::filesystem::path & path, const Graph & g, GraphFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InputError("cannot write graph file " + path.string());
    write_graph(out, g, format);
}

} // namespace cliquesub
