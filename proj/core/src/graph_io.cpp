#include "esbss/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "esbss/error.hpp"

namespace esbss {

namespace {

// Upper bound on a declared vertex count; keeps a typo from allocating gigabytes.
constexpr std::uint64_t kMaxVertices = 1u << 24;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(s.substr(start, pos - start));
        }
    }
    return tokens;
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
    std::optional<std::uint64_t> declared_n;
    std::vector<Arc> arcs;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::uint64_t max_id = 0;
    bool any_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        const auto tokens = split_ws(line);
        if (!any_content && tokens.size() == 2 && tokens[0] == "n") {
            any_content = true;
            auto n = to_uint(tokens[1]);
            if (!n || *n > kMaxVertices) {
                throw ParseError(line_no, "invalid vertex count '" + std::string(tokens[1]) + "'");
            }
            declared_n = *n;
            continue;
        }
        any_content = true;

        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected '<tail> <head>', got '" + std::string(line) + "'");
        }
        auto tail = to_uint(tokens[0]);
        auto head = to_uint(tokens[1]);
        if (!tail || !head) {
            throw ParseError(line_no, "non-numeric vertex id in '" + std::string(line) + "'");
        }
        if (*tail >= kMaxVertices || *head >= kMaxVertices) {
            throw ParseError(line_no, "vertex id too large");
        }
        if (declared_n && (*tail >= *declared_n || *head >= *declared_n)) {
            throw ParseError(line_no, "vertex id >= declared n = " + std::to_string(*declared_n));
        }
        if (*tail == *head) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(*tail));
        }
        const Arc arc{static_cast<Vertex>(*tail), static_cast<Vertex>(*head)};
        if (!seen.emplace(arc.tail, arc.head).second) {
            throw ParseError(line_no, "duplicate arc " + std::to_string(arc.tail) + " " +
                                          std::to_string(arc.head));
        }
        max_id = std::max({max_id, *tail, *head});
        arcs.push_back(arc);
    }

    const std::size_t n = declared_n ? *declared_n : (arcs.empty() ? 0 : max_id + 1);
    return Digraph(n, std::move(arcs));
}

Digraph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string write_edge_list(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (const Arc& a : g.arcs()) {
        out << a.tail << ' ' << a.head << '\n';
    }
    return out.str();
}

std::string to_dot(const Digraph& g, std::span<const ArcId> highlight, Vertex label_base) {
    std::vector<bool> marked(g.arc_count(), false);
    for (ArcId a : highlight) {
        if (a.value < marked.size()) {
            marked[a.value] = true;
        }
    }

    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v + label_base << ";\n";
    }
    for (std::size_t k = 0; k < g.arc_count(); ++k) {
        const Arc& a = g.arcs()[k];
        out << "  " << a.tail + label_base << " -> " << a.head + label_base;
        if (marked[k]) {
            out << " [color=red, penwidth=2.5]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace esbss
