#include "wcprod/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wcprod/errors.hpp"

namespace wcprod {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

// Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
template <class F>
void for_each_upper_pair(int n, F&& f) {
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) f(i, j);
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for_each_upper_pair(n, [&](int i, int j) {
        acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            filled = 0;
        }
    });
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto byte_at = [&](std::size_t p) -> int {
        if (p >= text.size()) throw ParseError("graph6 string is truncated", p);
        int c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", p);
        return c - 63;
    };

    if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
    int n = byte_at(pos);
    ++pos;
    if (n == 63) {
        if (pos < text.size() && text[pos] == 126) throw ParseError("graph6 order exceeds 258047", pos);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }
    if (n > kMaxVertices) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds the 64-vertex limit");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) throw ParseError("graph6 string is truncated", text.size());
    if (text.size() - pos > body) throw ParseError("trailing characters after graph6 data", pos + body);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for_each_upper_pair(n, [&](int i, int j) {
        int chunk = byte_at(pos + k / 6);
        if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
        ++k;
    });
    return Graph::from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list_text(std::string_view text) {
    std::vector<std::vector<long>> rows;
    std::vector<std::size_t> line_no;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(start, end - start);
        std::vector<long> nums;
        std::size_t i = 0;
        while (i < row.size()) {
            if (std::isspace(static_cast<unsigned char>(row[i]))) {
                ++i;
                continue;
            }
            if (row[i] == '#') break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(row.data() + i, row.data() + row.size(), value);
            if (ec != std::errc() || value < 0) throw ParseError("expected a non-negative integer", line);
            i = static_cast<std::size_t>(ptr - row.data());
            nums.push_back(value);
        }
        if (!nums.empty()) {
            if (nums.size() != 2) throw ParseError("expected exactly two integers per line", line);
            rows.push_back(std::move(nums));
            line_no.push_back(line);
        }
        ++line;
        start = end + 1;
    }
    if (rows.empty()) throw ParseError("missing \"n m\" header line", 0);
    const long n = rows[0][0];
    const long m = rows[0][1];
    if (n > kMaxVertices) throw CapacityError("edge list declares " + std::to_string(n) + " vertices; the limit is 64");
    if (static_cast<long>(rows.size()) - 1 != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(rows.size() - 1) +
                             " follow",
                         line_no[0]);
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        long u = rows[r][0];
        long v = rows[r][1];
        if (u >= n || v >= n) throw ParseError("edge endpoint out of range", line_no[r]);
        if (u == v) throw ParseError("self-loop", line_no[r]);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph file", 0);
    if (std::isdigit(static_cast<unsigned char>(content[first]))) return from_edge_list_text(content);
    std::size_t eol = content.find('\n', first);
    std::string_view line(content.data() + first, (eol == std::string::npos ? content.size() : eol) - first);
    return from_graph6(line);
}

}  // namespace wcprod
