#include "fast/tournament.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fast/rng.hpp"

namespace fast {

Tournament::Tournament(std::size_t n) : n_(n), bits_((n * (n - 1) / 2 + 63) / 64, 0) {
    if (n == 0) throw std::invalid_argument("tournament needs at least one vertex");
}

Tournament Tournament::transitive(std::size_t n) {
    Tournament t(n);
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) t.set_bit(u, v, true);
    return t;
}

Tournament Tournament::uniform_random(std::size_t n, std::uint64_t seed) {
    Tournament t(n);
    Rng rng(seed);
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) t.set_bit(u, v, rng.coin());
    return t;
}

Tournament Tournament::noisy_transitive(std::size_t n, double flip_prob, std::uint64_t seed) {
    if (!(flip_prob >= 0.0 && flip_prob <= 1.0))
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    Tournament t = transitive(n);
    Rng rng(seed);
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.next_double() < flip_prob) t.set_bit(u, v, false);
    return t;
}

Tournament Tournament::from_edges(std::size_t n,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Tournament t(n);
    std::vector<bool> seen(t.pair_count(), false);
    for (const auto& [from, to] : edges) {
        if (from >= n || to >= n) throw std::invalid_argument("edge endpoint out of range");
        if (from == to) throw std::invalid_argument("self-loop is not allowed");
        const VertexId u = from < to ? from : to;
        const VertexId v = from < to ? to : from;
        const std::size_t idx = t.pair_index(u, v);
        if (seen[idx]) throw std::invalid_argument("duplicate edge for a vertex pair");
        seen[idx] = true;
        t.set_bit(u, v, from == u);
    }
    if (edges.size() != t.pair_count())
        throw std::invalid_argument("edge list does not cover every vertex pair");
    return t;
}

Tournament Tournament::from_mask(std::size_t n, std::uint64_t mask) {
    Tournament t(n);
    if (t.pair_count() > 64) throw std::invalid_argument("mask construction limited to 64 pairs");
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            t.set_bit(u, v, (mask >> t.pair_index(u, v)) & 1u);
    return t;
}

std::size_t Tournament::out_degree(VertexId v) const {
    std::size_t deg = 0;
    for (VertexId u = 0; u < n_; ++u)
        if (u != v && edge(v, u)) ++deg;
    return deg;
}

std::size_t Tournament::out_degree_within(VertexId v, const std::vector<VertexId>& group) const {
    std::size_t deg = 0;
    for (VertexId u : group)
        if (u != v && edge(v, u)) ++deg;
    return deg;
}

Ordering identity_order(std::size_t n) {
    Ordering o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<VertexId>(i);
    return o;
}

void validate_ordering(const Tournament& t, const Ordering& o) {
    if (o.size() != t.vertex_count())
        throw std::invalid_argument("ordering length does not match vertex count");
    std::vector<bool> seen(o.size(), false);
    for (VertexId v : o) {
        if (v >= o.size() || seen[v]) throw std::invalid_argument("ordering is not a permutation");
        seen[v] = true;
    }
}

Cost backward_count(const Tournament& t, const Ordering& o) {
    validate_ordering(t, o);
    Cost count = 0;
    for (std::size_t i = 0; i + 1 < o.size(); ++i)
        for (std::size_t j = i + 1; j < o.size(); ++j)
            if (t.edge(o[j], o[i])) ++count;
    return count;
}

std::vector<std::pair<VertexId, VertexId>> backward_edges(const Tournament& t, const Ordering& o) {
    validate_ordering(t, o);
    std::vector<std::pair<VertexId, VertexId>> result;
    for (std::size_t i = 0; i + 1 < o.size(); ++i)
        for (std::size_t j = i + 1; j < o.size(); ++j)
            if (t.edge(o[j], o[i])) result.emplace_back(o[j], o[i]);
    return result;
}

bool is_locally_minimal(const Tournament& t, const Ordering& o) {
    validate_ordering(t, o);
    for (std::size_t i = 0; i + 1 < o.size(); ++i)
        if (!t.edge(o[i], o[i + 1])) return false;
    return true;
}

namespace {

// Strips comments, returns the next line with any content.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
    throw std::invalid_argument("tournament parse error at line " + std::to_string(lineno) + ": " +
                                what);
}

}  // namespace

Tournament parse_tournament(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing header");
    std::istringstream header(line);
    std::string keyword;
    long long n = -1;
    std::string extra;
    if (!(header >> keyword >> n) || keyword != "tournament" || (header >> extra))
        parse_fail(lineno, "expected 'tournament <n>'");
    if (n < 1) parse_fail(lineno, "vertex count must be at least 1");

    std::vector<std::pair<VertexId, VertexId>> edges;
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    while (edges.size() < expected) {
        if (!next_content_line(in, line, lineno))
            parse_fail(lineno, "missing pairs: got " + std::to_string(edges.size()) + " of " +
                                   std::to_string(expected) + " edges");
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || (row >> extra)) parse_fail(lineno, "expected '<u> <v>'");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(lineno, "vertex id out of range");
        if (u == v) parse_fail(lineno, "self-loop");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_content_line(in, line, lineno)) parse_fail(lineno, "trailing content after edge list");
    try {
        return Tournament::from_edges(static_cast<std::size_t>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("tournament parse error: ") + e.what());
    }
}

Tournament load_tournament(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tournament file: " + path);
    return parse_tournament(in);
}

void write_tournament(std::ostream& out, const Tournament& t) {
    const std::size_t n = t.vertex_count();
    out << "tournament " << n << "\n";
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            if (t.edge(u, v))
                out << u << " " << v << "\n";
            else
                out << v << " " << u << "\n";
        }
}

Ordering parse_order_csv(const std::string& text, std::size_t n) {
    Ordering o;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long long v = -1;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("order entry is not a number: '" + item + "'");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw std::invalid_argument("order entry is not a number: '" + item + "'");
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("order entry out of range: " + item);
        o.push_back(static_cast<VertexId>(v));
    }
    if (o.size() != n) throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<bool> seen(n, false);
    for (VertexId v : o) {
        if (seen[v]) throw std::invalid_argument("order repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    return o;
}

std::string format_order_csv(const Ordering& o) {
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(o[i]);
    }
    return s;
}

}  // namespace fast
