#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fast {

using VertexId = std::uint32_t;
using Cost = std::uint64_t;

/// An ordering of a tournament's vertices: a permutation of 0..n-1 read
/// left (best / earliest) to right.
using Ordering = std::vector<VertexId>;

/// Complete directed graph on n vertices: exactly one directed edge per
/// unordered pair. The orientation is stored as one bit per pair {u,v},
/// u < v, set when the edge points u -> v. Immutable after construction;
/// all queries are safe to run concurrently.
class Tournament {
public:
    /// Transitive tournament: edge i -> j iff i < j. n >= 1.
    static Tournament transitive(std::size_t n);

    /// Every pair's orientation drawn by an independent fair coin from the
    /// seeded stream. Same (n, seed) always yields the same tournament.
    static Tournament uniform_random(std::size_t n, std::uint64_t seed);

    /// Transitive tournament with each edge flipped independently with
    /// probability flip_prob in [0, 1].
    static Tournament noisy_transitive(std::size_t n, double flip_prob, std::uint64_t seed);

    /// Build from an explicit edge list; every unordered pair must appear
    /// exactly once. Throws std::invalid_argument on duplicates, self-loops,
    /// out-of-range ids, or missing pairs.
    static Tournament from_edges(std::size_t n,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Orientation bits taken from the low pair_count() bits of mask, in
    /// pair-index order. Requires pair_count() <= 64; used by the
    /// exhaustive enumeration oracles.
    static Tournament from_mask(std::size_t n, std::uint64_t mask);

    std::size_t vertex_count() const { return n_; }
    std::size_t pair_count() const { return n_ * (n_ - 1) / 2; }

    /// True iff the directed edge u -> v is present. u != v.
    bool edge(VertexId u, VertexId v) const {
        return u < v ? bit(u, v) : !bit(v, u);
    }

    /// Number of vertices this vertex has an outgoing edge to.
    std::size_t out_degree(VertexId v) const;

    /// Out-degree of v restricted to the subtournament induced by `group`
    /// (v itself is skipped if present).
    std::size_t out_degree_within(VertexId v, const std::vector<VertexId>& group) const;

    bool operator==(const Tournament& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    explicit Tournament(std::size_t n);

    // Index of pair {u,v}, u < v, in row-major upper-triangular order.
    std::size_t pair_index(VertexId u, VertexId v) const {
        return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 +
               (v - u - 1);
    }
    bool bit(VertexId u, VertexId v) const {
        const std::size_t i = pair_index(u, v);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void set_bit(VertexId u, VertexId v, bool value) {
        const std::size_t i = pair_index(u, v);
        const std::uint64_t m = 1ull << (i & 63);
        if (value)
            bits_[i >> 6] |= m;
        else
            bits_[i >> 6] &= ~m;
    }

    std::size_t n_;
    std::vector<std::uint64_t> bits_;
};

/// Identity ordering 0, 1, ..., n-1.
Ordering identity_order(std::size_t n);

/// Throws std::invalid_argument unless o is a permutation of t's vertices.
void validate_ordering(const Tournament& t, const Ordering& o);

/// Number of backward edges: pairs (x earlier, y later in o) with edge y -> x.
Cost backward_count(const Tournament& t, const Ordering& o);

/// The backward edges themselves, as directed pairs (from, to). The list
/// length always equals backward_count.
std::vector<std::pair<VertexId, VertexId>> backward_edges(const Tournament& t, const Ordering& o);

/// True iff every adjacent pair's edge points forward, i.e. no adjacent
/// swap can reduce the backward count.
bool is_locally_minimal(const Tournament& t, const Ordering& o);

/// Text format:
///   # comment lines start with '#'
///   tournament <n>
///   <u> <v>        (n(n-1)/2 lines, edge u -> v, each pair exactly once)
/// The parser rejects duplicates, self-loops, missing pairs and trailing
/// garbage. parse(write(t)) == t for every tournament.
Tournament parse_tournament(std::istream& in);
Tournament load_tournament(const std::string& path);
void write_tournament(std::ostream& out, const Tournament& t);

/// Comma-separated vertex ids ("2,0,1") as used on the command line.
/// Validates that the result is a permutation of 0..n-1.
Ordering parse_order_csv(const std::string& text, std::size_t n);
std::string format_order_csv(const Ordering& o);

}  // namespace fast
