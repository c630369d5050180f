#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fast/tournament.hpp"

namespace fast {

/// One voter's total order over the candidates, best first, stored as
/// candidate ids against the owning profile's symbol table.
using Ballot = std::vector<VertexId>;

/// A non-empty collection of ballots over one shared candidate set.
/// Candidate ids are assigned by first appearance in the first ballot.
struct Profile {
    std::vector<std::string> names;  // id -> candidate name
    std::vector<Ballot> ballots;

    std::size_t candidate_count() const { return names.size(); }
};

enum class TieRule {
    Error,         ///< a tied pair aborts with an error
    SeededRandom,  ///< a tied pair's edge is a fair coin keyed by (seed, pair)
    Lexicographic  ///< a tied pair's edge points from the smaller name
};

/// Majority tournament of a profile: edge u -> v iff strictly more ballots
/// rank u above v; exact ties are resolved per `ties`. Throws
/// std::runtime_error when ties == TieRule::Error and a pair is tied.
Tournament majority_tournament(const Profile& p, TieRule ties, std::uint64_t seed = 0);

/// Kendall tau distance: the number of candidate pairs the two rankings
/// order oppositely. Both arguments must be permutations of the same
/// candidate ids.
Cost kendall_tau(const Ordering& o, const Ballot& b);

/// Sum of kendall_tau(o, ballot) over the profile.
Cost total_kendall_tau(const Ordering& o, const Profile& p);

/// Ballots file: one ballot per line, whitespace-separated candidate names,
/// best first; '#' starts a comment. Every ballot must rank the same
/// candidate set.
Profile parse_ballots(std::istream& in);
Profile load_ballots(const std::string& path);
void write_ballots(std::ostream& out, const Profile& p);

}  // namespace fast
