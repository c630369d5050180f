#include "fast/aggregate.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fast/rng.hpp"

namespace fast {

Tournament majority_tournament(const Profile& p, TieRule ties, std::uint64_t seed) {
    if (p.ballots.empty()) throw std::invalid_argument("profile has no ballots");
    const std::size_t k = p.candidate_count();
    if (k == 0) throw std::invalid_argument("profile has no candidates");

    // rank[b][c]: position of candidate c on ballot b (0 = best).
    std::vector<std::vector<std::size_t>> rank(p.ballots.size(), std::vector<std::size_t>(k));
    for (std::size_t b = 0; b < p.ballots.size(); ++b) {
        if (p.ballots[b].size() != k)
            throw std::invalid_argument("ballot does not cover the candidate set");
        for (std::size_t pos = 0; pos < k; ++pos) rank[b][p.ballots[b][pos]] = pos;
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(k * (k - 1) / 2);
    std::size_t pair_index = 0;
    for (VertexId u = 0; u + 1 < k; ++u) {
        for (VertexId v = u + 1; v < k; ++v, ++pair_index) {
            std::size_t u_above = 0;
            for (const auto& r : rank)
                if (r[u] < r[v]) ++u_above;
            const std::size_t v_above = p.ballots.size() - u_above;
            if (u_above > v_above) {
                edges.emplace_back(u, v);
            } else if (v_above > u_above) {
                edges.emplace_back(v, u);
            } else {
                switch (ties) {
                    case TieRule::Error:
                        throw std::runtime_error("majority tie between '" + p.names[u] +
                                                 "' and '" + p.names[v] + "'");
                    case TieRule::SeededRandom:
                        if (mix(seed, pair_index) & 1u)
                            edges.emplace_back(u, v);
                        else
                            edges.emplace_back(v, u);
                        break;
                    case TieRule::Lexicographic:
                        if (p.names[u] < p.names[v])
                            edges.emplace_back(u, v);
                        else
                            edges.emplace_back(v, u);
                        break;
                }
            }
        }
    }
    return Tournament::from_edges(k, edges);
}

Cost kendall_tau(const Ordering& o, const Ballot& b) {
    if (o.size() != b.size())
        throw std::invalid_argument("rankings cover different candidate sets");
    const std::size_t k = o.size();
    std::vector<std::size_t> pos_o(k, k), pos_b(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (o[i] >= k || pos_o[o[i]] != k)
            throw std::invalid_argument("ordering is not a permutation of the candidates");
        pos_o[o[i]] = i;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (b[i] >= k || pos_b[b[i]] != k)
            throw std::invalid_argument("ballot is not a permutation of the candidates");
        pos_b[b[i]] = i;
    }
    Cost disagreements = 0;
    for (VertexId u = 0; u + 1 < k; ++u)
        for (VertexId v = u + 1; v < k; ++v)
            if ((pos_o[u] < pos_o[v]) != (pos_b[u] < pos_b[v])) ++disagreements;
    return disagreements;
}

Cost total_kendall_tau(const Ordering& o, const Profile& p) {
    Cost total = 0;
    for (const Ballot& b : p.ballots) total += kendall_tau(o, b);
    return total;
}

Profile parse_ballots(std::istream& in) {
    Profile p;
    std::unordered_map<std::string, VertexId> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (row >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (p.ballots.empty() && ids.empty()) {
            for (const std::string& name : tokens) {
                if (ids.count(name))
                    throw std::invalid_argument("ballots parse error at line " +
                                             std::to_string(lineno) + ": candidate '" + name +
                                             "' repeated");
                ids.emplace(name, static_cast<VertexId>(p.names.size()));
                p.names.push_back(name);
            }
        }
        Ballot b;
        std::vector<bool> seen(p.names.size(), false);
        for (const std::string& name : tokens) {
            const auto it = ids.find(name);
            if (it == ids.end())
                throw std::invalid_argument("ballots parse error at line " + std::to_string(lineno) +
                                         ": unknown candidate '" + name + "'");
            if (seen[it->second])
                throw std::invalid_argument("ballots parse error at line " + std::to_string(lineno) +
                                         ": candidate '" + name + "' repeated");
            seen[it->second] = true;
            b.push_back(it->second);
        }
        if (b.size() != p.names.size())
            throw std::invalid_argument("ballots parse error at line " + std::to_string(lineno) +
                                     ": ballot does not rank every candidate");
        p.ballots.push_back(std::move(b));
    }
    if (p.ballots.empty()) throw std::invalid_argument("ballots file contains no ballots");
    return p;
}

Profile load_ballots(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ballots file: " + path);
    return parse_ballots(in);
}

void write_ballots(std::ostream& out, const Profile& p) {
    for (const Ballot& b : p.ballots) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out << ' ';
            out << p.names[b[i]];
        }
        out << '\n';
    }
}

}  // namespace fast
