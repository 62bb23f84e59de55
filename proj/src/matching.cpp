#include "zfc/matching.hpp"

#include <algorithm>
#include <string>

#include "zfc/error.hpp"

namespace zfc {

Matching canonical(Matching m) {
    std::sort(m.begin(), m.end());
    return m;
}

void require_matching(const BipartiteGraph& b, const Matching& m) {
    std::set<int> rows, cols;
    for (const auto& [r, c] : m) {
        if (!b.has_edge(r, c)) {
            throw InputError("(" + std::to_string(r) + ", " + std::to_string(c) + ") is not an edge");
        }
        if (!rows.insert(r).second) throw InputError("row " + std::to_string(r) + " matched twice");
        if (!cols.insert(c).second) throw InputError("column " + std::to_string(c) + " matched twice");
    }
}

std::optional<ConstrainedCertificate> peel_certificate(const BipartiteGraph& b, const Matching& m) {
    require_matching(b, m);
    std::vector<char> row_live(static_cast<std::size_t>(b.rows()) + 1, 0);
    std::vector<int> mate_of_col(static_cast<std::size_t>(b.cols()) + 1, 0);
    for (const auto& [r, c] : m) {
        row_live[r] = 1;
        mate_of_col[c] = r;
    }
    // live_degree[c]: neighbors of matched column c among live matched rows.
    std::vector<int> live_degree(static_cast<std::size_t>(b.cols()) + 1, 0);
    std::vector<char> col_live(static_cast<std::size_t>(b.cols()) + 1, 0);
    for (const auto& [r, c] : m) {
        col_live[c] = 1;
        for (int row : b.col_neighbors(c)) live_degree[c] += row_live[row];
    }

    ConstrainedCertificate order;
    order.reserve(m.size());
    while (order.size() < m.size()) {
        int pick = 0;
        for (int c = 1; c <= b.cols(); ++c) {
            if (col_live[c] && live_degree[c] == 1) {
                pick = c;
                break;
            }
        }
        if (pick == 0) return std::nullopt;
        const int row = mate_of_col[pick];
        order.push_back({row, pick});
        col_live[pick] = 0;
        row_live[row] = 0;
        for (int c : b.row_neighbors(row)) {
            if (col_live[c]) --live_degree[c];
        }
    }
    return order;
}

bool is_unique_on_matched_vertices(const BipartiteGraph& b, const Matching& m) {
    require_matching(b, m);
    std::vector<int> mate_of_row(static_cast<std::size_t>(b.rows()) + 1, 0);
    std::vector<int> mate_of_col(static_cast<std::size_t>(b.cols()) + 1, 0);
    for (const auto& [r, c] : m) {
        mate_of_row[r] = c;
        mate_of_col[c] = r;
    }
    // Row r -> row r' when r has a non-matching edge to the column matched
    // with r'. A directed cycle is an alternating cycle.
    enum : char { White, Grey, Done };
    std::vector<char> state(static_cast<std::size_t>(b.rows()) + 1, White);
    for (const auto& [start, unused] : m) {
        if (state[start] != White) continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        state[start] = Grey;
        while (!stack.empty()) {
            auto& [r, next] = stack.back();
            const auto& nbrs = b.row_neighbors(r);
            if (next == nbrs.size()) {
                state[r] = Done;
                stack.pop_back();
                continue;
            }
            const int c = nbrs[next++];
            if (c == mate_of_row[r] || mate_of_col[c] == 0) continue;
            const int succ = mate_of_col[c];
            if (state[succ] == Grey) return false;
            if (state[succ] == White) {
                state[succ] = Grey;
                stack.push_back({succ, 0});
            }
        }
    }
    return true;
}

ConstrainedCheck is_constrained(const BipartiteGraph& b, const Matching& m) {
    auto certificate = peel_certificate(b, m);
    const bool unique = is_unique_on_matched_vertices(b, m);
    if (certificate.has_value() != unique) {
        throw ConsistencyError("peeling and alternating-cycle checks disagree on whether a matching is constrained");
    }
    return {unique, std::move(certificate)};
}

namespace {

// Kuhn's augmenting paths over the edges accepted by `usable`.
template <typename Usable>
int augmenting_matching_size(const BipartiteGraph& b, Usable&& usable) {
    std::vector<int> mate_of_col(static_cast<std::size_t>(b.cols()) + 1, 0);
    std::vector<int> seen(static_cast<std::size_t>(b.cols()) + 1, 0);
    int stamp = 0;
    auto augment = [&](auto&& self, int r) -> bool {
        for (int c : b.row_neighbors(r)) {
            if (seen[c] == stamp || !usable(r, c)) continue;
            seen[c] = stamp;
            if (mate_of_col[c] == 0 || self(self, mate_of_col[c])) {
                mate_of_col[c] = r;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int r = 1; r <= b.rows(); ++r) {
        ++stamp;
        if (augment(augment, r)) ++size;
    }
    return size;
}

class ConstrainedSearch {
public:
    ConstrainedSearch(const BipartiteGraph& b, const std::set<BiEdge>& forbidden, std::optional<int> stop_at)
        : b_(b),
          row_used_(static_cast<std::size_t>(b.rows()) + 1, 0),
          col_used_(static_cast<std::size_t>(b.cols()) + 1, 0),
          edge_rank_(static_cast<std::size_t>(b.rows()) * static_cast<std::size_t>(b.cols()), -1) {
        for (const auto& e : b.edges()) {
            if (forbidden.contains(e)) continue;
            edge_rank_[cell(e.first, e.second)] = static_cast<int>(candidates_.size());
            candidates_.push_back(e);
        }
        limit_ = std::min(b.rows(), b.cols());
        if (stop_at) limit_ = std::min(limit_, *stop_at);
    }

    MaxConstrainedMatching run() {
        descend(0);
        return {static_cast<int>(best_.size()), canonical(best_)};
    }

private:
    std::size_t cell(int r, int c) const {
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(b_.cols()) + static_cast<std::size_t>(c - 1);
    }

    bool done() const { return static_cast<int>(best_.size()) >= limit_; }

    int residual_bound(std::size_t from) const {
        const int from_rank = static_cast<int>(from);
        return augmenting_matching_size(b_, [&](int r, int c) {
            const int rank = edge_rank_[cell(r, c)];
            return rank >= from_rank && !row_used_[r] && !col_used_[c];
        });
    }

    void descend(std::size_t from) {
        if (done()) return;
        if (current_.size() > best_.size()) best_ = current_;
        if (done() || from == candidates_.size()) return;
        if (static_cast<int>(current_.size()) + residual_bound(from) <= static_cast<int>(best_.size())) return;

        const auto [r, c] = candidates_[from];
        if (!row_used_[r] && !col_used_[c]) {
            current_.push_back({r, c});
            // Subsets of constrained matchings are constrained, so a
            // non-constrained partial matching cannot be extended.
            if (peel_certificate(b_, current_)) {
                row_used_[r] = col_used_[c] = 1;
                descend(from + 1);
                row_used_[r] = col_used_[c] = 0;
            }
            current_.pop_back();
        }
        descend(from + 1);
    }

    const BipartiteGraph& b_;
    std::vector<BiEdge> candidates_;
    std::vector<char> row_used_;
    std::vector<char> col_used_;
    std::vector<int> edge_rank_;
    Matching current_;
    Matching best_;
    int limit_ = 0;
};

}  // namespace

MaxConstrainedMatching max_constrained_matching_avoiding(const BipartiteGraph& b,
                                                         const std::set<BiEdge>& forbidden_edges,
                                                         std::optional<int> stop_at) {
    return ConstrainedSearch(b, forbidden_edges, stop_at).run();
}

MaxConstrainedMatching max_constrained_matching(const BipartiteGraph& b, const VertexSet& forbidden_diagonal) {
    std::set<BiEdge> forbidden;
    for (int i : forbidden_diagonal) forbidden.insert({i, i});
    return max_constrained_matching_avoiding(b, forbidden);
}

int maximum_matching_size(const BipartiteGraph& b) {
    return augmenting_matching_size(b, [](int, int) { return true; });
}

int triangle_number(const DirectedGraph& g) {
    return max_constrained_matching(bipartite_of_graph(g)).size;
}

MatchedZeroForcingSet matching_to_zfs(const DirectedGraph& g, const Matching& m) {
    const BipartiteGraph b = bipartite_of_graph(g);
    const auto check = is_constrained(b, m);
    if (!check.constrained) throw InputError("matching is not constrained in the bipartite graph of the graph");

    MatchedZeroForcingSet out;
    for (Vertex v = 1; v <= g.size(); ++v) out.set.insert(v);
    for (const auto& [row, col] : *check.certificate) {
        out.set.erase(row);
        out.forces.push_back({col, row});
    }
    const auto black = replay_forces(g, GraphKind::LoopDirected, out.set, out.forces);
    if (!black || static_cast<int>(black->size()) != g.size()) {
        throw ConsistencyError("force list read off a constrained matching does not replay");
    }
    return out;
}

Matching zfs_to_matching(const DirectedGraph& g, const VertexSet& s, const ForceList& forces) {
    const auto black = replay_forces(g, GraphKind::LoopDirected, s, forces);
    if (!black) throw InputError("force list does not replay under the loop color change rule");
    if (static_cast<int>(black->size()) != g.size()) throw InputError("force list does not complete the graph");

    Matching m;
    for (const auto& [forcer, forced] : forces) m.push_back({forced, forcer});
    m = canonical(std::move(m));
    if (!is_constrained(bipartite_of_graph(g), m).constrained) {
        throw ConsistencyError("matching read off a chronological list of forces is not constrained");
    }
    return m;
}

}  // namespace zfc
