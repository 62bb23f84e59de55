#include "zfc/zero_forcing.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

#include "zfc/error.hpp"

namespace zfc {

namespace {

// Deterministic propagation shared by propagate and find_force_list_avoiding.
PropagationResult run_rule(const DirectedGraph& g, GraphKind kind, const VertexSet& initial_black,
                           const VertexSet& forbidden_self) {
    require_kind(g, kind);
    require_vertices(g, initial_black);
    const int n = g.size();
    std::vector<char> black(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : initial_black) black[v] = 1;

    // white_out[v]: number of white out-neighbors of v, v itself included
    // when it carries a loop.
    std::vector<int> white_out(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w : g.out_neighbors(v)) white_out[v] += black[w] ? 0 : 1;
    }

    PropagationResult result;
    const bool simple = kind == GraphKind::SimpleDirected;
    Vertex v = 1;
    while (v <= n) {
        if (white_out[v] != 1 || (simple && !black[v])) {
            ++v;
            continue;
        }
        Vertex target = 0;
        for (Vertex w : g.out_neighbors(v)) {
            if (!black[w]) {
                target = w;
                break;
            }
        }
        if (target == v && forbidden_self.contains(v)) {
            ++v;
            continue;
        }
        black[target] = 1;
        for (Vertex u : g.in_neighbors(target)) --white_out[u];
        result.forces.push_back({v, target});
        v = 1;
    }

    for (Vertex u = 1; u <= n; ++u) {
        if (black[u]) result.black.insert(u);
    }
    result.complete = static_cast<int>(result.black.size()) == n;
    return result;
}

// Bitmask closure for the exhaustive search; only valid for n <= 64.
class MaskClosure {
public:
    MaskClosure(const DirectedGraph& g, GraphKind kind)
        : n_(g.size()), simple_(kind == GraphKind::SimpleDirected), out_(static_cast<std::size_t>(n_), 0) {
        for (const auto& [from, to] : g.edges()) out_[from - 1] |= bit(to - 1);
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool completes(std::uint64_t black) const {
        bool changed = true;
        while (changed && black != full_) {
            changed = false;
            for (int v = 0; v < n_; ++v) {
                if (simple_ && !(black & bit(v))) continue;
                const std::uint64_t white = out_[v] & ~black;
                if (white != 0 && std::has_single_bit(white)) {
                    black |= white;
                    changed = true;
                }
            }
        }
        return black == full_;
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    int n_;
    bool simple_;
    std::vector<std::uint64_t> out_;
    std::uint64_t full_ = 0;
};

// Visits the size-k subsets of {0..n-1} in lexicographic order until `visit`
// returns true. Returns the accepted subset, if any.
template <typename Visit>
std::optional<std::vector<int>> first_combination(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (visit(idx)) return idx;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PropagationResult propagate(const DirectedGraph& g, GraphKind kind, const VertexSet& initial_black) {
    return run_rule(g, kind, initial_black, {});
}

bool is_zero_forcing_set(const DirectedGraph& g, GraphKind kind, const VertexSet& s) {
    return propagate(g, kind, s).complete;
}

ZeroForcingSet zero_forcing_number(const DirectedGraph& g, GraphKind kind) {
    require_kind(g, kind);
    const int n = g.size();
    if (n <= 64) {
        const MaskClosure closure(g, kind);
        for (int k = 0; k <= n; ++k) {
            auto hit = first_combination(n, k, [&](const std::vector<int>& idx) {
                std::uint64_t mask = 0;
                for (int i : idx) mask |= std::uint64_t{1} << i;
                return closure.completes(mask);
            });
            if (hit) {
                VertexSet witness;
                for (int i : *hit) witness.insert(i + 1);
                return {k, witness};
            }
        }
    } else {
        for (int k = 0; k <= n; ++k) {
            auto hit = first_combination(n, k, [&](const std::vector<int>& idx) {
                VertexSet s;
                for (int i : idx) s.insert(i + 1);
                return is_zero_forcing_set(g, kind, s);
            });
            if (hit) {
                VertexSet witness;
                for (int i : *hit) witness.insert(i + 1);
                return {k, witness};
            }
        }
    }
    // The full vertex set always completes.
    throw ConsistencyError("zero forcing search found no zero forcing set");
}

std::optional<ForceList> find_force_list_avoiding(const DirectedGraph& g, GraphKind kind, const VertexSet& s,
                                                  const VertexSet& forbidden_self) {
    auto result = run_rule(g, kind, s, forbidden_self);
    if (!result.complete) return std::nullopt;
    return std::move(result.forces);
}

std::optional<VertexSet> replay_forces(const DirectedGraph& g, GraphKind kind, const VertexSet& initial_black,
                                       const ForceList& forces) {
    require_kind(g, kind);
    require_vertices(g, initial_black);
    VertexSet black = initial_black;
    for (const auto& [forcer, forced] : forces) {
        if (!g.contains(forcer) || !g.contains(forced)) return std::nullopt;
        if (black.contains(forced)) return std::nullopt;
        if (kind == GraphKind::SimpleDirected && !black.contains(forcer)) return std::nullopt;
        if (!g.has_edge(forcer, forced)) return std::nullopt;
        for (Vertex w : g.out_neighbors(forcer)) {
            if (w != forced && !black.contains(w)) return std::nullopt;
        }
        black.insert(forced);
    }
    return black;
}

}  // namespace zfc
