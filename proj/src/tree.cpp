#include <vector>

#include "zfc/error.hpp"
#include "zfc/zero_forcing.hpp"

namespace zfc {

namespace {

// Parent links and a preorder of the tree rooted at vertex 1. Returns false
// when some vertex is unreachable.
bool root_tree(const DirectedGraph& t, std::vector<Vertex>& parent, std::vector<Vertex>& order) {
    const int n = t.size();
    parent.assign(static_cast<std::size_t>(n) + 1, 0);
    order.clear();
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : t.out_neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent[w] = v;
            stack.push_back(w);
        }
    }
    return static_cast<int>(order.size()) == n;
}

}  // namespace

bool is_symmetric_tree(const DirectedGraph& t) {
    const int n = t.size();
    if (n == 0) return t.edge_count() == 0;
    if (t.has_loops() || !t.is_symmetric()) return false;
    if (t.edge_count() != 2 * static_cast<std::size_t>(n - 1)) return false;
    std::vector<Vertex> parent, order;
    return root_tree(t, parent, order);
}

ZeroForcingSet tree_min_zero_forcing_set(const DirectedGraph& t) {
    if (!is_symmetric_tree(t)) {
        throw InputError("tree algorithm needs a loop-free symmetric graph whose undirected form is a tree");
    }
    const int n = t.size();
    if (n == 0) return {};

    std::vector<Vertex> parent, order;
    root_tree(t, parent, order);

    // Greedy maximum set of path edges: bottom-up, each vertex joins up to two
    // children that still have a free path end.
    std::vector<std::vector<Vertex>> path_adj(static_cast<std::size_t>(n) + 1);
    std::vector<Vertex> open_children;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        open_children.clear();
        for (Vertex w : t.out_neighbors(v)) {
            if (w == parent[v]) continue;
            if (path_adj[w].size() < 2) open_children.push_back(w);
            if (open_children.size() == 2) break;
        }
        for (Vertex w : open_children) {
            path_adj[v].push_back(w);
            path_adj[w].push_back(v);
        }
    }

    // Every path is entered at its smaller endpoint.
    ZeroForcingSet result;
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (visited[v] || path_adj[v].size() > 1) continue;
        result.witness.insert(v);
        Vertex prev = 0;
        Vertex cur = v;
        while (cur != 0) {
            visited[cur] = 1;
            Vertex next = 0;
            for (Vertex w : path_adj[cur]) {
                if (w != prev) next = w;
            }
            prev = cur;
            cur = next;
        }
    }
    result.size = static_cast<int>(result.witness.size());
    return result;
}

int tree_min_rank(const DirectedGraph& t) {
    return t.size() - tree_min_zero_forcing_set(t).size;
}

}  // namespace zfc
