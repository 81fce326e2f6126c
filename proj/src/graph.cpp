#include "vat/graph.hpp"

namespace vat {

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    if (removed.universe() != n) {
        throw PreconditionError("removed set has a different vertex universe than the graph");
    }
    VertexSet unvisited = removed.complement();
    std::vector<VertexSet> comps;
    for (int start = unvisited.first(); start != -1; start = unvisited.first()) {
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.add(start);
        unvisited.remove(start);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(n);
            frontier.for_each([&](int u) { next |= g.neighbors(u); });
            next &= unvisited;
            unvisited -= next;
            frontier = next;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

int largest_component_size(const Graph& g, const VertexSet& removed) {
    int best = 0;
    for (const VertexSet& comp : components_after_removal(g, removed)) {
        best = std::max(best, comp.size());
    }
    return best;
}

bool is_clique(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_connected(const Graph& g) {
    return components_after_removal(g, VertexSet(g.vertex_count())).size() <= 1;
}

BipartiteGraph bipartite_from_cross_mask(int n1, int n2, std::uint64_t mask) {
    if (n1 < 0 || n2 < 0 || n1 * n2 > 64) {
        throw PreconditionError("cross mask only covers instances with n1*n2 <= 64");
    }
    BipartiteGraph b(n1, n2);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            if ((mask >> (i * n2 + j)) & 1ULL) b.add_edge(i, j);
        }
    }
    return b;
}

CoBipartiteGraph co_bipartite_complement(const BipartiteGraph& b) {
    if (!b.balanced()) {
        throw PreconditionError("co-bipartite complement requires a balanced bipartite graph");
    }
    const int n = b.left_size();
    Graph g(2 * n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);          // left side clique
            g.add_edge(n + u, n + v);  // right side clique
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!b.has_edge(i, j)) g.add_edge(i, n + j);
        }
    }
    return CoBipartiteGraph{std::move(g), n};
}

}  // namespace vat
