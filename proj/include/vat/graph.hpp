#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vat/errors.hpp"
#include "vat/vertex_set.hpp"

namespace vat {

// Undirected simple graph on dense vertex ids 0..n-1. Immutable once built;
// all queries are pure and safe for concurrent readers.
class Graph {
public:
    Graph() : n_(0), edge_count_(0) {}

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)), edge_count_(0) {
        if (n < 0) throw PreconditionError("vertex count must be non-negative");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const noexcept { return n_; }
    long long edge_count() const noexcept { return edge_count_; }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") with n = " + std::to_string(n_));
        }
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v)) return;  // duplicates collapse
        adj_[u].add(v);
        adj_[v].add(u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
        return adj_[u].contains(v);
    }

    const VertexSet& neighbors(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).size(); }

    // Edges as ascending (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < n_; ++u) {
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_;
    std::vector<VertexSet> adj_;
    long long edge_count_;
};

// Connected components of the subgraph induced on V - removed, ordered by
// smallest member. Empty when removed = V.
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed);

// Cardinality of the largest component of V - removed; 0 when removed = V.
int largest_component_size(const Graph& g, const VertexSet& removed);

bool is_clique(const Graph& g);
bool is_connected(const Graph& g);

// Bipartite graph with two labeled sides and cross edges only. Side-local
// ids: left vertices 0..n1-1, right vertices 0..n2-1.
class BipartiteGraph {
public:
    BipartiteGraph() : n1_(0), n2_(0), edge_count_(0) {}

    BipartiteGraph(int n1, int n2)
        : n1_(n1), n2_(n2), left_adj_(n1, VertexSet(n2)), right_adj_(n2, VertexSet(n1)),
          edge_count_(0) {
        if (n1 < 0 || n2 < 0) throw PreconditionError("side size must be non-negative");
    }

    static BipartiteGraph from_edges(int n1, int n2,
                                     const std::vector<std::pair<int, int>>& cross_edges) {
        BipartiteGraph b(n1, n2);
        for (const auto& [i, j] : cross_edges) b.add_edge(i, j);
        return b;
    }

    int left_size() const noexcept { return n1_; }
    int right_size() const noexcept { return n2_; }
    long long edge_count() const noexcept { return edge_count_; }
    bool balanced() const noexcept { return n1_ == n2_; }

    void add_edge(int i, int j) {
        if (i < 0 || i >= n1_ || j < 0 || j >= n2_) {
            throw PreconditionError("cross edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") out of side range");
        }
        if (left_adj_[i].contains(j)) return;  // duplicates collapse
        left_adj_[i].add(j);
        right_adj_[j].add(i);
        ++edge_count_;
    }

    bool has_edge(int i, int j) const {
        if (i < 0 || i >= n1_ || j < 0 || j >= n2_) return false;
        return left_adj_[i].contains(j);
    }

    // Right-side neighbors of left vertex i, and vice versa.
    const VertexSet& neighbors_of_left(int i) const {
        if (i < 0 || i >= n1_) throw PreconditionError("left vertex out of range");
        return left_adj_[i];
    }
    const VertexSet& neighbors_of_right(int j) const {
        if (j < 0 || j >= n2_) throw PreconditionError("right vertex out of range");
        return right_adj_[j];
    }

    bool is_complete() const noexcept {
        return edge_count_ == static_cast<long long>(n1_) * n2_;
    }

    // Cross edges as (left, right) pairs in ascending order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int i = 0; i < n1_; ++i) {
            left_adj_[i].for_each([&](int j) { out.emplace_back(i, j); });
        }
        return out;
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.left_adj_ == b.left_adj_;
    }
    friend bool operator!=(const BipartiteGraph& a, const BipartiteGraph& b) { return !(a == b); }

private:
    int n1_;
    int n2_;
    std::vector<VertexSet> left_adj_;
    std::vector<VertexSet> right_adj_;
    long long edge_count_;
};

// Balanced bipartite graph on side size n1 = n2 = n whose cross edges are the
// set bits of `mask`, bit (i * n2 + j) standing for the pair (i, j). Used to
// enumerate instance populations exhaustively.
BipartiteGraph bipartite_from_cross_mask(int n1, int n2, std::uint64_t mask);

// Co-bipartite complement of a balanced bipartite graph together with its
// side labeling: left vertices keep ids 0..n-1, right vertices map to
// n..2n-1. Both sides induce complete cliques; a cross pair is an edge here
// exactly when the bipartite graph lacks it.
struct CoBipartiteGraph {
    Graph graph;
    int side_size = 0;

    int to_graph_id(bool right, int side_local) const { return right ? side_size + side_local : side_local; }
    bool on_right(int v) const { return v >= side_size; }

    VertexSet left_vertices() const {
        VertexSet s(2 * side_size);
        for (int v = 0; v < side_size; ++v) s.add(v);
        return s;
    }
    VertexSet right_vertices() const { return left_vertices().complement(); }
};

CoBipartiteGraph co_bipartite_complement(const BipartiteGraph& b);

}  // namespace vat
