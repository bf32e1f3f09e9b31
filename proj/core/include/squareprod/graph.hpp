#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squareprod/error.hpp"

namespace squareprod {

/// Finite simple undirected graph over an ordered vertex type.
///
/// Vertex ids are kept as given, so products can use ordered pairs of factor
/// vertices directly and certificates can reference the original ids.
template <class V>
class BasicGraph {
public:
    using vertex_type = V;
    using edge_type = std::pair<V, V>;

    BasicGraph() = default;

    void add_vertex(const V& v) { adjacency_.try_emplace(v); }

    /// Adds both endpoints if missing. Re-adding an edge is a no-op.
    void add_edge(const V& u, const V& v)
    {
        if (u == v)
            throw Error(ErrorKind::InvalidArgument, "self-loops are not allowed");
        auto [it, inserted] = adjacency_[u].insert(v);
        if (inserted) {
            adjacency_[v].insert(u);
            ++edge_count_;
        }
    }

    bool has_vertex(const V& v) const { return adjacency_.contains(v); }

    bool adjacent(const V& u, const V& v) const
    {
        auto it = adjacency_.find(u);
        return it != adjacency_.end() && it->second.contains(v);
    }

    const std::set<V>& neighbours(const V& v) const
    {
        auto it = adjacency_.find(v);
        if (it == adjacency_.end())
            throw Error(ErrorKind::UnknownVertex, "vertex not in graph");
        return it->second;
    }

    std::size_t degree(const V& v) const { return neighbours(v).size(); }
    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edge_count_; }

    std::vector<V> vertices() const
    {
        std::vector<V> out;
        out.reserve(adjacency_.size());
        for (const auto& [v, _] : adjacency_)
            out.push_back(v);
        return out;
    }

    /// Each edge once as (u, v) with u < v, in lexicographic order.
    std::vector<edge_type> edges() const
    {
        std::vector<edge_type> out;
        out.reserve(edge_count_);
        for (const auto& [u, nbrs] : adjacency_)
            for (const auto& v : nbrs)
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    const std::map<V, std::set<V>>& adjacency() const { return adjacency_; }

    bool operator==(const BasicGraph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::map<V, std::set<V>> adjacency_;
    std::size_t edge_count_ = 0;
};

using Graph = BasicGraph<VertexId>;
using Edge = Graph::edge_type;

Graph make_graph(std::size_t n, const std::vector<Edge>& edges);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Components in ascending order of their smallest vertex; each sorted.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::set<VertexId>& keep);
bool is_subgraph(const Graph& sub, const Graph& g);
bool is_forest(const Graph& g);

/// BFS distances from `source` to every vertex of its component.
std::map<VertexId, std::size_t> distances_from(const Graph& g, VertexId source);

/// Relabels vertices through `relabel`, which must be injective on V(g).
Graph relabelled(const Graph& g, const std::map<VertexId, VertexId>& relabel);

/// Edge-list text format: `V n` followed by one `u v` pair per line, vertex
/// ids 0..n-1, '#' comments and blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace squareprod
