#include "squareprod/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "text.hpp"

namespace squareprod {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges)
{
    Graph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_vertex(static_cast<VertexId>(v));
    for (const auto& [u, v] : edges) {
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw Error(ErrorKind::UnknownVertex, "edge endpoint outside 0..n-1");
        g.add_edge(u, v);
    }
    return g;
}

Graph path_graph(std::size_t n)
{
    Graph g;
    for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex(static_cast<VertexId>(v));
        if (v > 0)
            g.add_edge(static_cast<VertexId>(v - 1), static_cast<VertexId>(v));
    }
    return g;
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<VertexId>(n - 1));
    return g;
}

Graph complete_graph(std::size_t n)
{
    Graph g;
    for (std::size_t u = 0; u < n; ++u) {
        g.add_vertex(static_cast<VertexId>(u));
        for (std::size_t v = 0; v < u; ++v)
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    Graph g;
    for (std::size_t v = 0; v < a + b; ++v)
        g.add_vertex(static_cast<VertexId>(v));
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = a; v < a + b; ++v)
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g)
{
    std::vector<std::vector<VertexId>> components;
    std::set<VertexId> seen;
    for (VertexId start : g.vertices()) {
        if (seen.contains(start))
            continue;
        std::vector<VertexId> component;
        std::deque<VertexId> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            component.push_back(v);
            for (VertexId w : g.neighbours(v))
                if (seen.insert(w).second)
                    queue.push_back(w);
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

bool is_connected(const Graph& g)
{
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& keep)
{
    Graph sub;
    for (VertexId v : keep) {
        if (!g.has_vertex(v))
            throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not in graph", v);
        sub.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : g.neighbours(v))
            if (v < w && keep.contains(w))
                sub.add_edge(v, w);
    return sub;
}

bool is_subgraph(const Graph& sub, const Graph& g)
{
    for (VertexId v : sub.vertices())
        if (!g.has_vertex(v))
            return false;
    for (const auto& [u, v] : sub.edges())
        if (!g.adjacent(u, v))
            return false;
    return true;
}

bool is_forest(const Graph& g)
{
    return g.num_edges() + connected_components(g).size() == g.num_vertices();
}

std::map<VertexId, std::size_t> distances_from(const Graph& g, VertexId source)
{
    if (!g.has_vertex(source))
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(source) + " not in graph", source);
    std::map<VertexId, std::size_t> dist{{source, 0}};
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbours(v))
            if (dist.try_emplace(w, dist[v] + 1).second)
                queue.push_back(w);
    }
    return dist;
}

Graph relabelled(const Graph& g, const std::map<VertexId, VertexId>& relabel)
{
    Graph out;
    std::set<VertexId> images;
    for (VertexId v : g.vertices()) {
        auto it = relabel.find(v);
        if (it == relabel.end())
            throw Error(ErrorKind::UnknownVertex, "relabelling misses vertex " + std::to_string(v), v);
        if (!images.insert(it->second).second)
            throw Error(ErrorKind::InvalidArgument, "relabelling is not injective");
        out.add_vertex(it->second);
    }
    for (const auto& [u, v] : g.edges())
        out.add_edge(relabel.at(u), relabel.at(v));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    detail::LineReader reader(text);
    std::optional<std::size_t> n;
    Graph g;
    while (auto line = reader.next()) {
        detail::Tokenizer tok(*line, reader.line_number());
        if (!n) {
            tok.expect_word("V");
            n = static_cast<std::size_t>(tok.integer("vertex count"));
            tok.expect_end();
            for (std::size_t v = 0; v < *n; ++v)
                g.add_vertex(static_cast<VertexId>(v));
            continue;
        }
        int column = tok.column();
        VertexId u = tok.integer("edge endpoint");
        VertexId v = tok.integer("edge endpoint");
        tok.expect_end();
        if (static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
            throw ParseError("edge endpoint out of range for V " + std::to_string(*n), reader.line_number(), column);
        if (u == v)
            throw ParseError("self-loop", reader.line_number(), column);
        g.add_edge(u, v);
    }
    if (!n)
        throw ParseError("missing 'V <n>' header", reader.line_number(), 1);
    return g;
}

std::string serialize_edge_list(const Graph& g)
{
    const auto vertices = g.vertices();
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] != static_cast<VertexId>(i))
            throw Error(ErrorKind::InvalidArgument, "edge-list format needs vertex ids 0..n-1");
    std::ostringstream out;
    out << "V " << vertices.size() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace squareprod
