#include "squareprod/layering.hpp"

#include <algorithm>

#include "squareprod/recognize.hpp"

namespace squareprod {

Layering Layering::from_layer_map(const std::map<VertexId, std::size_t>& layer_of)
{
    Layering out;
    out.layer_of = layer_of;
    for (const auto& [v, i] : layer_of) {
        if (out.layers.size() <= i)
            out.layers.resize(i + 1);
        out.layers[i].push_back(v);
    }
    return out;
}

Layering bfs_layering(const Graph& g, VertexId root)
{
    auto dist = distances_from(g, root);
    if (dist.size() != g.num_vertices())
        throw Error(ErrorKind::Disconnected, "BFS layering needs a connected graph");
    return Layering::from_layer_map(dist);
}

bool is_layering(const Graph& g, const Layering& layering)
{
    std::map<VertexId, std::size_t> seen;
    for (std::size_t i = 0; i < layering.layers.size(); ++i)
        for (VertexId v : layering.layers[i])
            if (!g.has_vertex(v) || !seen.emplace(v, i).second)
                return false;
    if (seen.size() != g.num_vertices() || seen != layering.layer_of)
        return false;
    for (const auto& [u, v] : g.edges()) {
        std::size_t a = seen[u], b = seen[v];
        if ((a > b ? a - b : b - a) > 1)
            return false;
    }
    return true;
}

bool is_independent_layer(const Graph& g, const std::vector<VertexId>& layer)
{
    for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j)
            if (g.adjacent(layer[i], layer[j]))
                return false;
    return true;
}

Layering LeveledEmbedding::layering() const
{
    return Layering{levels, level};
}

std::optional<std::pair<Edge, Edge>> find_order_crossing(const LeveledEmbedding& e)
{
    // Sort each level gap's edges by (upper rank, lower rank); a crossing
    // exists iff the lower ranks then fail to be non-decreasing.
    for (std::size_t i = 1; i < e.levels.size(); ++i) {
        std::vector<std::pair<std::size_t, std::size_t>> ranks;
        std::map<std::pair<std::size_t, std::size_t>, Edge> edge_of;
        for (VertexId u : e.levels[i - 1])
            for (VertexId w : e.base.graph().neighbours(u))
                if (e.level.at(w) == i) {
                    ranks.emplace_back(e.rank.at(u), e.rank.at(w));
                    edge_of[ranks.back()] = {u, w};
                }
        std::sort(ranks.begin(), ranks.end());
        for (std::size_t k = 1; k < ranks.size(); ++k)
            if (ranks[k].second < ranks[k - 1].second)
                return std::make_pair(edge_of[ranks[k - 1]], edge_of[ranks[k]]);
    }
    return std::nullopt;
}

LeveledEmbedding make_leveled_embedding(const PlaneGraph& base, std::vector<std::vector<VertexId>> levels, bool weak)
{
    LeveledEmbedding e{base, std::move(levels), {}, {}, weak};
    for (std::size_t i = 0; i < e.levels.size(); ++i)
        for (std::size_t r = 0; r < e.levels[i].size(); ++r) {
            VertexId v = e.levels[i][r];
            if (!base.graph().has_vertex(v) || e.level.contains(v))
                throw Error(ErrorKind::InvalidArgument, "levels must partition the vertex set", v);
            e.level[v] = i;
            e.rank[v] = r;
        }
    if (e.level.size() != base.num_vertices())
        throw Error(ErrorKind::InvalidArgument, "levels must cover every vertex");
    for (const auto& [u, v] : base.graph().edges()) {
        std::size_t a = e.level[u], b = e.level[v];
        if (a == b) {
            std::size_t ra = e.rank[u], rb = e.rank[v];
            if (!weak || (ra > rb ? ra - rb : rb - ra) != 1)
                throw Error(ErrorKind::InvalidArgument,
                            "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside a level", u);
        } else if ((a > b ? a - b : b - a) != 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a level", u);
        }
    }
    if (auto crossing = find_order_crossing(e)) {
        const auto& [e1, e2] = *crossing;
        throw Error(ErrorKind::OrderCrossing,
                    "edges " + std::to_string(e1.first) + "-" + std::to_string(e1.second) + " and "
                        + std::to_string(e2.first) + "-" + std::to_string(e2.second) + " cross",
                    e1.first);
    }
    return e;
}

VertexId default_root(const PlaneGraph& g, std::optional<VertexId> near)
{
    if (g.num_vertices() == 0)
        throw Error(ErrorKind::InvalidArgument, "empty graph has no root");
    if (!near)
        return *g.outer_vertices().begin();
    auto dist = distances_from(g.graph(), *near);
    for (VertexId v : g.outer_vertices())
        if (dist.contains(v))
            return v;
    throw Error(ErrorKind::Invariant, "component without outer vertex", near);
}

LeveledEmbedding leveled_embedding(const PlaneGraph& g, VertexId root)
{
    if (!g.graph().has_vertex(root))
        throw Error(ErrorKind::UnknownVertex, "root " + std::to_string(root) + " not in graph", root);
    if (!is_connected(g.graph()))
        throw Error(ErrorKind::Disconnected, "leveled embedding needs a connected graph");
    if (auto verdict = is_squaregraph(g); !verdict)
        throw Error(ErrorKind::NotSquaregraph, verdict.describe());
    if (!g.outer_vertices().contains(root))
        throw Error(ErrorKind::RootNotOuter, "root " + std::to_string(root) + " is not an outer vertex", root);

    const Layering bfs = bfs_layering(g.graph(), root);
    std::map<VertexId, std::size_t> rank{{root, 0}};
    std::vector<std::vector<VertexId>> levels{{root}};

    auto scan_from = [&](VertexId u, std::size_t start, std::size_t child_level, std::vector<VertexId>& out) {
        const auto& rot = g.rotation(u);
        for (std::size_t k = 0; k < rot.size(); ++k) {
            VertexId w = rot[(start + k) % rot.size()];
            if (bfs.layer_of.at(w) == child_level && !rank.contains(w)) {
                rank[w] = out.size();
                out.push_back(w);
            }
        }
    };

    for (std::size_t i = 1; i < bfs.size(); ++i) {
        std::vector<VertexId> level;
        for (VertexId u : levels[i - 1]) {
            const auto& rot = g.rotation(u);
            std::size_t start = 0;
            if (u == root) {
                // The outer walk passes root as (a, root), (root, b) with b
                // just before a in rot(root): the outer angle sits between b
                // and a, so the scan opens at a.
                bool found = false;
                for (const FaceWalk& face : g.faces()) {
                    if (!face.is_outer)
                        continue;
                    for (const Dart& d : face.boundary)
                        if (d.head == root) {
                            start = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), d.tail) - rot.begin());
                            found = true;
                            break;
                        }
                    if (found)
                        break;
                }
            } else {
                std::optional<VertexId> leftmost;
                for (VertexId w : rot)
                    if (bfs.layer_of.at(w) + 2 == i && (!leftmost || rank.at(w) < rank.at(*leftmost)))
                        leftmost = w;
                if (!leftmost)
                    throw Error(ErrorKind::Invariant, "vertex " + std::to_string(u) + " has no up-neighbour", u);
                start = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), *leftmost) - rot.begin()) + 1;
            }
            scan_from(u, start, i, level);
        }
        if (level.size() != bfs.layers[i].size())
            throw Error(ErrorKind::Invariant, "level " + std::to_string(i) + " was not fully ranked");
        levels.push_back(std::move(level));
    }
    return make_leveled_embedding(g, std::move(levels), false);
}

std::size_t up_degree(const LeveledEmbedding& e, VertexId v)
{
    std::size_t i = e.level.at(v);
    std::size_t count = 0;
    for (VertexId w : e.base.graph().neighbours(v))
        if (e.level.at(w) + 1 == i)
            ++count;
    return count;
}

std::size_t down_degree(const LeveledEmbedding& e, VertexId v)
{
    std::size_t i = e.level.at(v);
    std::size_t count = 0;
    for (VertexId w : e.base.graph().neighbours(v))
        if (e.level.at(w) == i + 1)
            ++count;
    return count;
}

std::size_t max_inner_up_degree(const LeveledEmbedding& e)
{
    const auto inner = inner_vertices(e.base);
    std::size_t best = 0;
    for (const auto& level : e.levels)
        for (VertexId v : level) {
            std::size_t d = up_degree(e, v);
            if (d > 2 && inner.contains(v))
                throw Error(ErrorKind::UpDegreeViolation,
                            "inner vertex " + std::to_string(v) + " has up-degree " + std::to_string(d), v);
            best = std::max(best, d);
        }
    return best;
}

}  // namespace squareprod
