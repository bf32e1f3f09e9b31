#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "squareprod/graph.hpp"
#include "squareprod/plane_graph.hpp"

namespace squareprod {

/// Ordered partition (L_0, L_1, ...) of the vertices. `layers[i]` is sorted
/// ascending unless it comes from a LeveledEmbedding.
struct Layering {
    std::vector<std::vector<VertexId>> layers;
    std::map<VertexId, std::size_t> layer_of;

    std::size_t size() const { return layers.size(); }

    /// Builds the layer lists from a vertex -> index map.
    static Layering from_layer_map(const std::map<VertexId, std::size_t>& layer_of);
};

/// L_i = vertices at distance i from root. Throws Disconnected / UnknownVertex.
Layering bfs_layering(const Graph& g, VertexId root);

/// Partition property plus |i - j| <= 1 across every edge.
bool is_layering(const Graph& g, const Layering& layering);

bool is_independent_layer(const Graph& g, const std::vector<VertexId>& layer);

/// Levels plus an in-level order. With `weak` unset every edge joins
/// consecutive levels; with it set, same-level edges may join rank-consecutive
/// vertices.
struct LeveledEmbedding {
    PlaneGraph base;
    std::vector<std::vector<VertexId>> levels;  // each in rank order
    std::map<VertexId, std::size_t> level;
    std::map<VertexId, std::size_t> rank;
    bool weak = false;

    Layering layering() const;
};

/// Assembles an embedding from hand-built levels (each in rank order) and
/// validates it; throws InvalidArgument or OrderCrossing.
LeveledEmbedding make_leveled_embedding(const PlaneGraph& base, std::vector<std::vector<VertexId>> levels,
                                        bool weak);

/// First pair of consecutive-level edges (upper, lower) that cross, if any.
std::optional<std::pair<Edge, Edge>> find_order_crossing(const LeveledEmbedding& e);

/// Leveled embedding of a connected squaregraph from the BFS layering at an
/// outer root.
///
/// L_0 = (root). Each level is ranked by scanning the previous level left to
/// right: a vertex u lists its next-level neighbours in rotation order,
/// starting just after its lowest-ranked up-neighbour, and unranked ones are
/// appended. The root starts just after its outer-face angle. The result is
/// checked against the non-crossing condition before it is returned.
///
/// Throws Disconnected, NotSquaregraph, RootNotOuter, OrderCrossing.
LeveledEmbedding leveled_embedding(const PlaneGraph& g, VertexId root);

/// Smallest-id outer vertex of the component containing `near` (or of the
/// whole graph when `near` is empty).
VertexId default_root(const PlaneGraph& g, std::optional<VertexId> near = std::nullopt);

std::size_t up_degree(const LeveledEmbedding& e, VertexId v);
std::size_t down_degree(const LeveledEmbedding& e, VertexId v);

/// Largest up-degree over all vertices. Throws UpDegreeViolation naming the
/// first inner vertex whose up-degree exceeds 2.
std::size_t max_inner_up_degree(const LeveledEmbedding& e);

}  // namespace squareprod
