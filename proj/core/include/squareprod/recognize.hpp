#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "squareprod/graph.hpp"
#include "squareprod/plane_graph.hpp"

namespace squareprod {

struct SquaregraphVerdict {
    bool yes = true;
    std::optional<FaceWalk> bad_face;     // inner face that is not a 4-cycle
    std::optional<VertexId> bad_vertex;   // inner vertex of degree < 4

    explicit operator bool() const { return yes; }
    std::string describe() const;
};

/// Every inner face is a 4-cycle on four distinct vertices and every inner
/// vertex has degree at least 4. Faces are checked first, in trace order.
SquaregraphVerdict is_squaregraph(const PlaneGraph& g);

/// True iff the outer face walks visit every vertex.
bool is_outerplanar_embedding(const PlaneGraph& g);

inline constexpr std::size_t kOuterplanarOracleBound = 14;

/// Forbidden-minor test: no K4 and no K2,3 minor. Vertices of degree <= 1 are
/// pruned first; if more than `bound` remain, throws SizeGate.
bool is_outerplanar_abstract(const Graph& g, std::size_t bound = kOuterplanarOracleBound);

/// Brute-force minor test used by the outerplanarity oracle: searches
/// partitions of each component into |V(target)| connected parts whose
/// quotient contains `target`. `target` must be connected.
bool has_minor_by_partition(const Graph& g, const Graph& target);

enum class Colour { red, blue };

const char* to_string(Colour c);

struct RedBlueColouring {
    std::map<VertexId, Colour> colour;       // empty when not bipartite
    std::vector<VertexId> odd_closed_walk;   // v0 v1 ... vk, edge vk v0 closes it

    bool bipartite() const { return odd_closed_walk.empty(); }
};

/// Proper 2-colouring with the smallest id of each component red, or an odd
/// closed walk.
RedBlueColouring red_blue_colouring(const Graph& g);

/// Throws Disconnected for disconnected or empty input.
std::size_t radius(const Graph& g);
std::size_t eccentricity(const Graph& g, VertexId v);

/// Subgraph induced by the vertices within distance r of v.
Graph ball(const Graph& g, VertexId v, std::size_t r);

}  // namespace squareprod
