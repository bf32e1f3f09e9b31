#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "squareprod/graph.hpp"

namespace squareprod {

/// Directed edge tail -> head.
struct Dart {
    VertexId tail = 0;
    VertexId head = 0;

    Dart reversed() const { return {head, tail}; }
    auto operator<=>(const Dart&) const = default;
};

struct FaceWalk {
    std::vector<Dart> boundary;
    bool is_outer = false;

    std::size_t length() const { return boundary.size(); }
    /// Tails of the boundary darts, in walk order (repeats kept).
    std::vector<VertexId> vertices() const;
};

/// Simple plane graph given by a rotation system.
///
/// `rotation(v)` lists the neighbours of v in clockwise order. A face is traced
/// by the successor rule: after the dart (u, v) comes (v, w), where w is the
/// entry immediately before u in rotation(v). Each connected component with at
/// least one edge carries one designated outer dart; its walk is that
/// component's outer face. Values are validated on construction and immutable.
class PlaneGraph {
public:
    using Rotation = std::map<VertexId, std::vector<VertexId>>;

    PlaneGraph() = default;

    /// Throws AsymmetricAdjacency, NotPlanar, DanglingOuter or InvalidArgument.
    PlaneGraph(Rotation rotation, std::vector<Dart> outer_darts);

    const Rotation& rotations() const { return rotation_; }
    const std::vector<VertexId>& rotation(VertexId v) const;
    const Graph& graph() const { return graph_; }

    std::vector<VertexId> vertices() const { return graph_.vertices(); }
    std::size_t num_vertices() const { return graph_.num_vertices(); }
    std::size_t num_edges() const { return graph_.num_edges(); }
    std::size_t degree(VertexId v) const { return rotation(v).size(); }
    bool has_dart(Dart d) const { return graph_.adjacent(d.tail, d.head); }

    /// Outer dart of the component holding the smallest vertex with an edge.
    std::optional<Dart> outer_ref() const;
    const std::vector<Dart>& outer_darts() const { return outer_darts_; }

    /// All face walks, each directed edge in exactly one of them.
    const std::vector<FaceWalk>& faces() const { return faces_; }
    Dart next_in_face(Dart d) const;

    /// Vertices on an outer walk, plus isolated vertices.
    const std::set<VertexId>& outer_vertices() const { return outer_vertices_; }

    /// Restriction to a union of connected components.
    PlaneGraph restricted_to(const std::vector<VertexId>& vertices) const;

    /// Equality up to cyclic shifts of each rotation and choice of dart on
    /// each outer face.
    bool operator==(const PlaneGraph& other) const;

private:
    Rotation rotation_;
    std::vector<Dart> outer_darts_;
    Graph graph_;
    std::vector<FaceWalk> faces_;
    std::set<VertexId> outer_vertices_;
};

std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

/// V(G) minus every vertex on the outer face.
std::set<VertexId> inner_vertices(const PlaneGraph& g);

/// Parses the .spg text format:
///
///     # comment
///     V <n>
///     <id>: <neighbours in clockwise order>
///     OUTER <u> <v>
///
/// One OUTER line per component that has an edge.
PlaneGraph parse_plane_graph(std::string_view text);
std::string serialize(const PlaneGraph& g);

/// Straight-line drawing to rotation system: neighbours sorted clockwise by
/// angle, the outer dart picked as the walk of largest signed area in each
/// component. Used by the generators and tests.
PlaneGraph plane_graph_from_drawing(const std::map<VertexId, std::pair<double, double>>& coords,
                                    const std::vector<Edge>& edges);

}  // namespace squareprod
