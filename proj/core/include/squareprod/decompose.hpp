#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "squareprod/graph.hpp"
#include "squareprod/layering.hpp"
#include "squareprod/plane_graph.hpp"
#include "squareprod/products.hpp"

namespace squareprod {

/// Matching between L_{index-1} and L_index; each edge is (upper, lower).
struct SaturatingMatching {
    std::size_t index = 0;
    std::vector<Edge> edges;
};

/// Matches every inner vertex of L_{i-1} to its lowest-ranked neighbour in
/// L_i. Throws DownDegreeZero or MatchingClash naming the vertex.
SaturatingMatching leftmost_matching(const LeveledEmbedding& e, std::size_t i);

/// One matching per consecutive level pair, i = 1 .. levels - 1.
std::vector<SaturatingMatching> leftmost_matchings(const LeveledEmbedding& e);

struct HPartition {
    std::vector<std::vector<VertexId>> parts;  // each root-to-tip
    std::map<VertexId, std::size_t> part_of;
    Graph quotient;                            // on part ids 0 .. parts - 1
};

/// Parts are the components of the union of the matchings. Part ids follow
/// the smallest vertex of each part. Throws Invariant if a part is not a
/// vertical path or its deepest vertex is not outer.
HPartition vertical_path_partition(const LeveledEmbedding& e, const std::vector<SaturatingMatching>& matchings);

/// Vertex per part (by index), edge iff the parts are joined by an edge of g.
/// Throws InvalidArgument when the parts do not partition V(g).
Graph quotient(const Graph& g, const std::vector<std::vector<VertexId>>& parts);

/// Quotient of the non-empty traces of the parts on V(j), taken in j. Vertices
/// keep the part indices of `parts`. Throws InvalidArgument unless j ⊆ g.
Graph sub_quotient(const Graph& g, const std::vector<std::vector<VertexId>>& parts, const Graph& j);

/// Layered width max |part ∩ layer|.
struct LayeredPartitionReport {
    std::size_t width = 0;
    bool thin = false;
    bool layers_independent = false;
};

LayeredPartitionReport verify_layered_partition(const Graph& g, const std::vector<std::vector<VertexId>>& parts,
                                                const Layering& layering);

/// `part` in the listed order steps down one layer at a time along edges of g.
bool is_vertical_path(const Graph& g, const Layering& layering, const std::vector<VertexId>& part);

struct ProductCoordinate {
    VertexId h = 0;
    std::size_t path = 0;
    std::size_t copy = 0;

    auto operator<=>(const ProductCoordinate&) const = default;
};

/// Map V(G) -> V((H ⊠ K_l) x P) for the given product mode. The first factor
/// coordinate is (h, copy); copies of the same h are adjacent to each other.
struct ProductEmbedding {
    ProductMode mode = ProductMode::semistrong;
    Graph target_h;
    std::size_t path_length = 0;  // P has path_length + 1 vertices
    std::map<VertexId, ProductCoordinate> map;
};

struct EmbeddingCheck {
    bool ok = true;
    std::string detail;
    std::optional<Edge> violated_edge;
    std::optional<std::pair<VertexId, VertexId>> collision;

    explicit operator bool() const { return ok; }
};

EmbeddingCheck verify_product_embedding(const Graph& g, const ProductEmbedding& emb);

/// Contracts every part of `parts` (each a path in g) inside the rotation
/// system of g and reports whether each component of the contracted plane
/// multigraph has all of its vertices on the face that carries g's outer face.
bool outerplanar_by_contraction(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& parts);

struct DecompositionChecks {
    std::size_t width = 0;
    bool thin = false;
    bool layers_independent = false;
    bool vertical_paths = false;
    bool deepest_outer = false;
    bool semistrong_embedding = false;
    bool h_outerplanar_embedding = false;
    std::optional<bool> h_outerplanar_minor;  // empty when H exceeds the oracle bound

    bool all() const;
};

struct Decomposition {
    std::vector<VertexId> roots;                   // one per component
    std::vector<LeveledEmbedding> embeddings;      // one per component
    std::vector<std::vector<SaturatingMatching>> matchings;
    HPartition partition;
    Layering layering;                             // component layerings overlaid
    ProductEmbedding embedding;
    DecompositionChecks checks;

    const Graph& h() const { return partition.quotient; }
};

/// Per component: leveled embedding at its root, leftmost matchings,
/// vertical path partition; then the map v -> (part, layer) into H x P, with
/// every guarantee re-checked. `root` selects the root of its component;
/// other components use their smallest outer vertex.
///
/// Throws NotSquaregraph, RootNotOuter, UnknownVertex, or Invariant when a
/// guarantee fails.
Decomposition decompose_squaregraph(const PlaneGraph& g, std::optional<VertexId> root = std::nullopt);

}  // namespace squareprod
