#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "squareprod/graph.hpp"
#include "squareprod/layering.hpp"
#include "squareprod/plane_graph.hpp"
#include "squareprod/products.hpp"
#include "squareprod/recognize.hpp"

namespace squareprod {

struct GadgetSpec {
    enum class Kind { plain, bipartite };

    Kind kind = Kind::plain;
    std::size_t k = 1;  // recursion depth; i + j for the bipartite kind
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t ell = 1;
    std::size_t nprime = 1;
};

struct Gadget {
    GadgetSpec spec;
    Graph graph;
    VertexId apex = 0;
    std::map<VertexId, Colour> colouring;  // bipartite kind only

    /// {kind, params, apex_id, colouring}
    std::string metadata_json() const;
};

/// G^(1) is a path on n' vertices plus a dominant vertex; G^(k) is 3l
/// disjoint copies of G^(k-1) plus a dominant vertex. Copies occupy
/// consecutive id blocks and each apex takes the next id after them.
Gadget gadget_plain(std::size_t k, std::size_t ell, std::size_t nprime);

/// G^(1,0) is a path on n' vertices coloured red, blue, red, ... from its
/// first vertex, plus a red apex adjacent to the blue path vertices. A red
/// step takes 5l copies of the previous graph plus a red apex adjacent to all
/// of their blue vertices; a blue step swaps the roles. G^(0,1) is G^(1,0)
/// with colours swapped, G^(i,0) applies i - 1 red steps to G^(1,0), and
/// G^(i,j) with j >= 1 applies i red steps to G^(0,j) = j - 1 blue steps on
/// G^(0,1). Requires n' >= 2.
Gadget gadget_bipartite(std::size_t i, std::size_t j, std::size_t ell, std::size_t nprime);

/// G^(1,0) drawn with the path on a line and the apex above it, using the
/// same ids as gadget_bipartite(1, 0, l, n').
PlaneGraph bipartite_base_embedding(std::size_t nprime);

/// n' = (a + 1) a m + a, the path length that forces a long path in H - w
/// when every part has at most a vertices.
std::size_t forcing_path_length(std::size_t a, std::size_t m);

/// Branch sets of a model of a target graph.
struct MinorModel {
    std::map<VertexId, std::set<VertexId>> branch_sets;
};

struct ModelCheck {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Every target vertex has a non-empty branch set of at most s vertices,
/// branch sets are disjoint and connected in `host`, and every target edge is
/// realised by a host edge between the two branch sets.
ModelCheck verify_minor_model(const Graph& host, const Graph& target, const MinorModel& model, std::size_t s);

inline constexpr std::size_t kMinorGate = 12;

/// Exhaustive search for a model with branch sets of at most s vertices.
/// Throws SizeGate when the host has more than `gate` vertices.
std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& target, std::size_t s,
                                           std::size_t gate = kMinorGate, SearchStats* stats = nullptr);

struct PathDecomposition {
    std::size_t width = 0;
    std::vector<std::set<VertexId>> bags;
};

inline constexpr std::size_t kPathwidthGate = 20;

/// Exact pathwidth by dynamic programming over vertex subsets in the vertex
/// separation formulation. Throws SizeGate above `gate` vertices.
PathDecomposition pathwidth_exact(const Graph& g, std::size_t gate = kPathwidthGate);

/// Every edge lies in some bag and the bags containing any vertex are
/// consecutive.
bool is_path_decomposition(const Graph& g, const std::vector<std::set<VertexId>>& bags);

/// P_n + K_k: k mutually adjacent vertices each joined to every vertex of a
/// path on n vertices. Path ids 0..n-1, clique ids n..n+k-1.
Graph join_graph(std::size_t n, std::size_t k);

/// Whether P_n + K_k is isomorphic to a subgraph of h. The pattern is
/// gated at `gate` vertices.
bool contains_join_subgraph(const Graph& h, std::size_t n, std::size_t k, std::size_t gate = kInjectionGate);

struct ForestQuotientWitness {
    std::vector<std::vector<VertexId>> parts;
    Layering layering;
    Graph quotient;
};

struct ForestQuotientResult {
    bool sat = false;
    std::optional<ForestQuotientWitness> witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kForestQuotientGate = 10;

/// Exhausts layerings with indices in [0, max_layers) that use layer 0,
/// together with partitions meeting each layer in at most `ell` vertices,
/// looking for one whose quotient is a forest. Throws SizeGate above `gate`
/// vertices.
ForestQuotientResult forest_quotient_search(const Graph& g, std::size_t ell, std::size_t max_layers,
                                            std::size_t gate = kForestQuotientGate);

/// Search report JSON: {instance, gate, outcome, witness?, nodes_explored,
/// wall_time_ms}.
std::string forest_quotient_report_json(const std::string& instance, std::size_t gate,
                                        const ForestQuotientResult& result, double wall_time_ms);

}  // namespace squareprod
