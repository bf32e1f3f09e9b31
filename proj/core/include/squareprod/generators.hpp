#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "squareprod/graph.hpp"
#include "squareprod/plane_graph.hpp"

namespace squareprod {

/// P_m □ P_n drawn as a grid; vertex (x, y) has id y * m + x.
PlaneGraph grid_plane_graph(std::size_t m, std::size_t n);

/// A forest with the neighbours of each vertex in ascending order as its
/// rotation. Every embedding of a forest is outerplanar.
PlaneGraph forest_plane_graph(const Graph& forest);

/// One representative of every unlabelled tree on n vertices, ids 0..n-1.
std::vector<Graph> all_trees(std::size_t n);

/// Uniform labelled tree on n vertices via a random Prüfer sequence.
Graph random_tree(std::mt19937_64& rng, std::size_t n);

/// Erdős–Rényi G(n, p) on ids 0..n-1.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

struct GlueOptions {
    std::size_t target_vertices = 20;
    double two_edge_weight = 1.0;   // relative weight of closing a square on two boundary edges
    double pendant_weight = 0.0;    // relative weight of hanging a pendant vertex
};

/// Random squaregraph grown from a single square by gluing squares onto the
/// outer boundary along one or two consecutive edges and, optionally,
/// attaching pendant vertices. Gluing along two edges closes an angle and is
/// only done when the vertex that becomes inner already has degree >= 4.
/// Deterministic for a given seed.
PlaneGraph glued_squaregraph(std::uint64_t seed, const GlueOptions& options);

/// Disjoint union; the second graph's ids are shifted past the first's.
PlaneGraph disjoint_union(const PlaneGraph& a, const PlaneGraph& b);

struct CorpusEntry {
    std::string name;
    PlaneGraph graph;
};

/// The standard squaregraph corpus: grids 2..6 x 2..6, every unlabelled
/// tree up to 8 vertices plus random trees on 9..12, 200 glued squaregraphs
/// of up to 200 vertices, disconnected unions, and bipartite gadget bases.
std::vector<CorpusEntry> squaregraph_corpus(std::uint64_t seed = 0);

}  // namespace squareprod
