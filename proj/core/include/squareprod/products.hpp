#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "squareprod/graph.hpp"

namespace squareprod {

/// How an edge of a product G x H arises from the factors, for
/// (g, h) != (g', h'):
///   cartesian   g = g' and hh' in E(H), or gg' in E(G) and h = h'
///   direct      gg' in E(G) and hh' in E(H)
///   strong      cartesian or direct
///   semistrong  g = g' and hh' in E(H), or gg' in E(G) and hh' in E(H)
enum class ProductMode { cartesian, direct, strong, semistrong };

const char* to_string(ProductMode mode);
std::optional<ProductMode> parse_product_mode(std::string_view name);

/// Whether two factor-coordinate pairs are adjacent in the product.
inline bool product_adjacent(ProductMode mode, bool first_equal, bool first_adjacent, bool second_equal,
                             bool second_adjacent)
{
    const bool cartesian = (first_equal && second_adjacent) || (first_adjacent && second_equal);
    const bool direct = first_adjacent && second_adjacent;
    switch (mode) {
    case ProductMode::cartesian: return cartesian;
    case ProductMode::direct: return direct;
    case ProductMode::strong: return cartesian || direct;
    case ProductMode::semistrong: return (first_equal || first_adjacent) && second_adjacent;
    }
    return false;
}

using PairVertex = std::pair<VertexId, VertexId>;
using PairGraph = BasicGraph<PairVertex>;

/// Product with vertex set V(g) x V(h), vertices kept as (g, h) pairs.
PairGraph product(const Graph& g, const Graph& h, ProductMode mode);

/// Vertex and edge counts of the four products of g and h, from the factor
/// sizes alone.
struct ProductCounts {
    std::size_t vertices = 0;
    std::size_t cartesian = 0;
    std::size_t direct = 0;
    std::size_t strong = 0;
    std::size_t semistrong = 0;

    std::size_t edges(ProductMode mode) const;
};

ProductCounts edge_counts(const Graph& g, const Graph& h);

struct SearchStats {
    std::uint64_t nodes = 0;
};

inline constexpr std::size_t kInjectionGate = 10;

/// Injective homomorphism pattern -> host (edges to edges), i.e. pattern is
/// isomorphic to a subgraph of host. Backtracking over pattern vertices in
/// descending degree order; candidates come from the neighbourhood of an
/// already-mapped neighbour's image. Throws SizeGate when the pattern has
/// more than `gate` vertices. Returns the mapping, or nullopt once the search
/// is exhausted.
template <class V>
std::optional<std::map<VertexId, V>> subgraph_injection_exists(const Graph& pattern, const BasicGraph<V>& host,
                                                               std::size_t gate = kInjectionGate,
                                                               SearchStats* stats = nullptr)
{
    if (pattern.num_vertices() > gate)
        throw Error(ErrorKind::SizeGate, "pattern has " + std::to_string(pattern.num_vertices())
                                             + " vertices, gate is " + std::to_string(gate));
    if (pattern.num_vertices() > host.num_vertices() || pattern.num_edges() > host.num_edges())
        return std::nullopt;

    const std::vector<V> hv = host.vertices();
    std::map<V, int> hindex;
    for (int i = 0; i < static_cast<int>(hv.size()); ++i)
        hindex[hv[i]] = i;
    std::vector<std::vector<int>> hadj(hv.size());
    for (int i = 0; i < static_cast<int>(hv.size()); ++i) {
        for (const V& w : host.neighbours(hv[i]))
            hadj[i].push_back(hindex[w]);
    }
    auto host_adjacent = [&](int a, int b) { return std::binary_search(hadj[a].begin(), hadj[a].end(), b); };

    std::vector<VertexId> order = pattern.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });
    // Prefer vertices with an earlier-placed neighbour so candidates stay local.
    for (std::size_t k = 1; k < order.size(); ++k) {
        auto placed = [&](VertexId x) {
            for (std::size_t j = 0; j < k; ++j)
                if (pattern.adjacent(order[j], x))
                    return true;
            return false;
        };
        if (placed(order[k]))
            continue;
        for (std::size_t j = k + 1; j < order.size(); ++j)
            if (placed(order[j])) {
                std::rotate(order.begin() + k, order.begin() + j, order.begin() + j + 1);
                break;
            }
    }

    std::map<VertexId, int> image;
    std::vector<char> used(hv.size(), 0);
    std::uint64_t nodes = 0;

    auto consistent = [&](VertexId p, int h) {
        if (used[h] || static_cast<std::size_t>(hadj[h].size()) < pattern.degree(p))
            return false;
        for (VertexId q : pattern.neighbours(p)) {
            auto it = image.find(q);
            if (it != image.end() && !host_adjacent(h, it->second))
                return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t k) -> bool {
        ++nodes;
        if (k == order.size())
            return true;
        VertexId p = order[k];
        std::optional<int> anchor;
        for (VertexId q : pattern.neighbours(p))
            if (auto it = image.find(q); it != image.end()) {
                anchor = it->second;
                break;
            }
        auto attempt = [&](int h) {
            if (!consistent(p, h))
                return false;
            image[p] = h;
            used[h] = 1;
            if (self(self, k + 1))
                return true;
            image.erase(p);
            used[h] = 0;
            return false;
        };
        if (anchor) {
            for (int h : hadj[*anchor])
                if (attempt(h))
                    return true;
        } else {
            for (int h = 0; h < static_cast<int>(hv.size()); ++h)
                if (attempt(h))
                    return true;
        }
        return false;
    };

    bool found = search(search, 0);
    if (stats)
        stats->nodes += nodes;
    if (!found)
        return std::nullopt;
    std::map<VertexId, V> out;
    for (const auto& [p, h] : image)
        out.emplace(p, hv[h]);
    return out;
}

}  // namespace squareprod
