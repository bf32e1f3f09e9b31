#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "squareprod/graph.hpp"

namespace squareprod::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

// Index-compressed copy of a graph with at most 64 vertices, in ascending id
// order, for the exhaustive searches.
struct DenseGraph {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<Mask> adj;

    explicit DenseGraph(const Graph& g)
    {
        if (g.num_vertices() > 64)
            throw Error(ErrorKind::SizeGate, "dense search supports at most 64 vertices");
        ids = g.vertices();
        for (int i = 0; i < static_cast<int>(ids.size()); ++i)
            index[ids[i]] = i;
        adj.assign(ids.size(), 0);
        for (const auto& [u, v] : g.edges()) {
            adj[index[u]] |= bit(index[v]);
            adj[index[v]] |= bit(index[u]);
        }
    }

    int size() const { return static_cast<int>(ids.size()); }
    Mask all() const { return ids.size() == 64 ? ~Mask{0} : bit(size()) - 1; }

    Mask neighbourhood(Mask set) const
    {
        Mask out = 0;
        for (Mask m = set; m; m &= m - 1)
            out |= adj[lowest(m)];
        return out & ~set;
    }

    Mask component_of(int v, Mask within) const
    {
        Mask seen = bit(v);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1)
                next |= adj[lowest(m)];
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool connected(Mask set) const
    {
        return set == 0 || component_of(lowest(set), set) == set;
    }

    int count_components(Mask set) const
    {
        int count = 0;
        while (set) {
            set &= ~component_of(lowest(set), set);
            ++count;
        }
        return count;
    }

    /// Calls `visit(S)` once for every connected S with anchor in S ⊆ allowed
    /// and |S| <= max_size. `visit` returns false to stop early.
    bool for_each_connected_subset(int anchor, Mask allowed, int max_size,
                                   const std::function<bool(Mask)>& visit) const
    {
        std::function<bool(Mask, Mask, Mask)> rec = [&](Mask set, Mask candidates, Mask banned) {
            if (candidates == 0 || popcount(set) >= max_size)
                return visit(set);
            Mask v = candidates & -candidates;
            Mask grown = set | v;
            if (!rec(grown, (candidates | adj[lowest(v)]) & allowed & ~grown & ~banned, banned))
                return false;
            return rec(set, candidates & ~v, banned | v);
        };
        Mask start = bit(anchor);
        return rec(start, adj[anchor] & allowed & ~start, 0);
    }
};

}  // namespace squareprod::detail
