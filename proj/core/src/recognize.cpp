#include "squareprod/recognize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "dense.hpp"

namespace squareprod {

std::string SquaregraphVerdict::describe() const
{
    if (yes)
        return "yes";
    std::ostringstream out;
    if (bad_face) {
        out << "no (face";
        for (VertexId v : bad_face->vertices())
            out << ' ' << v;
        out << " is not a 4-cycle)";
    } else if (bad_vertex) {
        out << "no (inner vertex " << *bad_vertex << " has degree < 4)";
    } else {
        out << "no";
    }
    return out.str();
}

SquaregraphVerdict is_squaregraph(const PlaneGraph& g)
{
    SquaregraphVerdict verdict;
    for (const FaceWalk& face : g.faces()) {
        if (face.is_outer)
            continue;
        auto vs = face.vertices();
        std::sort(vs.begin(), vs.end());
        bool simple_square = face.length() == 4 && std::unique(vs.begin(), vs.end()) == vs.end();
        if (!simple_square) {
            verdict.yes = false;
            verdict.bad_face = face;
            return verdict;
        }
    }
    for (VertexId v : inner_vertices(g))
        if (g.degree(v) < 4) {
            verdict.yes = false;
            verdict.bad_vertex = v;
            return verdict;
        }
    return verdict;
}

bool is_outerplanar_embedding(const PlaneGraph& g)
{
    return inner_vertices(g).empty();
}

namespace {

bool quotient_contains(const std::vector<detail::Mask>& parts, const detail::DenseGraph& dg, const Graph& target)
{
    const std::size_t t = parts.size();
    std::vector<std::vector<bool>> adjacent(t, std::vector<bool>(t, false));
    for (std::size_t a = 0; a < t; ++a) {
        detail::Mask nb = dg.neighbourhood(parts[a]);
        for (std::size_t b = 0; b < t; ++b)
            adjacent[a][b] = a != b && (nb & parts[b]) != 0;
    }
    const auto target_vertices = target.vertices();
    const auto target_edges = target.edges();
    std::map<VertexId, std::size_t> tindex;
    for (std::size_t i = 0; i < target_vertices.size(); ++i)
        tindex[target_vertices[i]] = i;
    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : target_edges)
            if (!adjacent[perm[tindex[u]]][perm[tindex[v]]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool partition_search(const detail::DenseGraph& dg, detail::Mask remaining, std::vector<detail::Mask>& parts,
                      const Graph& target)
{
    const int t = static_cast<int>(target.num_vertices());
    const int placed = static_cast<int>(parts.size());
    if (placed == t - 1) {
        if (!dg.connected(remaining))
            return false;
        parts.push_back(remaining);
        bool found = quotient_contains(parts, dg, target);
        parts.pop_back();
        return found;
    }
    const int still_needed = t - placed;
    if (detail::popcount(remaining) < still_needed)
        return false;
    bool found = false;
    dg.for_each_connected_subset(detail::lowest(remaining), remaining, detail::popcount(remaining) - (still_needed - 1),
                                 [&](detail::Mask part) {
                                     detail::Mask rest = remaining & ~part;
                                     if (rest == 0 || dg.count_components(rest) > still_needed - 1)
                                         return true;
                                     parts.push_back(part);
                                     found = partition_search(dg, rest, parts, target);
                                     parts.pop_back();
                                     return !found;
                                 });
    return found;
}

}  // namespace

bool has_minor_by_partition(const Graph& g, const Graph& target)
{
    if (!is_connected(target))
        throw Error(ErrorKind::InvalidArgument, "partition minor search needs a connected target");
    if (target.num_vertices() == 0)
        return true;
    for (const auto& component : connected_components(g)) {
        if (component.size() < target.num_vertices())
            continue;
        Graph sub = induced_subgraph(g, std::set<VertexId>(component.begin(), component.end()));
        if (sub.num_edges() < target.num_edges())
            continue;
        detail::DenseGraph dg(sub);
        // A model in a connected host can absorb every unused vertex into an
        // adjacent branch set, so covering partitions suffice.
        std::vector<detail::Mask> parts;
        if (partition_search(dg, dg.all(), parts, target))
            return true;
    }
    return false;
}

bool is_outerplanar_abstract(const Graph& g, std::size_t bound)
{
    std::set<VertexId> keep;
    for (VertexId v : g.vertices())
        keep.insert(v);
    std::map<VertexId, std::size_t> degree;
    for (VertexId v : keep)
        degree[v] = g.degree(v);
    std::deque<VertexId> queue;
    for (const auto& [v, d] : degree)
        if (d <= 1)
            queue.push_back(v);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (!keep.erase(v))
            continue;
        for (VertexId w : g.neighbours(v))
            if (keep.contains(w) && --degree[w] == 1)
                queue.push_back(w);
    }
    if (keep.size() > bound)
        throw Error(ErrorKind::SizeGate, std::to_string(keep.size()) + " vertices remain after pruning, bound is "
                                             + std::to_string(bound));
    Graph core = induced_subgraph(g, keep);
    return !has_minor_by_partition(core, complete_graph(4))
        && !has_minor_by_partition(core, complete_bipartite_graph(2, 3));
}

const char* to_string(Colour c)
{
    return c == Colour::red ? "red" : "blue";
}

RedBlueColouring red_blue_colouring(const Graph& g)
{
    RedBlueColouring result;
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, std::size_t> depth;
    for (VertexId root : g.vertices()) {
        if (depth.contains(root))
            continue;
        depth[root] = 0;
        parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbours(v)) {
                if (!depth.contains(w)) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (depth[w] % 2 == depth[v] % 2) {
                    // Climb both tree paths to their meeting point.
                    std::vector<VertexId> left{v}, right{w};
                    while (left.back() != right.back()) {
                        if (depth[left.back()] >= depth[right.back()])
                            left.push_back(parent[left.back()]);
                        else
                            right.push_back(parent[right.back()]);
                    }
                    right.pop_back();
                    result.odd_closed_walk = left;
                    result.odd_closed_walk.insert(result.odd_closed_walk.end(), right.rbegin(), right.rend());
                    return result;
                }
            }
        }
    }
    for (const auto& [v, d] : depth)
        result.colour[v] = d % 2 == 0 ? Colour::red : Colour::blue;
    return result;
}

std::size_t eccentricity(const Graph& g, VertexId v)
{
    auto dist = distances_from(g, v);
    if (dist.size() != g.num_vertices())
        throw Error(ErrorKind::Disconnected, "eccentricity needs a connected graph");
    std::size_t ecc = 0;
    for (const auto& [_, d] : dist)
        ecc = std::max(ecc, d);
    return ecc;
}

std::size_t radius(const Graph& g)
{
    if (g.num_vertices() == 0 || !is_connected(g))
        throw Error(ErrorKind::Disconnected, "radius needs a non-empty connected graph");
    std::size_t best = g.num_vertices();
    for (VertexId v : g.vertices())
        best = std::min(best, eccentricity(g, v));
    return best;
}

Graph ball(const Graph& g, VertexId v, std::size_t r)
{
    std::set<VertexId> keep;
    for (const auto& [w, d] : distances_from(g, v))
        if (d <= r)
            keep.insert(w);
    return induced_subgraph(g, keep);
}

}  // namespace squareprod
