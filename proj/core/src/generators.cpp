#include "squareprod/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "squareprod/gadgets.hpp"

namespace squareprod {

PlaneGraph grid_plane_graph(std::size_t m, std::size_t n)
{
    if (m == 0 || n == 0)
        throw Error(ErrorKind::InvalidArgument, "grid sides must be positive");
    std::map<VertexId, std::pair<double, double>> coords;
    std::vector<Edge> edges;
    auto id = [m](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * m + x); };
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < m; ++x) {
            coords[id(x, y)] = {static_cast<double>(x), static_cast<double>(y)};
            if (x + 1 < m)
                edges.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < n)
                edges.emplace_back(id(x, y), id(x, y + 1));
        }
    return plane_graph_from_drawing(coords, edges);
}

PlaneGraph forest_plane_graph(const Graph& forest)
{
    if (!is_forest(forest))
        throw Error(ErrorKind::InvalidArgument, "graph is not a forest");
    PlaneGraph::Rotation rotation;
    for (VertexId v : forest.vertices()) {
        const auto& nbrs = forest.neighbours(v);
        rotation[v] = std::vector<VertexId>(nbrs.begin(), nbrs.end());
    }
    std::vector<Dart> outer;
    for (const auto& component : connected_components(forest)) {
        VertexId v = component.front();
        if (forest.degree(v) > 0)
            outer.push_back({v, *forest.neighbours(v).begin()});
    }
    return PlaneGraph(std::move(rotation), std::move(outer));
}

namespace {

Graph tree_from_pruefer(const std::vector<std::size_t>& code)
{
    const std::size_t n = code.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : code)
        ++degree[x];
    Graph tree;
    for (std::size_t v = 0; v < n; ++v)
        tree.add_vertex(static_cast<VertexId>(v));
    for (std::size_t x : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        tree.add_edge(static_cast<VertexId>(leaf), static_cast<VertexId>(x));
        --degree[leaf];
        --degree[x];
    }
    std::vector<VertexId> last;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1)
            last.push_back(static_cast<VertexId>(v));
    tree.add_edge(last[0], last[1]);
    return tree;
}

std::string rooted_code(const Graph& tree, VertexId v, VertexId parent)
{
    std::vector<std::string> children;
    for (VertexId w : tree.neighbours(v))
        if (w != parent)
            children.push_back(rooted_code(tree, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    return out + ")";
}

// Canonical string of a tree: the smaller rooted code over its centres.
std::string tree_code(const Graph& tree)
{
    std::map<VertexId, std::size_t> degree;
    std::vector<VertexId> leaves;
    for (VertexId v : tree.vertices()) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1)
            leaves.push_back(v);
    }
    std::size_t remaining = tree.num_vertices();
    while (remaining > 2) {
        std::vector<VertexId> next;
        for (VertexId v : leaves) {
            --remaining;
            for (VertexId w : tree.neighbours(v))
                if (--degree[w] == 1)
                    next.push_back(w);
        }
        leaves = std::move(next);
    }
    std::string best;
    for (VertexId c : leaves) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

}  // namespace

std::vector<Graph> all_trees(std::size_t n)
{
    if (n == 0)
        return {};
    if (n <= 2)
        return {path_graph(n)};
    std::map<std::string, Graph> by_code;
    std::vector<std::size_t> code(n - 2, 0);
    while (true) {
        Graph tree = tree_from_pruefer(code);
        by_code.try_emplace(tree_code(tree), std::move(tree));
        std::size_t k = 0;
        while (k < code.size() && ++code[k] == n)
            code[k++] = 0;
        if (k == code.size())
            break;
    }
    std::vector<Graph> out;
    for (auto& [_, tree] : by_code)
        out.push_back(std::move(tree));
    return out;
}

Graph random_tree(std::mt19937_64& rng, std::size_t n)
{
    if (n <= 2)
        return path_graph(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> code(n - 2);
    for (auto& x : code)
        x = pick(rng);
    return tree_from_pruefer(code);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_vertex(static_cast<VertexId>(v));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

namespace {

void insert_before(std::vector<VertexId>& rot, VertexId before, VertexId x)
{
    rot.insert(std::find(rot.begin(), rot.end(), before), x);
}

}  // namespace

PlaneGraph glued_squaregraph(std::uint64_t seed, const GlueOptions& options)
{
    std::mt19937_64 rng(seed);
    const PlaneGraph square = grid_plane_graph(2, 2);
    PlaneGraph::Rotation rot = square.rotations();
    std::vector<VertexId> walk;
    for (const FaceWalk& face : square.faces())
        if (face.is_outer)
            walk = face.vertices();
    VertexId next_id = 4;

    auto at = [&](std::size_t k) { return walk[k % walk.size()]; };
    while (static_cast<std::size_t>(next_id) < options.target_vertices) {
        const std::size_t len = walk.size();
        std::vector<std::size_t> closable;
        for (std::size_t k = 0; k < len; ++k) {
            VertexId a = at(k), b = at(k + 1), c = at(k + 2);
            if (a != c && rot[b].size() >= 4 && std::count(walk.begin(), walk.end(), b) == 1)
                closable.push_back(k);
        }
        std::discrete_distribution<int> op_pick(
            {1.0, closable.empty() ? 0.0 : options.two_edge_weight, options.pendant_weight});
        const int op = op_pick(rng);
        if (op == 0) {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
            VertexId prev = at(k + len - 1), a = at(k), b = at(k + 1);
            VertexId d = next_id++, c = next_id++;
            insert_before(rot[a], prev, d);
            insert_before(rot[b], a, c);
            rot[d] = {a, c};
            rot[c] = {d, b};
            walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(k + 1), {d, c});
        } else if (op == 1) {
            const std::size_t k = closable[std::uniform_int_distribution<std::size_t>(0, closable.size() - 1)(rng)];
            VertexId prev = at(k + len - 1), a = at(k), b = at(k + 1), c = at(k + 2);
            VertexId d = next_id++;
            insert_before(rot[a], prev, d);
            insert_before(rot[c], b, d);
            rot[d] = {a, c};
            walk[(k + 1) % len] = d;
        } else {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
            VertexId prev = at(k + len - 1), v = at(k);
            VertexId p = next_id++;
            insert_before(rot[v], prev, p);
            rot[p] = {v};
            walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(k + 1), {p, v});
        }
    }
    return PlaneGraph(std::move(rot), {Dart{walk[0], walk[1]}});
}

PlaneGraph disjoint_union(const PlaneGraph& a, const PlaneGraph& b)
{
    PlaneGraph::Rotation rotation = a.rotations();
    std::vector<Dart> outer = a.outer_darts();
    const VertexId shift = a.num_vertices() == 0 ? 0 : a.rotations().rbegin()->first + 1;
    for (const auto& [v, nbrs] : b.rotations()) {
        auto& r = rotation[v + shift];
        for (VertexId w : nbrs)
            r.push_back(w + shift);
    }
    for (const Dart& d : b.outer_darts())
        outer.push_back({d.tail + shift, d.head + shift});
    return PlaneGraph(std::move(rotation), std::move(outer));
}

std::vector<CorpusEntry> squaregraph_corpus(std::uint64_t seed)
{
    std::vector<CorpusEntry> corpus;
    for (std::size_t m = 2; m <= 6; ++m)
        for (std::size_t n = 2; n <= 6; ++n)
            corpus.push_back({"grid-" + std::to_string(m) + "x" + std::to_string(n), grid_plane_graph(m, n)});

    for (std::size_t n = 1; n <= 8; ++n) {
        const auto trees = all_trees(n);
        for (std::size_t k = 0; k < trees.size(); ++k)
            corpus.push_back({"tree-" + std::to_string(n) + "-" + std::to_string(k), forest_plane_graph(trees[k])});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t n = 9; n <= 12; ++n)
        for (int k = 0; k < 2; ++k)
            corpus.push_back({"random-tree-" + std::to_string(n) + "-" + std::to_string(k),
                              forest_plane_graph(random_tree(rng, n))});

    for (std::size_t i = 0; i < 200; ++i) {
        GlueOptions options;
        options.target_vertices = 4 + i * 196 / 199;
        options.two_edge_weight = i % 3 == 0 ? 2.0 : 1.0;
        options.pendant_weight = i % 2 == 1 ? 0.3 : 0.0;
        corpus.push_back(
            {"glued-" + std::to_string(i), glued_squaregraph(seed * 1000003 + i, options)});
    }

    GlueOptions small;
    small.target_vertices = 30;
    small.pendant_weight = 0.2;
    corpus.push_back({"union-grid-grid", disjoint_union(grid_plane_graph(2, 3), grid_plane_graph(3, 3))});
    corpus.push_back({"union-glued-tree",
                      disjoint_union(glued_squaregraph(seed + 7, small), forest_plane_graph(all_trees(6).back()))});
    corpus.push_back({"union-tree-tree",
                      disjoint_union(forest_plane_graph(path_graph(5)), forest_plane_graph(all_trees(7).front()))});
    corpus.push_back({"union-grid-point", disjoint_union(grid_plane_graph(4, 3), forest_plane_graph(path_graph(1)))});

    for (std::size_t nprime = 2; nprime <= 9; ++nprime)
        corpus.push_back({"gadget-base-" + std::to_string(nprime), bipartite_base_embedding(nprime)});
    return corpus;
}

}  // namespace squareprod
