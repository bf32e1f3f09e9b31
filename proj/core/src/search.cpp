#include <algorithm>
#include <cstdint>

#include "dense.hpp"
#include "squareprod/decompose.hpp"
#include "squareprod/gadgets.hpp"

namespace squareprod {

ModelCheck verify_minor_model(const Graph& host, const Graph& target, const MinorModel& model, std::size_t s)
{
    auto fail = [](std::string reason) { return ModelCheck{false, std::move(reason)}; };
    std::map<VertexId, VertexId> owner;
    for (VertexId t : target.vertices()) {
        auto it = model.branch_sets.find(t);
        if (it == model.branch_sets.end() || it->second.empty())
            return fail("target vertex " + std::to_string(t) + " has an empty branch set");
        const auto& set = it->second;
        if (set.size() > s)
            return fail("branch set of " + std::to_string(t) + " has more than " + std::to_string(s) + " vertices");
        for (VertexId v : set) {
            if (!host.has_vertex(v))
                return fail("branch set of " + std::to_string(t) + " uses unknown vertex " + std::to_string(v));
            if (auto [prev, inserted] = owner.emplace(v, t); !inserted)
                return fail("branch sets of " + std::to_string(prev->second) + " and " + std::to_string(t)
                            + " share vertex " + std::to_string(v));
        }
        if (!is_connected(induced_subgraph(host, set)))
            return fail("branch set of " + std::to_string(t) + " is not connected");
    }
    if (model.branch_sets.size() != target.num_vertices())
        return fail("model has branch sets for vertices outside the target");
    for (const auto& [a, b] : target.edges()) {
        bool realised = false;
        for (VertexId v : model.branch_sets.at(a)) {
            for (VertexId w : host.neighbours(v))
                if (model.branch_sets.at(b).contains(w)) {
                    realised = true;
                    break;
                }
            if (realised)
                break;
        }
        if (!realised)
            return fail("target edge " + std::to_string(a) + "-" + std::to_string(b) + " is not realised");
    }
    return {};
}

std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& target, std::size_t s, std::size_t gate,
                                           SearchStats* stats)
{
    if (host.num_vertices() > gate)
        throw Error(ErrorKind::SizeGate, "host has " + std::to_string(host.num_vertices()) + " vertices, gate is "
                                             + std::to_string(gate));
    if (target.num_vertices() == 0)
        return MinorModel{};
    if (target.num_vertices() > host.num_vertices() || s == 0)
        return std::nullopt;

    using detail::Mask;
    const detail::DenseGraph dg(host);
    struct Candidate {
        Mask set;
        Mask reach;  // set plus its neighbourhood
    };
    std::vector<Candidate> candidates;
    for (int a = 0; a < dg.size(); ++a) {
        const Mask allowed = dg.all() & ~(detail::bit(a) - 1);
        dg.for_each_connected_subset(a, allowed, static_cast<int>(s), [&](Mask set) {
            candidates.push_back({set, set | dg.neighbourhood(set)});
            return true;
        });
    }

    // Place target vertices so that each one after the first has as many
    // placed neighbours as possible.
    std::vector<VertexId> order;
    std::set<VertexId> placed;
    while (order.size() < target.num_vertices()) {
        std::optional<VertexId> best;
        std::pair<std::size_t, std::size_t> best_key{0, 0};
        for (VertexId t : target.vertices()) {
            if (placed.contains(t))
                continue;
            std::size_t links = 0;
            for (VertexId u : target.neighbours(t))
                links += placed.contains(u);
            std::pair<std::size_t, std::size_t> key{links, target.degree(t)};
            if (!best || key > best_key) {
                best = t;
                best_key = key;
            }
        }
        order.push_back(*best);
        placed.insert(*best);
    }

    std::map<VertexId, std::size_t> chosen;
    std::uint64_t nodes = 0;
    auto search = [&](auto&& self, std::size_t k, Mask used) -> bool {
        ++nodes;
        if (k == order.size())
            return true;
        const VertexId t = order[k];
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Candidate& cand = candidates[c];
            if (cand.set & used)
                continue;
            bool ok = true;
            for (VertexId u : target.neighbours(t))
                if (auto it = chosen.find(u); it != chosen.end() && !(candidates[it->second].set & cand.reach)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen[t] = c;
            if (self(self, k + 1, used | cand.set))
                return true;
            chosen.erase(t);
        }
        return false;
    };
    const bool found = search(search, 0, 0);
    if (stats)
        stats->nodes += nodes;
    if (!found)
        return std::nullopt;
    MinorModel model;
    for (const auto& [t, c] : chosen) {
        auto& set = model.branch_sets[t];
        for (Mask m = candidates[c].set; m; m &= m - 1)
            set.insert(dg.ids[detail::lowest(m)]);
    }
    return model;
}

PathDecomposition pathwidth_exact(const Graph& g, std::size_t gate)
{
    if (g.num_vertices() > gate || g.num_vertices() > 24)
        throw Error(ErrorKind::SizeGate, "pathwidth needs at most " + std::to_string(gate) + " vertices");
    PathDecomposition out;
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return out;

    const detail::DenseGraph dg(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto boundary = [&](std::uint32_t set) {
        std::uint32_t b = 0;
        for (std::uint32_t m = set; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (static_cast<std::uint32_t>(dg.adj[v]) & ~set)
                b |= std::uint32_t{1} << v;
        }
        return b;
    };

    // best[S]: least possible maximum boundary over orderings that place S
    // first; last[S]: the vertex placed last in such an ordering.
    std::vector<std::uint8_t> best(std::size_t{1} << n, 0), last(std::size_t{1} << n, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        std::uint8_t lowest = 255;
        for (std::uint32_t m = set; m; m &= m - 1) {
            int v = std::countr_zero(m);
            std::uint8_t f = best[set & ~(std::uint32_t{1} << v)];
            if (f < lowest) {
                lowest = f;
                last[set] = static_cast<std::uint8_t>(v);
            }
        }
        best[set] = std::max<std::uint8_t>(lowest, static_cast<std::uint8_t>(std::popcount(boundary(set))));
    }

    std::vector<int> order;
    for (std::uint32_t set = full; set; set &= ~(std::uint32_t{1} << last[set]))
        order.push_back(last[set]);
    std::reverse(order.begin(), order.end());

    std::uint32_t prefix = 0;
    for (int v : order) {
        std::set<VertexId> bag;
        for (std::uint32_t m = boundary(prefix); m; m &= m - 1)
            bag.insert(dg.ids[std::countr_zero(m)]);
        bag.insert(dg.ids[v]);
        out.width = std::max(out.width, bag.size() - 1);
        out.bags.push_back(std::move(bag));
        prefix |= std::uint32_t{1} << v;
    }
    return out;
}

bool is_path_decomposition(const Graph& g, const std::vector<std::set<VertexId>>& bags)
{
    std::map<VertexId, std::pair<std::size_t, std::size_t>> span;
    std::map<VertexId, std::size_t> count;
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (VertexId v : bags[i]) {
            if (!g.has_vertex(v))
                return false;
            auto [it, inserted] = span.try_emplace(v, i, i);
            it->second.second = i;
            ++count[v];
        }
    for (VertexId v : g.vertices()) {
        auto it = span.find(v);
        if (it == span.end() || count[v] != it->second.second - it->second.first + 1)
            return false;
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = std::any_of(bags.begin(), bags.end(),
                                   [&](const auto& bag) { return bag.contains(u) && bag.contains(v); });
        if (!covered)
            return false;
    }
    return true;
}

Graph join_graph(std::size_t n, std::size_t k)
{
    Graph g = path_graph(n);
    for (std::size_t a = 0; a < k; ++a) {
        const auto x = static_cast<VertexId>(n + a);
        g.add_vertex(x);
        for (std::size_t b = 0; b < a; ++b)
            g.add_edge(x, static_cast<VertexId>(n + b));
        for (std::size_t v = 0; v < n; ++v)
            g.add_edge(x, static_cast<VertexId>(v));
    }
    return g;
}

bool contains_join_subgraph(const Graph& h, std::size_t n, std::size_t k, std::size_t gate)
{
    return subgraph_injection_exists(join_graph(n, k), h, gate).has_value();
}

namespace {

class ForestQuotientSearch {
public:
    ForestQuotientSearch(const Graph& g, std::size_t ell, std::size_t max_layers)
        : g_(g), ell_(ell), max_layers_(static_cast<int>(max_layers))
    {
        // Breadth-first order per component so that most vertices meet an
        // already-placed neighbour.
        std::set<VertexId> seen;
        for (VertexId s : g.vertices()) {
            if (seen.contains(s))
                continue;
            std::vector<VertexId> queue{s};
            seen.insert(s);
            for (std::size_t q = 0; q < queue.size(); ++q) {
                order_.push_back(queue[q]);
                for (VertexId w : g.neighbours(queue[q]))
                    if (seen.insert(w).second)
                        queue.push_back(w);
            }
        }
        const std::size_t n = order_.size();
        for (std::size_t k = 0; k < n; ++k)
            position_[order_[k]] = k;
        layer_.assign(n, -1);
        part_.assign(n, -1);
        load_.assign(n, std::vector<std::size_t>(static_cast<std::size_t>(std::max(max_layers_, 1)), 0));
        multiplicity_.assign(n, std::vector<int>(n, 0));
    }

    ForestQuotientResult run()
    {
        ForestQuotientResult result;
        if (max_layers_ > 0 || order_.empty())
            result.sat = place(0);
        result.nodes_explored = nodes_;
        if (result.sat) {
            ForestQuotientWitness w;
            w.parts.resize(static_cast<std::size_t>(parts_));
            std::map<VertexId, std::size_t> layer_of;
            for (std::size_t k = 0; k < order_.size(); ++k) {
                w.parts[static_cast<std::size_t>(part_[k])].push_back(order_[k]);
                layer_of[order_[k]] = static_cast<std::size_t>(layer_[k]);
            }
            for (auto& part : w.parts)
                std::sort(part.begin(), part.end());
            w.layering = Layering::from_layer_map(layer_of);
            w.quotient = quotient(g_, w.parts);
            result.witness = std::move(w);
        }
        return result;
    }

private:
    bool connected_in_quotient(int a, int b) const
    {
        std::vector<char> seen(static_cast<std::size_t>(parts_), 0);
        std::vector<int> stack{a};
        seen[static_cast<std::size_t>(a)] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == b)
                return true;
            for (int y = 0; y < parts_; ++y)
                if (!seen[static_cast<std::size_t>(y)] && multiplicity_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        return false;
    }

    bool place(std::size_t k)
    {
        ++nodes_;
        if (k == order_.size())
            return order_.empty() || *std::min_element(layer_.begin(), layer_.end()) == 0;
        const VertexId v = order_[k];
        std::vector<std::size_t> placed;
        int lo = 0, hi = max_layers_ - 1;
        for (VertexId w : g_.neighbours(v)) {
            std::size_t pw = position_.at(w);
            if (pw < k) {
                placed.push_back(pw);
                lo = std::max(lo, layer_[pw] - 1);
                hi = std::min(hi, layer_[pw] + 1);
            }
        }
        for (int layer = lo; layer <= hi; ++layer) {
            layer_[k] = layer;
            for (int p = 0; p <= parts_ && p < static_cast<int>(order_.size()); ++p) {
                if (p < parts_ && load_[static_cast<std::size_t>(p)][static_cast<std::size_t>(layer)] >= ell_)
                    continue;
                if (assign(k, p, placed))
                    return true;
            }
        }
        layer_[k] = -1;
        return false;
    }

    // Puts order_[k] into part p, keeping the quotient acyclic, and recurses.
    bool assign(std::size_t k, int p, const std::vector<std::size_t>& placed)
    {
        const bool fresh = p == parts_;
        if (fresh)
            ++parts_;
        std::vector<int> added;
        bool acyclic = true;
        for (std::size_t pw : placed) {
            int q = part_[pw];
            if (q == p)
                continue;
            auto& m = multiplicity_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            if (m == 0 && connected_in_quotient(p, q)) {
                acyclic = false;
                break;
            }
            ++m;
            ++multiplicity_[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
            added.push_back(q);
        }
        bool found = false;
        if (acyclic) {
            part_[k] = p;
            ++load_[static_cast<std::size_t>(p)][static_cast<std::size_t>(layer_[k])];
            found = place(k + 1);
            if (!found) {
                --load_[static_cast<std::size_t>(p)][static_cast<std::size_t>(layer_[k])];
                part_[k] = -1;
            }
        }
        if (!found) {
            for (int q : added) {
                --multiplicity_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                --multiplicity_[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
            }
            if (fresh)
                --parts_;
        }
        return found;
    }

    const Graph& g_;
    std::size_t ell_;
    int max_layers_;
    std::vector<VertexId> order_;
    std::map<VertexId, std::size_t> position_;
    std::vector<int> layer_;
    std::vector<int> part_;
    int parts_ = 0;
    std::vector<std::vector<std::size_t>> load_;
    std::vector<std::vector<int>> multiplicity_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ForestQuotientResult forest_quotient_search(const Graph& g, std::size_t ell, std::size_t max_layers, std::size_t gate)
{
    if (g.num_vertices() > gate)
        throw Error(ErrorKind::SizeGate, "forest quotient search has " + std::to_string(g.num_vertices())
                                             + " vertices, gate is " + std::to_string(gate));
    if (ell < 1)
        throw Error(ErrorKind::InvalidArgument, "width must be at least 1");
    return ForestQuotientSearch(g, ell, max_layers).run();
}

}  // namespace squareprod
