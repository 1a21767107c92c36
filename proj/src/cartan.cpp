#include "gentle/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "gentle/errors.hpp"

namespace gentle {

GraphEdgeKind TruncatedGraph::edge_kind(int e) const {
    const auto& inc = edges[e].incidence;
    int total = 0;
    for (const auto& [v, mult] : inc) total += mult;
    if (total == 1) return GraphEdgeKind::Truncated;
    return inc.size() == 1 ? GraphEdgeKind::Loop : GraphEdgeKind::Ordinary;
}

GraphComponents analyze(const TruncatedGraph& g) {
    GraphComponents c;
    // Union-find over vertices; only ordinary edges join two vertices.
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge_kind(e) == GraphEdgeKind::Ordinary)
            parent[find(g.edges[e].incidence[0].first)] = find(g.edges[e].incidence[1].first);
    }
    std::map<int, int> root_to_comp;
    c.vertex_comp.assign(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        int root = find(v);
        auto [it, inserted] = root_to_comp.try_emplace(root, c.count);
        if (inserted) ++c.count;
        c.vertex_comp[v] = it->second;
    }
    c.edge_comp.assign(g.edge_count(), -1);
    c.vertices.assign(c.count, 0);
    c.edges_total.assign(c.count, 0);
    c.truncated.assign(c.count, 0);
    c.glued.assign(c.count, 0);
    for (int v = 0; v < g.vertex_count; ++v) ++c.vertices[c.vertex_comp[v]];
    for (int e = 0; e < g.edge_count(); ++e) {
        int comp = c.vertex_comp[g.edges[e].incidence[0].first];
        c.edge_comp[e] = comp;
        ++c.edges_total[comp];
        if (g.edge_kind(e) == GraphEdgeKind::Truncated)
            ++c.truncated[comp];
        else
            ++c.glued[comp];
    }

    // A connected component is a tree iff its glued edges number one less
    // than its vertices (loops and parallel edges both create cycles).
    c.is_tree.assign(c.count, 0);
    for (int k = 0; k < c.count; ++k) c.is_tree[k] = (c.glued[k] == c.vertices[k] - 1);

    // Two-color the glued skeleton.
    std::vector<int> color(g.vertex_count, -1);
    std::vector<std::vector<std::pair<int, int>>> adjacency(g.vertex_count);
    c.bipartite.assign(c.count, 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        switch (g.edge_kind(e)) {
            case GraphEdgeKind::Loop:
                c.bipartite[c.edge_comp[e]] = 0;
                break;
            case GraphEdgeKind::Ordinary: {
                int a = g.edges[e].incidence[0].first;
                int b = g.edges[e].incidence[1].first;
                adjacency[a].push_back({b, e});
                adjacency[b].push_back({a, e});
                break;
            }
            case GraphEdgeKind::Truncated:
                break;
        }
    }
    for (int start = 0; start < g.vertex_count; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const auto& [w, e] : adjacency[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    c.bipartite[c.vertex_comp[v]] = 0;
                }
            }
        }
    }
    c.bipartite_no_truncated.assign(c.count, 0);
    for (int k = 0; k < c.count; ++k)
        c.bipartite_no_truncated[k] = c.bipartite[k] && c.truncated[k] == 0;
    return c;
}

TruncatedGraph truncated_graph(const GentlePresentation& p, const HalfEdgeSystem& h) {
    if (p.arrow_count() != h.n)
        throw Error("presentation and half-edge system disagree on arrow count");
    OrbitPartition orbits(h.sigma);
    TruncatedGraph g;
    g.vertex_count = orbits.count();
    g.edges.resize(p.vertex_count());
    for (int i = 0; i < p.vertex_count(); ++i) {
        std::map<int, int> mult;
        for (int a : p.out_arrows(i)) ++mult[orbits.orbit_of(a)];
        g.edges[i].incidence.assign(mult.begin(), mult.end());
        int total = 0;
        for (const auto& [v, m] : g.edges[i].incidence) total += m;
        if (total < 1 || total > 2)
            throw Error("vertex " + p.vertex_names[i] + " has out-degree " + std::to_string(total));
    }
    return g;
}

IntMatrix incidence_matrix(const TruncatedGraph& g) {
    IntMatrix b(g.edge_count(), g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e)
        for (const auto& [v, mult] : g.edges[e].incidence) b.at(e, v) = mult;
    return b;
}

IntMatrix cartan_matrix(const TruncatedGraph& g) {
    IntMatrix b = incidence_matrix(g);
    return b * b.transpose();
}

long graph_bc(const TruncatedGraph& g) {
    GraphComponents c = analyze(g);
    long bc = 0;
    for (int k = 0; k < c.count; ++k) bc += c.bipartite_no_truncated[k];
    return bc;
}

long rank_formula(const TruncatedGraph& g) { return g.vertex_count - graph_bc(g); }

Integer det_formula(const TruncatedGraph& g) {
    GraphComponents c = analyze(g);
    Integer det = 1;
    for (int k = 0; k < c.count; ++k) {
        if (c.is_tree[k] && c.truncated[k] == 0)
            det *= c.edges_total[k] + 1;
        else if (!c.bipartite[k] && c.truncated[k] == 0 && c.edges_total[k] == c.vertices[k])
            det *= 4;
        else if (c.is_tree[k] && c.truncated[k] == 1)
            det *= 1;
        else
            return 0;
    }
    return det;
}

Integer det_b_formula(const TruncatedGraph& g) {
    GraphComponents c = analyze(g);
    Integer det = 1;
    for (int k = 0; k < c.count; ++k) {
        if (c.edges_total[k] != c.vertices[k]) return 0;
        if (!c.bipartite[k] && c.truncated[k] == 0)
            det *= 2;
        else if (c.is_tree[k] && c.truncated[k] == 1)
            det *= 1;
        else
            return 0;
    }
    return det;
}

namespace {

void count_paths(const GentlePresentation& p, int start_vertex, int arrow, std::uint64_t used,
                 IntMatrix& counts) {
    counts.at(p.arrows[arrow].target, start_vertex) += 1;
    for (int next : p.out_arrows(p.arrows[arrow].target)) {
        if (used & (std::uint64_t{1} << next)) continue;
        if (p.has_relation(next, arrow)) continue;
        count_paths(p, start_vertex, next, used | (std::uint64_t{1} << next), counts);
    }
}

}  // namespace

IntMatrix cartan_path_oracle(const GentlePresentation& p, int max_arrows) {
    max_arrows = std::min(max_arrows, 64);  // used-arrow bitmask width
    if (p.arrow_count() > max_arrows)
        throw InstanceTooLargeError("path oracle limited to " + std::to_string(max_arrows) +
                                    " arrows, instance has " + std::to_string(p.arrow_count()));
    IntMatrix counts(p.vertex_count(), p.vertex_count());
    for (int j = 0; j < p.vertex_count(); ++j)
        for (int a : p.out_arrows(j))
            count_paths(p, j, a, std::uint64_t{1} << a, counts);
    return counts;
}

}  // namespace gentle
