#pragma once

#include <vector>

#include "gentle/halfedge.hpp"
#include "gentle/matrix.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

enum class GraphEdgeKind { Ordinary, Loop, Truncated };

// A graph whose edges carry vertex multiplicities summing to 1 (truncated
// edge) or 2 (ordinary edge or loop).
struct TruncatedGraph {
    int vertex_count = 0;
    struct GEdge {
        // (vertex, multiplicity) pairs; one or two entries, multiplicities
        // summing to 1 or 2. Ordinary edges list two distinct vertices.
        std::vector<std::pair<int, int>> incidence;
    };
    std::vector<GEdge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    GraphEdgeKind edge_kind(int e) const;
};

// Connected components with the per-component facts the closed-form
// rank/determinant cases depend on.
struct GraphComponents {
    int count = 0;
    std::vector<int> vertex_comp;
    std::vector<int> edge_comp;
    // Per component:
    std::vector<int> vertices, edges_total, truncated, glued;
    std::vector<char> is_tree;    // glued skeleton acyclic
    std::vector<char> bipartite;  // glued skeleton bipartite (loops count as odd cycles)
    std::vector<char> bipartite_no_truncated;
};
GraphComponents analyze(const TruncatedGraph& g);

// Graph of a gentle order: one graph vertex per sigma-orbit, one edge per
// quiver vertex; mu(e_i)(v_j) counts out-arrows of quiver vertex i lying in
// sigma-orbit j. Half-edge i corresponds to arrow i of p.
TruncatedGraph truncated_graph(const GentlePresentation& p, const HalfEdgeSystem& h);

// Edge-by-vertex incidence matrix: entries 0/1/2, 2 for a loop.
IntMatrix incidence_matrix(const TruncatedGraph& g);

// Signless edge-based Laplacian B·Bᵀ; equals the Cartan matrix of the order.
IntMatrix cartan_matrix(const TruncatedGraph& g);

// Number of components that are bipartite without truncated edges; the
// kernel of B has this rank.
long graph_bc(const TruncatedGraph& g);

// rank C = #vertices - graph_bc.
long rank_formula(const TruncatedGraph& g);

// Closed-form det C, multiplied over components: n+1 for a tree without
// truncated edges, 4 for a unique odd cycle with as many vertices as edges,
// 1 for a tree with one truncated edge, 0 otherwise.
Integer det_formula(const TruncatedGraph& g);

// Closed-form |det B| (0 unless every component is square): 2 / 1 / 0 per
// component for odd-cycle / tree-with-one-truncated-edge / otherwise.
Integer det_b_formula(const TruncatedGraph& g);

// Independent Cartan oracle: entry (i,j) counts the relation-free paths from
// vertex j to vertex i of length >= 1 that repeat no arrow, found by
// exhaustive walk over the quiver. Throws InstanceTooLargeError beyond
// max_arrows.
IntMatrix cartan_path_oracle(const GentlePresentation& p, int max_arrows = 16);

}  // namespace gentle
