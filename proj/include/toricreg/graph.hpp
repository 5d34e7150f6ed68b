#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricreg {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/// Unordered vertex pair; stored with u < w.
struct Edge {
    Vertex u = 0;
    Vertex w = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), w(a < b ? b : a) {}

    bool touches(Vertex v) const { return u == v || w == v; }
    Vertex other(Vertex v) const { return v == u ? w : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loopless multigraph whose edge order is the variable order t_1..t_s.
///
/// Construction rejects loops, isolated vertices and empty edge lists.
class Multigraph {
public:
    Multigraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    /// Indices of the edges incident to v, ascending.
    std::span<const EdgeIndex> incident(Vertex v) const;
    std::size_t degree(Vertex v) const { return incident(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;
    bool is_simple() const;

    std::string describe() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<EdgeIndex> incidence_;
};

/// Path lengths k_1..k_r of a parallel composition (r >= 2, k_i >= 1).
struct ParallelSpec {
    std::vector<unsigned> lengths;

    void validate() const;
    std::size_t num_paths() const { return lengths.size(); }
    /// Offset of path i (0-based): k_1 + ... + k_i, so the path's edges are sigma(i)..sigma(i)+k-1.
    std::size_t sigma(std::size_t i) const;
    unsigned total_length() const;
};

struct GraphStats {
    std::size_t n = 0;      // vertices
    std::size_t m = 0;      // connected components
    std::size_t gamma = 0;  // non-bipartite components
};

/// A subgraph re-indexed as a standalone multigraph, with maps back to the parent.
struct Subgraph {
    Multigraph graph;
    std::vector<EdgeIndex> edge_ids;  // parent index of each edge, ascending
    std::vector<Vertex> vertex_ids;   // parent index of each vertex, ascending
};

enum class Family { Path, Cycle, Complete, CompleteBipartite, CompleteMultipartite, Star };

/// Vertices v = 0, w = 1, then the interior vertices of P_1, P_2, ... in order from v to w.
/// Path i receives edge indices sigma(i) .. sigma(i)+k_i-1 in order from v to w.
Multigraph parallel_composition(const ParallelSpec& spec);

/// Standard families. Vertices are numbered in construction order (parts consecutively for
/// the multipartite kinds, centre 0 for stars) and edges are sorted lexicographically.
Multigraph family(Family kind, std::span<const unsigned> params);

GraphStats graph_stats(const Multigraph& g);

/// Component label per vertex.
std::vector<std::size_t> components(const Multigraph& g);

/// Proper 2-colouring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Multigraph& g);

/// Merges b into a; edge list length and order are preserved. Throws EdgeExists when
/// {a, b} is an edge and InvalidSpec when a == b.
Multigraph identify_vertices(const Multigraph& g, Vertex a, Vertex b);

/// Biconnected components; a bundle of parallel edges is 2-connected. Sorted by smallest edge.
std::vector<Subgraph> blocks(const Multigraph& g);

/// Drops every edge whose endpoint pair already occurred earlier in the edge list.
Multigraph simplify(const Multigraph& g);

/// The subgraph on the given edges (deduplicated and sorted); uncovered vertices are dropped.
Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeIndex> edge_ids);

/// G - v, with vertices left isolated by the deletion dropped as well.
Subgraph remove_vertex(const Multigraph& g, Vertex v);

}  // namespace toricreg
