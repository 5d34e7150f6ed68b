#include "toricreg/graph.hpp"

#include "toricreg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace toricreg {

Multigraph::Multigraph(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
    if (edges_.empty()) throw Error(ErrorKind::InvalidSpec, "graph has no edges");
    std::vector<std::size_t> deg(n_, 0);
    for (const Edge& e : edges_) {
        if (e.u == e.w) throw Error(ErrorKind::InvalidSpec, "loop at vertex " + std::to_string(e.u));
        if (e.w >= n_) {
            throw Error(ErrorKind::InvalidSpec, "edge endpoint " + std::to_string(e.w) +
                                                    " out of range for " + std::to_string(n_) +
                                                    " vertices");
        }
        ++deg[e.u];
        ++deg[e.w];
    }
    for (std::size_t v = 0; v < n_; ++v) {
        if (deg[v] == 0) throw Error(ErrorKind::InvalidSpec, "isolated vertex " + std::to_string(v));
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    incidence_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        incidence_[fill[edges_[i].u]++] = i;
        incidence_[fill[edges_[i].w]++] = i;
    }
}

std::span<const EdgeIndex> Multigraph::incident(Vertex v) const {
    if (v >= n_) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Multigraph::adjacent(Vertex a, Vertex b) const {
    for (EdgeIndex i : incident(a)) {
        if (edges_[i].touches(b) && a != b) return true;
    }
    return false;
}

bool Multigraph::is_simple() const {
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
        if (!seen.insert(e).second) return false;
    }
    return true;
}

std::string Multigraph::describe() const {
    std::ostringstream os;
    os << "n=" << n_ << " s=" << edges_.size() << " edges:";
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        os << " t" << (i + 1) << "={" << edges_[i].u << "," << edges_[i].w << "}";
    }
    return os.str();
}

void ParallelSpec::validate() const {
    if (lengths.size() < 2) {
        throw Error(ErrorKind::InvalidSpec, "parallel composition needs at least 2 paths");
    }
    for (unsigned k : lengths) {
        if (k < 1) throw Error(ErrorKind::InvalidSpec, "path length must be >= 1");
    }
}

std::size_t ParallelSpec::sigma(std::size_t i) const {
    if (i >= lengths.size()) throw Error(ErrorKind::IndexOutOfRange, "path index");
    return std::accumulate(lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(i),
                           std::size_t{0});
}

unsigned ParallelSpec::total_length() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0u);
}

Multigraph parallel_composition(const ParallelSpec& spec) {
    spec.validate();
    constexpr Vertex v = 0, w = 1;
    Vertex next = 2;
    std::vector<Edge> edges;
    edges.reserve(spec.total_length());
    for (unsigned k : spec.lengths) {
        Vertex prev = v;
        for (unsigned step = 1; step < k; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, w);
    }
    return Multigraph(next, std::move(edges));
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidSpec, what);
}

Multigraph from_sorted(std::size_t n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return Multigraph(n, std::move(edges));
}

Multigraph multipartite(std::span<const unsigned> parts) {
    std::vector<Vertex> start;
    Vertex n = 0;
    for (unsigned a : parts) {
        require(a >= 1, "part sizes must be >= 1");
        start.push_back(n);
        n += a;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (Vertex x = start[i]; x < start[i] + parts[i]; ++x) {
                for (Vertex y = start[j]; y < start[j] + parts[j]; ++y) edges.emplace_back(x, y);
            }
        }
    }
    return from_sorted(n, std::move(edges));
}

}  // namespace

Multigraph family(Family kind, std::span<const unsigned> params) {
    switch (kind) {
        case Family::Path: {
            require(params.size() == 1 && params[0] >= 1, "path(k) needs k >= 1");
            std::vector<Edge> edges;
            for (Vertex i = 0; i < params[0]; ++i) edges.emplace_back(i, i + 1);
            return from_sorted(params[0] + 1, std::move(edges));
        }
        case Family::Cycle: {
            require(params.size() == 1 && params[0] >= 3, "cycle(k) needs k >= 3");
            const unsigned k = params[0];
            std::vector<Edge> edges;
            for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
            return from_sorted(k, std::move(edges));
        }
        case Family::Complete: {
            require(params.size() == 1 && params[0] >= 2, "complete(n) needs n >= 2");
            std::vector<Edge> edges;
            for (Vertex i = 0; i < params[0]; ++i) {
                for (Vertex j = i + 1; j < params[0]; ++j) edges.emplace_back(i, j);
            }
            return from_sorted(params[0], std::move(edges));
        }
        case Family::CompleteBipartite:
            require(params.size() == 2, "biclique(a,b) takes two part sizes");
            return multipartite(params);
        case Family::CompleteMultipartite:
            require(params.size() >= 2, "multipartite needs at least two parts");
            return multipartite(params);
        case Family::Star: {
            require(params.size() == 1 && params[0] >= 1, "star(k) needs k >= 1");
            std::vector<Edge> edges;
            for (Vertex i = 1; i <= params[0]; ++i) edges.emplace_back(0, i);
            return from_sorted(params[0] + 1, std::move(edges));
        }
    }
    throw Error(ErrorKind::InvalidSpec, "unknown family");
}

std::vector<std::size_t> components(const Multigraph& g) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.num_vertices(), kUnset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (label[s] != kUnset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (EdgeIndex i : g.incident(x)) {
                const Vertex y = g.edge(i).other(x);
                if (label[y] == kUnset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

namespace {

/// Two-colours each component; returns per-component bipartiteness and the colouring.
std::pair<std::vector<bool>, std::vector<int>> color_components(const Multigraph& g,
                                                                const std::vector<std::size_t>& comp,
                                                                std::size_t num_comp) {
    std::vector<int> color(g.num_vertices(), -1);
    std::vector<bool> bipartite(num_comp, true);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (EdgeIndex i : g.incident(x)) {
                const Vertex y = g.edge(i).other(x);
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    stack.push_back(y);
                } else if (color[y] == color[x]) {
                    bipartite[comp[x]] = false;
                }
            }
        }
    }
    return {std::move(bipartite), std::move(color)};
}

}  // namespace

GraphStats graph_stats(const Multigraph& g) {
    const auto comp = components(g);
    const std::size_t m = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    const auto [bipartite, color] = color_components(g, comp, m);
    GraphStats stats;
    stats.n = g.num_vertices();
    stats.m = m;
    stats.gamma = static_cast<std::size_t>(std::count(bipartite.begin(), bipartite.end(), false));
    return stats;
}

std::optional<std::vector<int>> two_coloring(const Multigraph& g) {
    const auto comp = components(g);
    const std::size_t m = *std::max_element(comp.begin(), comp.end()) + 1;
    auto [bipartite, color] = color_components(g, comp, m);
    for (bool b : bipartite) {
        if (!b) return std::nullopt;
    }
    return color;
}

Multigraph identify_vertices(const Multigraph& g, Vertex a, Vertex b) {
    if (a >= g.num_vertices() || b >= g.num_vertices()) {
        throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    }
    if (a == b) throw Error(ErrorKind::InvalidSpec, "cannot identify a vertex with itself");
    if (g.adjacent(a, b)) {
        throw Error(ErrorKind::EdgeExists,
                    "{" + std::to_string(a) + "," + std::to_string(b) + "} is an edge");
    }
    const Vertex keep = std::min(a, b);
    const Vertex gone = std::max(a, b);
    auto relabel = [&](Vertex x) -> Vertex {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) edges.emplace_back(relabel(e.u), relabel(e.w));
    return Multigraph(g.num_vertices() - 1, std::move(edges));
}

Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeIndex> edge_ids) {
    std::vector<EdgeIndex> ids(edge_ids.begin(), edge_ids.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw Error(ErrorKind::InvalidSpec, "empty edge subset");
    std::vector<Vertex> verts;
    for (EdgeIndex i : ids) {
        const Edge& e = g.edge(i);
        verts.push_back(e.u);
        verts.push_back(e.w);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(ids.size());
    for (EdgeIndex i : ids) edges.emplace_back(local(g.edge(i).u), local(g.edge(i).w));
    return Subgraph{Multigraph(verts.size(), std::move(edges)), std::move(ids), std::move(verts)};
}

Subgraph remove_vertex(const Multigraph& g, Vertex v) {
    std::vector<EdgeIndex> keep;
    for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
        if (!g.edge(i).touches(v)) keep.push_back(i);
    }
    if (keep.empty()) throw Error(ErrorKind::InvalidSpec, "removing the vertex leaves no edges");
    return edge_subgraph(g, keep);
}

Multigraph simplify(const Multigraph& g) {
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (seen.insert(e).second) edges.push_back(e);
    }
    return Multigraph(g.num_vertices(), std::move(edges));
}

std::vector<Subgraph> blocks(const Multigraph& g) {
    // Iterative Hopcroft-Tarjan on edges; the parent is skipped by edge index so that a
    // parallel pair closes a cycle of length 2.
    const std::size_t n = g.num_vertices();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kUnset), low(n, 0);
    std::vector<EdgeIndex> edge_stack;
    std::vector<bool> edge_seen(g.num_edges(), false);
    std::vector<std::vector<EdgeIndex>> groups;

    struct Frame {
        Vertex v;
        EdgeIndex via;  // edge used to enter v, or kUnset at a root
        std::size_t next;
    };
    std::size_t timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnset) continue;
        std::vector<Frame> stack{{root, kUnset, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const EdgeIndex i = inc[f.next++];
                if (i == f.via) continue;
                const Vertex y = g.edge(i).other(f.v);
                if (disc[y] == kUnset) {
                    edge_seen[i] = true;
                    edge_stack.push_back(i);
                    disc[y] = low[y] = timer++;
                    stack.push_back({y, i, 0});
                } else if (!edge_seen[i]) {
                    // back edge to an ancestor
                    edge_seen[i] = true;
                    edge_stack.push_back(i);
                    low[f.v] = std::min(low[f.v], disc[y]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] >= disc[parent.v]) {
                std::vector<EdgeIndex> group;
                while (true) {
                    const EdgeIndex e = edge_stack.back();
                    edge_stack.pop_back();
                    group.push_back(e);
                    if (e == done.via) break;
                }
                groups.push_back(std::move(group));
            }
        }
    }
    std::vector<Subgraph> out;
    out.reserve(groups.size());
    for (auto& group : groups) out.push_back(edge_subgraph(g, group));
    std::sort(out.begin(), out.end(), [](const Subgraph& a, const Subgraph& b) {
        return a.edge_ids.front() < b.edge_ids.front();
    });
    return out;
}

}  // namespace toricreg
