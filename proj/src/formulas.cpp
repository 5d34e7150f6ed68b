#include "toricreg/formulas.hpp"

#include "toricreg/error.hpp"
#include "toricreg/field.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/ideal.hpp"
#include "toricreg/points.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toricreg {

FormulaResult FormulaResult::applied(std::uint64_t value, std::string rule, std::string note) {
    return FormulaResult{value, std::move(rule), std::move(note)};
}

FormulaResult FormulaResult::not_applicable(std::string rule, std::string reason) {
    return FormulaResult{std::nullopt, std::move(rule), std::move(reason)};
}

namespace {

void require_q(std::uint32_t q) {
    if (q < 2 || !is_prime_power(q)) {
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
}

std::uint64_t ceil_half(std::uint64_t x) { return (x + 1) / 2; }

}  // namespace

std::uint64_t torus_reg(std::size_t s, std::uint32_t q) {
    require_q(q);
    if (s == 0) throw Error(ErrorKind::InvalidSpec, "graph has no edges");
    return static_cast<std::uint64_t>(s - 1) * (q - 2);
}

std::uint64_t complete_graph_row(std::size_t n, std::uint32_t q) {
    require_q(q);
    if (n < 2) throw Error(ErrorKind::InvalidSpec, "complete(n) needs n >= 2");
    return ceil_half(static_cast<std::uint64_t>(n - 1) * (q - 2));
}

FormulaResult reg_closed_form(Family kind, std::span<const unsigned> params, std::uint32_t q) {
    require_q(q);
    // Building the graph validates the parameters.
    const Multigraph g = family(kind, params);
    switch (kind) {
        case Family::Path:
        case Family::Star:
            return FormulaResult::applied(torus_reg(g.num_edges(), q), "torus");
        case Family::Cycle: {
            const unsigned k = params[0];
            if (k % 2 == 1) return FormulaResult::applied(torus_reg(k, q), "torus");
            return FormulaResult::applied(static_cast<std::uint64_t>(k / 2 - 1) * (q - 2),
                                          "even-cycle");
        }
        case Family::Complete: {
            const unsigned n = params[0];
            if (n <= 3) {
                std::string note;
                if (n == 3) {
                    note = "complete-graph row would give " + std::to_string(complete_graph_row(3, q)) +
                           "; not used at n = 3";
                }
                return FormulaResult::applied(torus_reg(g.num_edges(), q), "torus", note);
            }
            return FormulaResult::applied(complete_graph_row(n, q), "complete");
        }
        case Family::CompleteBipartite: {
            const unsigned top = std::max(params[0], params[1]);
            return FormulaResult::applied(static_cast<std::uint64_t>(top - 1) * (q - 2), "biclique");
        }
        case Family::CompleteMultipartite: {
            if (params.size() == 2) {
                const unsigned top = std::max(params[0], params[1]);
                return FormulaResult::applied(static_cast<std::uint64_t>(top - 1) * (q - 2),
                                              "biclique");
            }
            const std::uint64_t n = std::accumulate(params.begin(), params.end(), std::uint64_t{0});
            if (n < 4) {
                return FormulaResult::applied(torus_reg(g.num_edges(), q), "torus",
                                              "multipartite row would give " +
                                                  std::to_string(complete_graph_row(3, q)) +
                                                  "; not used at n = 3");
            }
            const unsigned top = *std::max_element(params.begin(), params.end());
            return FormulaResult::applied(
                std::max<std::uint64_t>(static_cast<std::uint64_t>(top) * (q - 2),
                                        complete_graph_row(n, q)),
                "multipartite");
        }
    }
    return FormulaResult::not_applicable("none", "unknown family");
}

namespace {

struct ParityCounts {
    std::vector<unsigned> odd;
    std::vector<unsigned> even;
};

ParityCounts split_parity(const ParallelSpec& spec) {
    ParityCounts out;
    for (unsigned k : spec.lengths) (k % 2 == 1 ? out.odd : out.even).push_back(k);
    return out;
}

std::uint64_t sum_floor_half(const std::vector<unsigned>& ks) {
    std::uint64_t total = 0;
    for (unsigned k : ks) total += k / 2;
    return total;
}

}  // namespace

std::string_view parallel_rule(const ParallelSpec& spec) {
    spec.validate();
    const std::size_t r = spec.num_paths();
    const std::size_t l = split_parity(spec).odd.size();
    if (l == 0) return "parallel-even";
    if (l == r) return "parallel-odd";
    if (l == 1 && r == 2) return "parallel-odd-even-pair";
    if (l == 1) return "parallel-one-odd";
    if (r == l + 1) return "parallel-one-even";
    return "parallel-mixed";
}

std::uint64_t reg_parallel(const ParallelSpec& spec, std::uint32_t q) {
    require_q(q);
    const std::string_view rule = parallel_rule(spec);
    const ParityCounts p = split_parity(spec);
    const std::uint64_t unit = q - 2;
    const std::uint64_t odd_half = sum_floor_half(p.odd);
    const std::uint64_t even_half = sum_floor_half(p.even);
    if (rule == "parallel-even") return (even_half - 1) * unit;
    if (rule == "parallel-odd") return odd_half * unit;
    if (rule == "parallel-odd-even-pair") {
        return (static_cast<std::uint64_t>(spec.lengths[0]) + spec.lengths[1] - 1) * unit;
    }
    if (rule == "parallel-one-odd") return (p.odd[0] + even_half - 1) * unit;
    if (rule == "parallel-one-even") return (odd_half + p.even[0]) * unit;
    return (odd_half + even_half) * unit;
}

std::uint64_t reg_parallel_split(const ParallelSpec& spec, std::uint32_t q) {
    require_q(q);
    spec.validate();
    const ParityCounts p = split_parity(spec);
    if (p.odd.empty() || p.even.empty()) {
        throw Error(ErrorKind::NotApplicable, "all path lengths have the same parity");
    }
    const auto class_value = [&](const std::vector<unsigned>& ks) {
        if (ks.size() == 1) return torus_reg(ks[0], q);
        return reg_parallel(ParallelSpec{ks}, q);
    };
    return class_value(p.odd) + class_value(p.even) + (q - 2);
}

std::uint64_t block_additive_reg(const Multigraph& g, std::uint32_t q,
                                 std::span<const std::uint64_t> block_reg) {
    require_q(q);
    if (!g.is_simple()) throw Error(ErrorKind::NotApplicable, "graph has parallel edges");
    if (!two_coloring(g)) throw Error(ErrorKind::NotApplicable, "graph is not bipartite");
    const std::size_t count = blocks(g).size();
    if (block_reg.size() != count) {
        throw Error(ErrorKind::LengthMismatch, std::to_string(block_reg.size()) +
                                                   " block values for " + std::to_string(count) +
                                                   " blocks");
    }
    const std::uint64_t sum = std::accumulate(block_reg.begin(), block_reg.end(), std::uint64_t{0});
    return sum + static_cast<std::uint64_t>(count - 1) * (q - 2);
}

namespace {

bool is_cycle_graph(const Multigraph& g) {
    if (g.num_edges() != g.num_vertices()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    const auto comp = components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

}  // namespace

FormulaResult formula_for_graph(const Multigraph& g, std::uint32_t q) {
    require_q(q);
    const GraphStats stats = graph_stats(g);
    if (stats.m != 1) {
        return FormulaResult::not_applicable("none", "disconnected graph");
    }
    if (!g.is_simple()) {
        FormulaResult inner = formula_for_graph(simplify(g), q);
        inner.rule = "simplified " + inner.rule;
        return inner;
    }
    const std::size_t s = g.num_edges();
    const std::uint64_t degree = degree_formula(stats, q);
    std::uint64_t torus_size = 1;
    bool torus_fits = true;
    for (std::size_t i = 1; i < s && torus_fits; ++i) {
        if (torus_size > degree / (q - 1)) {
            torus_fits = false;
        } else {
            torus_size *= q - 1;
        }
    }
    if (torus_fits && torus_size == degree) {
        return FormulaResult::applied(torus_reg(s, q), "torus");
    }
    if (!two_coloring(g)) return FormulaResult::not_applicable("none", "graph is not bipartite");
    std::vector<std::uint64_t> values;
    for (const Subgraph& b : blocks(g)) {
        if (b.graph.num_edges() == 1) {
            values.push_back(0);
        } else if (is_cycle_graph(b.graph)) {
            values.push_back(static_cast<std::uint64_t>(b.graph.num_edges() / 2 - 1) * (q - 2));
        } else {
            return FormulaResult::not_applicable("none", "a block is neither an edge nor a cycle");
        }
    }
    if (values.size() == 1) return FormulaResult::applied(values[0], "even-cycle");
    return FormulaResult::applied(block_additive_reg(g, q, values), "bipartite-cactus");
}

std::string describe(const Witness& w) {
    std::ostringstream out;
    const auto list = [&](const auto& xs) {
        out << '{';
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
        out << '}';
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PendantWitness>) {
                out << "pendant v=" << x.v;
            } else if constexpr (std::is_same_v<T, NonEdgeWitness>) {
                out << "identify " << x.a << "~" << x.b;
            } else if constexpr (std::is_same_v<T, CoverWitness>) {
                out << "cover H1=";
                list(x.h1);
                out << " H2=";
                list(x.h2);
            } else if constexpr (std::is_same_v<T, IndependentSetWitness>) {
                out << "independent ";
                list(x.vertices);
            } else if constexpr (std::is_same_v<T, BipartitionWitness>) {
                out << "bipartition side=";
                list(x.side);
            } else {
                out << "parity split ";
                list(x.spec.lengths);
            }
        },
        w);
    return out.str();
}

bool BoundReport::all_satisfied() const {
    return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.satisfied; });
}

std::uint64_t reference_regularity(const Multigraph& g, std::uint32_t q, const Limits& limits) {
    try {
        const HilbertProfile profile = regularity_rank(g, q, limits);
        return *profile.regularity;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
    }
    return regularity_sieve(g, q, 0, limits);
}

namespace {

[[noreturn]] void invalid(const Witness& w, const std::string& why) {
    throw Error(ErrorKind::InvalidWitness, describe(w) + ": " + why);
}

BoundRow make_row(std::string name, std::uint64_t lhs, std::uint64_t rhs, std::string relation,
                  std::string detail) {
    bool ok = false;
    if (relation == "==") ok = lhs == rhs;
    if (relation == ">=") ok = lhs >= rhs;
    if (relation == "<=") ok = lhs <= rhs;
    return BoundRow{std::move(name), lhs, rhs, std::move(relation), ok, std::move(detail)};
}

void check_vertex(const Multigraph& g, const Witness& w, Vertex v) {
    if (v >= g.num_vertices()) invalid(w, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

BoundReport verify_bounds(const Multigraph& g, std::uint32_t q, std::uint64_t reg,
                          std::span<const Witness> witnesses, const RegOracle& oracle) {
    require_q(q);
    const std::uint64_t unit = q - 2;
    BoundReport report;
    for (const Witness& w : witnesses) {
        const std::string detail = describe(w);
        if (const auto* p = std::get_if<PendantWitness>(&w)) {
            check_vertex(g, w, p->v);
            if (g.degree(p->v) != 1) invalid(w, "vertex does not have degree 1");
            if (g.num_edges() < 2) invalid(w, "graph has a single edge");
            const Subgraph rest = remove_vertex(g, p->v);
            report.rows.push_back(
                make_row("pendant", reg, oracle(rest.graph) + unit, "==", detail));
        } else if (const auto* ne = std::get_if<NonEdgeWitness>(&w)) {
            check_vertex(g, w, ne->a);
            check_vertex(g, w, ne->b);
            if (ne->a == ne->b) invalid(w, "vertices coincide");
            if (g.adjacent(ne->a, ne->b)) invalid(w, "vertices are adjacent");
            const Multigraph merged = identify_vertices(g, ne->a, ne->b);
            report.rows.push_back(make_row("identify", reg, oracle(merged), ">=", detail));
        } else if (const auto* c = std::get_if<CoverWitness>(&w)) {
            std::set<EdgeIndex> a(c->h1.begin(), c->h1.end());
            std::set<EdgeIndex> b(c->h2.begin(), c->h2.end());
            if (a.empty() || b.empty()) invalid(w, "empty edge set");
            if (*a.rbegin() >= g.num_edges() || *b.rbegin() >= g.num_edges()) {
                invalid(w, "edge index out of range");
            }
            std::set<EdgeIndex> all = a;
            all.insert(b.begin(), b.end());
            if (all.size() != g.num_edges()) invalid(w, "the two edge sets do not cover the graph");
            if (!std::any_of(a.begin(), a.end(), [&](EdgeIndex e) { return b.count(e) != 0; })) {
                invalid(w, "the two edge sets share no edge");
            }
            const std::vector<EdgeIndex> va(a.begin(), a.end());
            const std::vector<EdgeIndex> vb(b.begin(), b.end());
            const std::uint64_t bound =
                oracle(edge_subgraph(g, va).graph) + oracle(edge_subgraph(g, vb).graph);
            report.rows.push_back(make_row("cover", reg, bound, "<=", detail));
        } else if (const auto* is = std::get_if<IndependentSetWitness>(&w)) {
            std::set<Vertex> set(is->vertices.begin(), is->vertices.end());
            if (set.empty()) invalid(w, "empty vertex set");
            for (Vertex v : set) check_vertex(g, w, v);
            bool leftover = false;
            for (const Edge& e : g.edges()) {
                const bool hit_u = set.count(e.u) != 0;
                const bool hit_w = set.count(e.w) != 0;
                if (hit_u && hit_w) invalid(w, "vertex set is not independent");
                if (!hit_u && !hit_w) leftover = true;
            }
            if (!leftover) invalid(w, "no edge avoids the vertex set");
            report.rows.push_back(make_row("independent-set", reg,
                                           static_cast<std::uint64_t>(set.size()) * unit, ">=",
                                           detail));
        } else if (const auto* bp = std::get_if<BipartitionWitness>(&w)) {
            if (graph_stats(g).m != 1) invalid(w, "graph is not connected");
            std::vector<int> side(g.num_vertices(), 1);
            for (Vertex v : bp->side) {
                check_vertex(g, w, v);
                side[v] = 0;
            }
            for (const Edge& e : g.edges()) {
                if (side[e.u] == side[e.w]) invalid(w, "an edge joins two vertices of one side");
            }
            const auto a = static_cast<std::uint64_t>(std::count(side.begin(), side.end(), 0));
            const std::uint64_t b = g.num_vertices() - a;
            if (a == 0 || b == 0) invalid(w, "a side is empty");
            report.rows.push_back(
                make_row("bipartite", reg, (std::max(a, b) - 1) * unit, ">=", detail));
        } else if (const auto* ps = std::get_if<ParitySplitWitness>(&w)) {
            ps->spec.validate();
            if (!(parallel_composition(ps->spec) == g)) {
                invalid(w, "graph is not this parallel composition");
            }
            const ParityCounts parts = split_parity(ps->spec);
            if (parts.odd.empty() || parts.even.empty()) invalid(w, "only one parity present");
            const auto class_graph = [](const std::vector<unsigned>& ks) {
                if (ks.size() == 1) return family(Family::Path, std::span<const unsigned>(ks));
                return parallel_composition(ParallelSpec{ks});
            };
            const std::uint64_t value =
                oracle(class_graph(parts.odd)) + oracle(class_graph(parts.even)) + unit;
            report.rows.push_back(make_row("parity-split", reg, value, "==", detail));
        }
    }
    return report;
}

BoundReport verify_bounds(const Multigraph& g, std::uint32_t q, std::uint64_t reg,
                          std::span<const Witness> witnesses) {
    return verify_bounds(g, q, reg, witnesses,
                         [q](const Multigraph& h) { return reference_regularity(h, q); });
}

std::vector<Witness> auto_witnesses(const Multigraph& g, const std::optional<ParallelSpec>& spec) {
    std::vector<Witness> out;
    const std::size_t n = g.num_vertices();
    const std::size_t s = g.num_edges();
    if (s > 1) {
        for (Vertex v = 0; v < n; ++v) {
            if (g.degree(v) == 1) out.emplace_back(PendantWitness{v});
        }
    }
    const auto color = two_coloring(g);
    // Prefer a pair in one colour class so the merged graph stays bipartite.
    std::optional<NonEdgeWitness> pair;
    for (Vertex a = 0; a < n && !pair; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            if (!color || (*color)[a] == (*color)[b]) {
                pair = NonEdgeWitness{a, b};
                break;
            }
        }
    }
    if (pair) out.emplace_back(*pair);
    if (s >= 2) {
        CoverWitness cover;
        for (EdgeIndex i = 0; i <= s / 2; ++i) cover.h1.push_back(i);
        for (EdgeIndex i = s / 2; i < s; ++i) cover.h2.push_back(i);
        out.emplace_back(std::move(cover));
    }
    std::vector<Vertex> chosen;
    std::vector<bool> in_set(n, false);
    const auto has_leftover = [&]() {
        return std::any_of(g.edges().begin(), g.edges().end(),
                           [&](const Edge& e) { return !in_set[e.u] && !in_set[e.w]; });
    };
    for (Vertex v = 0; v < n; ++v) {
        bool free = true;
        for (EdgeIndex e : g.incident(v)) free = free && !in_set[g.edge(e).other(v)];
        if (!free) continue;
        in_set[v] = true;
        if (has_leftover()) {
            chosen.push_back(v);
        } else {
            in_set[v] = false;
        }
    }
    if (!chosen.empty()) out.emplace_back(IndependentSetWitness{chosen});
    if (color && graph_stats(g).m == 1) {
        BipartitionWitness bp;
        for (Vertex v = 0; v < n; ++v) {
            if ((*color)[v] == 0) bp.side.push_back(v);
        }
        out.emplace_back(std::move(bp));
    }
    if (spec) {
        const ParityCounts parts = split_parity(*spec);
        if (!parts.odd.empty() && !parts.even.empty() && parallel_composition(*spec) == g) {
            out.emplace_back(ParitySplitWitness{*spec});
        }
    }
    return out;
}

}  // namespace toricreg
