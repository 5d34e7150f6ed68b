#pragma once

#include "toricreg/graph.hpp"
#include "toricreg/limits.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace toricreg {

/// A closed-form regularity value, or the reason none applies.
struct FormulaResult {
    std::optional<std::uint64_t> value;
    std::string rule;
    std::string reason;

    static FormulaResult applied(std::uint64_t value, std::string rule, std::string note = {});
    static FormulaResult not_applicable(std::string rule, std::string reason);
    bool applicable() const { return value.has_value(); }
};

/// Known values for the standard families:
///   Path, Star                  torus, (s-1)(q-2)
///   Cycle(k), k odd             torus, (k-1)(q-2)
///   Cycle(k), k even            (k/2-1)(q-2)
///   Complete(n), n >= 4         ceil((n-1)(q-2)/2)
///   CompleteBipartite(a,b)      (max{a,b}-1)(q-2)
///   CompleteMultipartite, r>=3  max{alpha_i(q-2), ceil((n-1)(q-2)/2)}, n >= 4
/// Complete(3) and multipartite(1,1,1) are odd cycles and get the torus value; the
/// complete-graph row is recorded in `reason` there but not used.
FormulaResult reg_closed_form(Family kind, std::span<const unsigned> params, std::uint32_t q);

/// ceil((n-1)(q-2)/2) with no guard on n.
std::uint64_t complete_graph_row(std::size_t n, std::uint32_t q);

/// (s-1)(q-2).
std::uint64_t torus_reg(std::size_t s, std::uint32_t q);

/// Value for a parallel composition of paths, by the number l of odd lengths.
std::uint64_t reg_parallel(const ParallelSpec& spec, std::uint32_t q);

/// Identifier of the row reg_parallel uses for the spec.
std::string_view parallel_rule(const ParallelSpec& spec);

/// The mixed-parity value rebuilt from the two parity classes: reg(H_1) + reg(H_2) + (q-2),
/// each class evaluated as a same-parity composition, or as a path when it has one member.
/// Throws NotApplicable when all lengths have the same parity.
std::uint64_t reg_parallel_split(const ParallelSpec& spec, std::uint32_t q);

/// Sum of block values plus (#blocks - 1)(q-2); `block_reg` follows the order of blocks(g).
/// Throws NotApplicable unless g is simple and bipartite, LengthMismatch on a count mismatch.
std::uint64_t block_additive_reg(const Multigraph& g, std::uint32_t q,
                                 std::span<const std::uint64_t> block_reg);

/// Recognition on an arbitrary connected graph, after removing repeated edges: X equal to the
/// torus, or a bipartite cactus (blocks are edges and even cycles, combined with
/// block_additive_reg).
FormulaResult formula_for_graph(const Multigraph& g, std::uint32_t q);

struct PendantWitness {
    Vertex v;
};
struct NonEdgeWitness {
    Vertex a;
    Vertex b;
};
struct CoverWitness {
    std::vector<EdgeIndex> h1;
    std::vector<EdgeIndex> h2;
};
struct IndependentSetWitness {
    std::vector<Vertex> vertices;
};
/// One side of a bipartition of a connected bipartite graph; the other side is the rest.
struct BipartitionWitness {
    std::vector<Vertex> side;
};
struct ParitySplitWitness {
    ParallelSpec spec;
};

using Witness = std::variant<PendantWitness, NonEdgeWitness, CoverWitness, IndependentSetWitness,
                             BipartitionWitness, ParitySplitWitness>;

std::string describe(const Witness& w);

struct BoundRow {
    std::string name;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    std::string relation;  // "==", ">=" or "<="
    bool satisfied = false;
    std::string detail;

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct BoundReport {
    std::vector<BoundRow> rows;
    bool all_satisfied() const;
};

/// Regularity of a derived graph at the fixed q of the check.
using RegOracle = std::function<std::uint64_t(const Multigraph&)>;

/// regularity_rank, falling back to regularity_sieve (edge 0) when the rank method is too large.
std::uint64_t reference_regularity(const Multigraph& g, std::uint32_t q,
                                   const Limits& limits = default_limits());

/// Checks each witnessed inequality with `reg` as the regularity of g. Throws InvalidWitness
/// when a witness does not meet its structural hypotheses.
BoundReport verify_bounds(const Multigraph& g, std::uint32_t q, std::uint64_t reg,
                          std::span<const Witness> witnesses, const RegOracle& oracle);

BoundReport verify_bounds(const Multigraph& g, std::uint32_t q, std::uint64_t reg,
                          std::span<const Witness> witnesses);

/// Every pendant vertex, one non-edge pair, one edge cover, one maximal independent set with
/// an edge left over, the bipartition when g is connected and bipartite, and the parity split
/// when `spec` describes g with both parities present.
std::vector<Witness> auto_witnesses(const Multigraph& g,
                                    const std::optional<ParallelSpec>& spec = std::nullopt);

}  // namespace toricreg
