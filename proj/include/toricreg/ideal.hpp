#pragma once

#include "toricreg/graph.hpp"
#include "toricreg/limits.hpp"
#include "toricreg/monomial.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace toricreg {

/// Per-vertex sums of a monomial's exponents over incident edges, reduced mod q-1.
class ResidueVec {
public:
    ResidueVec() = default;
    ResidueVec(std::vector<std::uint32_t> values, std::uint32_t modulus)
        : values_(std::move(values)), modulus_(modulus) {}

    std::size_t size() const { return values_.size(); }
    std::uint32_t operator[](std::size_t v) const { return values_[v]; }
    std::uint32_t modulus() const { return modulus_; }
    const std::vector<std::uint32_t>& values() const { return values_; }

    friend bool operator==(const ResidueVec&, const ResidueVec&) = default;

private:
    std::vector<std::uint32_t> values_;
    std::uint32_t modulus_ = 1;
};

ResidueVec residue_of(const Multigraph& g, std::uint32_t q, const ExponentVec& a);

/// Membership of the homogeneous binomial t^a - t^b in I(X): equal residues at every vertex.
/// Throws NotHomogeneous when |a| != |b|.
bool binomial_in_ideal(const Multigraph& g, std::uint32_t q, const ExponentVec& a,
                       const ExponentVec& b);

/// Reach(d) = residues of all degree-d monomials, for d = 0..max_degree().
///
/// Residue vectors are encoded in mixed radix q-1 (vertex 0 least significant) and each
/// Reach(d) is a bitset over the (q-1)^n codes.
class ReachTable {
public:
    ReachTable(const Multigraph& g, std::uint32_t q, const Limits& limits = default_limits());

    /// Extends the table until it holds Reach(d).
    void extend_to(unsigned d);

    unsigned max_degree() const { return static_cast<unsigned>(levels_.size() - 1); }
    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t num_states() const { return states_; }

    bool contains(unsigned d, const ResidueVec& r) const;
    bool contains_code(unsigned d, std::uint64_t code) const;
    std::uint64_t size(unsigned d) const;
    std::vector<ResidueVec> residues(unsigned d) const;

    std::uint64_t encode(const ResidueVec& r) const;
    ResidueVec decode(std::uint64_t code) const;
    /// Code of r + chi_j, where chi_j adds 1 at both endpoints of edge j.
    std::uint64_t add_edge(std::uint64_t code, EdgeIndex j) const;
    /// Code of r - chi_j.
    std::uint64_t sub_edge(std::uint64_t code, EdgeIndex j) const;

private:
    using Bitset = std::vector<std::uint64_t>;

    std::uint64_t shift_vertex(std::uint64_t code, Vertex v, bool up) const;

    std::vector<Edge> edges_;
    std::vector<Edge> distinct_;
    std::size_t n_;
    std::uint32_t modulus_;
    std::uint64_t states_;
    std::vector<std::uint64_t> weight_;
    std::vector<Bitset> levels_;
};

ReachTable reachable_residues(const Multigraph& g, std::uint32_t q, unsigned d_max,
                              const Limits& limits = default_limits());

/// Whether t^a lies in (I(X), t_j): some b with |b| = |a|-1 has residue(t_j t^b) = residue(a).
/// Degree 0 is never a member (Reach(-1) is empty).
bool monomial_in_ideal_plus_edge(const Multigraph& g, std::uint32_t q, const ExponentVec& a,
                                 EdgeIndex j, const ReachTable& reach);

/// Regularity from the Artinian quotient K[E_G]/(I(X), t_j): one less than the least d >= 1
/// at which every degree-d monomial lies in (I(X), t_j).
unsigned regularity_sieve(const Multigraph& g, std::uint32_t q, EdgeIndex j,
                          const Limits& limits = default_limits());

/// A maximal trail whose interior vertices have degree 2, edges listed in order.
/// `cyclic` marks a whole component that is a cycle (no vertex of degree != 2).
struct Ear {
    std::vector<EdgeIndex> edges;
    bool cyclic = false;
};

std::vector<Ear> ears(const Multigraph& g);

/// Whether t_i and t_j sit on a common ear an even number of positions apart.
bool same_parity_on_ear(const Multigraph& g, EdgeIndex i, EdgeIndex j);

/// Exchanges the exponents of t_i and t_j; throws NotSameParityEar unless they sit on a
/// common ear in positions of equal parity.
ExponentVec ear_swap(const Multigraph& g, const ExponentVec& a, EdgeIndex i, EdgeIndex j);

/// Exponents of f_i g_j and f_j g_i (paths i, j 0-based), where f_i multiplies the odd-position
/// edges of P_i and g_i the even-position ones.
std::pair<ExponentVec, ExponentVec> parallel_fg_binomial(const ParallelSpec& spec, std::size_t i,
                                                         std::size_t j);

}  // namespace toricreg
