#pragma once

#include "toricreg/field.hpp"
#include "toricreg/graph.hpp"
#include "toricreg/limits.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/points.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace toricreg {

enum class RankEngine { Elimination, Characters };

/// H(0), H(1), ... of K[E_G]/I(X), the regularity index when reached, and |X|.
struct HilbertProfile {
    std::vector<std::uint64_t> values;
    std::optional<unsigned> regularity;
    std::uint64_t degree = 0;
    RankEngine engine = RankEngine::Elimination;
};

/// All exponent vectors of total degree d in N^s, graded-lexicographic (descending) order.
std::vector<ExponentVec> monomials_of_degree(std::size_t s, unsigned d);

/// C(s+d-1, d), saturating at UINT64_MAX.
std::uint64_t count_monomials(std::size_t s, unsigned d);

/// Rank over GF(q) of the |X| x C(s+d-1,d) evaluation matrix of degree-d monomials.
std::uint64_t hilbert_value(const PointSet& points, unsigned d, const Field& field,
                            const Limits& limits = default_limits());

/// H(0..max_degree), stopping early once H reaches |X| (later values are |X|).
HilbertProfile hilbert_profile(const PointSet& points, const Field& field, unsigned max_degree,
                               const Limits& limits = default_limits());

/// H(0..max_degree) as the number of distinct degree-d monomial functions on X.
///
/// Coordinatewise products of points of X lie in X, so each monomial restricts to a character
/// of the group X; distinct characters are linearly independent (Dedekind), hence the count of
/// distinct columns is the rank. Columns are compared on a generating set of X picked from the
/// points. Throws Internal if the points are not closed under multiplication.
HilbertProfile hilbert_profile_characters(const PointSet& points, unsigned max_degree);

/// Regularity as the least d with H(d) = |X|, via evaluation-matrix ranks: Gaussian elimination
/// while |X|^2 fits limits.max_matrix_entries, hilbert_profile_characters beyond that.
/// Throws CeilingExceeded if H(d) < |X| at d = (s-1)(q-2)+1.
HilbertProfile regularity_rank(const Multigraph& g, std::uint32_t q,
                               const Limits& limits = default_limits());

/// (s-1)(q-2)+1: the degree by which every subset of the torus T^{s-1} has full Hilbert value.
unsigned regularity_ceiling(std::size_t s, std::uint32_t q);

namespace detail {

/// Incrementally maintained column space of a matrix over GF(q) with a fixed number of rows.
/// Columns are inserted one at a time; rank() is the dimension of their span.
class ColumnBasis {
public:
    static std::unique_ptr<ColumnBasis> create(const Field& field, std::size_t rows,
                                               std::uint64_t max_entries);
    /// Kernel that only uses Zech-log arithmetic, for any q.
    static std::unique_ptr<ColumnBasis> create_generic(const Field& field, std::size_t rows,
                                                       std::uint64_t max_entries);
    virtual ~ColumnBasis() = default;

    /// Column with every entry nonzero, given as generator exponents.
    virtual bool insert_exponents(std::span<const std::uint16_t> exponents) = 0;
    /// Arbitrary column.
    virtual bool insert_elements(std::span<const FieldElem> column) = 0;

    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }
    bool full() const { return rank_ == rows_; }

protected:
    ColumnBasis(std::size_t rows, std::uint64_t max_entries)
        : rows_(rows), max_entries_(max_entries) {}
    void reserve_one_more() const;

    std::size_t rows_;
    std::uint64_t max_entries_;
    std::size_t rank_ = 0;
};

}  // namespace detail

}  // namespace toricreg
