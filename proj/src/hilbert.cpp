#include "toricreg/hilbert.hpp"

#include "flat_row_set.hpp"
#include "toricreg/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace toricreg {

namespace detail {

void ColumnBasis::reserve_one_more() const {
    const std::uint64_t needed = (static_cast<std::uint64_t>(rank_) + 1) * rows_;
    if (needed > max_entries_) {
        throw Error(ErrorKind::TooLarge, "basis storage of " + std::to_string(needed) +
                                             " entries exceeds the matrix cap " +
                                             std::to_string(max_entries_));
    }
}

namespace {

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

/// GF(p): integer residues with lazy reduction in 32-bit accumulators.
class PrimeBasis final : public ColumnBasis {
public:
    PrimeBasis(const Field& field, std::size_t rows, std::uint64_t max_entries)
        : ColumnBasis(rows, max_entries), p_(field.q()), acc_(rows) {
        antilog_.resize(field.order());
        for (std::uint32_t e = 0; e < field.order(); ++e) {
            antilog_[e] = field.to_int(FieldElem::from_exponent(e));
        }
    }

    bool insert_exponents(std::span<const std::uint16_t> exponents) override {
        if (full()) return false;
        for (std::size_t i = 0; i < rows_; ++i) acc_[i] = antilog_[exponents[i]];
        return reduce_and_store();
    }

    bool insert_elements(std::span<const FieldElem> column) override {
        if (full()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            acc_[i] = column[i].is_zero() ? 0 : antilog_[column[i].exponent()];
        }
        return reduce_and_store();
    }

private:
    bool reduce_and_store() {
        const std::uint64_t step = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
        constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max();
        std::uint64_t bound = p_ - 1;
        std::uint32_t* acc = acc_.data();
        const std::size_t rows = rows_;
        for (std::size_t j = 0; j < rank_; ++j) {
            const std::uint32_t lambda = acc[pivots_[j]] % p_;
            if (lambda == 0) continue;
            if (bound + step > kMax) {
                for (std::size_t i = 0; i < rows; ++i) acc[i] %= p_;
                bound = p_ - 1;
            }
            const std::uint32_t factor = p_ - lambda;
            const std::uint16_t* b = basis_.data() + j * rows;
            for (std::size_t i = 0; i < rows; ++i) acc[i] += factor * b[i];
            bound += step;
        }
        std::size_t pivot = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            acc[i] %= p_;
            if (pivot == rows && acc[i] != 0) pivot = i;
        }
        if (pivot == rows) return false;
        reserve_one_more();
        const std::uint64_t inv = inverse_mod_prime(acc[pivot], p_);
        const std::size_t offset = basis_.size();
        basis_.resize(offset + rows);
        for (std::size_t i = 0; i < rows; ++i) {
            basis_[offset + i] = static_cast<std::uint16_t>(acc[i] * inv % p_);
        }
        pivots_.push_back(pivot);
        ++rank_;
        return true;
    }

    std::uint32_t p_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> acc_;
    std::vector<std::uint16_t> basis_;
    std::vector<std::size_t> pivots_;
};

/// GF(2^k), k >= 2: integer (bit-polynomial) form, addition by XOR, basis rows in log form.
class Char2Basis final : public ColumnBasis {
public:
    Char2Basis(const Field& field, std::size_t rows, std::uint64_t max_entries)
        : ColumnBasis(rows, max_entries), m_(field.order()), acc_(rows) {
        // table[e] = g^e for e < 2m; table[2m .. 3m) = 0 so the zero marker 2m absorbs any shift.
        table_.assign(3 * static_cast<std::size_t>(m_), 0);
        for (std::uint32_t e = 0; e < 2 * m_; ++e) {
            table_[e] = static_cast<std::uint16_t>(field.to_int(FieldElem::from_exponent(e % m_)));
        }
        log_.assign(field.q(), 0);
        for (std::uint32_t e = 0; e < m_; ++e) log_[table_[e]] = e;
    }

    bool insert_exponents(std::span<const std::uint16_t> exponents) override {
        if (full()) return false;
        for (std::size_t i = 0; i < rows_; ++i) acc_[i] = table_[exponents[i]];
        return reduce_and_store();
    }

    bool insert_elements(std::span<const FieldElem> column) override {
        if (full()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            acc_[i] = column[i].is_zero() ? 0 : table_[column[i].exponent()];
        }
        return reduce_and_store();
    }

private:
    bool reduce_and_store() {
        const std::size_t rows = rows_;
        std::uint16_t* acc = acc_.data();
        for (std::size_t j = 0; j < rank_; ++j) {
            const std::uint16_t lambda = acc[pivots_[j]];
            if (lambda == 0) continue;
            const std::uint16_t* tab = table_.data() + log_[lambda];
            const std::uint32_t* b = basis_.data() + j * rows;
            for (std::size_t i = 0; i < rows; ++i) acc[i] ^= tab[b[i]];
        }
        std::size_t pivot = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (acc[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) return false;
        reserve_one_more();
        const std::uint32_t shift = m_ - log_[acc[pivot]];
        const std::size_t offset = basis_.size();
        basis_.resize(offset + rows);
        for (std::size_t i = 0; i < rows; ++i) {
            basis_[offset + i] = acc[i] == 0 ? 2 * m_ : (log_[acc[i]] + shift) % m_;
        }
        pivots_.push_back(pivot);
        ++rank_;
        return true;
    }

    std::uint32_t m_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> acc_;
    std::vector<std::uint32_t> basis_;
    std::vector<std::size_t> pivots_;
};

/// Any GF(q) through the Field's Zech-log operations.
class ZechBasis final : public ColumnBasis {
public:
    ZechBasis(const Field& field, std::size_t rows, std::uint64_t max_entries)
        : ColumnBasis(rows, max_entries), field_(field), acc_(rows) {}

    bool insert_exponents(std::span<const std::uint16_t> exponents) override {
        if (full()) return false;
        for (std::size_t i = 0; i < rows_; ++i) acc_[i] = FieldElem::from_exponent(exponents[i]);
        return reduce_and_store();
    }

    bool insert_elements(std::span<const FieldElem> column) override {
        if (full()) return false;
        std::copy(column.begin(), column.end(), acc_.begin());
        return reduce_and_store();
    }

private:
    bool reduce_and_store() {
        const std::size_t rows = rows_;
        for (std::size_t j = 0; j < rank_; ++j) {
            const FieldElem lambda = acc_[pivots_[j]];
            if (lambda.is_zero()) continue;
            const FieldElem factor = field_.neg(lambda);
            const FieldElem* b = basis_.data() + j * rows;
            for (std::size_t i = 0; i < rows; ++i) {
                acc_[i] = field_.add(acc_[i], field_.mul(factor, b[i]));
            }
        }
        const auto it = std::find_if(acc_.begin(), acc_.end(),
                                     [](FieldElem x) { return !x.is_zero(); });
        if (it == acc_.end()) return false;
        reserve_one_more();
        const std::size_t pivot = static_cast<std::size_t>(it - acc_.begin());
        const FieldElem inv = field_.inv(acc_[pivot]);
        for (FieldElem x : acc_) basis_.push_back(field_.mul(x, inv));
        pivots_.push_back(pivot);
        ++rank_;
        return true;
    }

    const Field& field_;
    std::vector<FieldElem> acc_;
    std::vector<FieldElem> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

std::unique_ptr<ColumnBasis> ColumnBasis::create(const Field& field, std::size_t rows,
                                                 std::uint64_t max_entries) {
    if (field.is_prime_field()) return std::make_unique<PrimeBasis>(field, rows, max_entries);
    if (field.characteristic() == 2) return std::make_unique<Char2Basis>(field, rows, max_entries);
    return std::make_unique<ZechBasis>(field, rows, max_entries);
}

std::unique_ptr<ColumnBasis> ColumnBasis::create_generic(const Field& field, std::size_t rows,
                                                         std::uint64_t max_entries) {
    return std::make_unique<ZechBasis>(field, rows, max_entries);
}

}  // namespace detail

std::uint64_t count_monomials(std::size_t s, unsigned d) {
    // C(s-1+d, d) computed incrementally: C(s-1+i, i) = C(s-2+i, i-1) * (s-1+i) / i.
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (s == 0) return d == 0 ? 1 : 0;
    unsigned __int128 c = 1;
    for (unsigned i = 1; i <= d; ++i) {
        c = c * (s - 1 + i) / i;
        if (c > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<ExponentVec> monomials_of_degree(std::size_t s, unsigned d) {
    std::vector<ExponentVec> out;
    if (s == 0) return out;
    ExponentVec cur(s);
    // Depth-first over positions, each taking its largest remaining value first.
    auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == s) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (unsigned v = remaining + 1; v-- > 0;) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    fill(fill, 0, d);
    return out;
}

unsigned regularity_ceiling(std::size_t s, std::uint32_t q) {
    return static_cast<unsigned>((s - 1) * (q - 2) + 1);
}

namespace {

void require_field_matches(const PointSet& points, const Field& field) {
    if (points.q() != field.q()) {
        throw Error(ErrorKind::LengthMismatch, "field size does not match the point set");
    }
}

void check_rank_bound(std::uint64_t rank, std::size_t s, unsigned d) {
    if (rank > count_monomials(s, d)) {
        throw Error(ErrorKind::Internal, "rank exceeds the number of monomials in degree " +
                                             std::to_string(d));
    }
}

/// Walks d = 0, 1, 2, ... keeping the distinct evaluation columns seen so far.
///
/// The degree-(d+1) columns are the degree-d columns shifted by each edge's exponent row.
/// Because every point has E_1 = 0, multiplication by t_1 fixes columns, so the distinct
/// columns of degree d are contained in those of degree d+1 and only the newest ones need
/// to be shifted.
class ProfileWalker {
public:
    ProfileWalker(const PointSet& points, const Field& field, const Limits& limits)
        : rows_(points.size()),
          s_(points.num_coordinates()),
          m_(field.order()),
          limits_(limits),
          columns_(points.size()),
          basis_(detail::ColumnBasis::create(field, points.size(), limits.max_matrix_entries)) {
        shifts_.assign(s_ * rows_, 0);
        for (std::size_t p = 0; p < rows_; ++p) {
            const auto pt = points.point(p);
            if (pt[0] != 0) throw Error(ErrorKind::Internal, "point is not in canonical form");
            for (std::size_t i = 0; i < s_; ++i) {
                shifts_[i * rows_ + p] = static_cast<std::uint16_t>(pt[i]);
            }
        }
    }

    std::uint64_t advance() {
        if (degree_ < 0) {
            const std::vector<std::uint16_t> ones(rows_, 0);
            add_column(ones);
            degree_ = 0;
            return basis_->rank();
        }
        ++degree_;
        if (basis_->full()) return rows_;
        std::vector<std::size_t> frontier;
        frontier.swap(frontier_);
        std::vector<std::uint16_t> col(rows_);
        std::vector<std::uint16_t> src(rows_);
        for (std::size_t c : frontier) {
            const auto stored = columns_.row(c);
            std::copy(stored.begin(), stored.end(), src.begin());
            for (std::size_t i = 0; i < s_; ++i) {
                const std::uint16_t* shift = shifts_.data() + i * rows_;
                for (std::size_t p = 0; p < rows_; ++p) {
                    const std::uint32_t e = std::uint32_t{src[p]} + shift[p];
                    col[p] = static_cast<std::uint16_t>(e >= m_ ? e - m_ : e);
                }
                add_column(col);
                if (basis_->full()) return rows_;
            }
        }
        return basis_->rank();
    }

    int degree() const { return degree_; }

private:
    void add_column(std::span<const std::uint16_t> col) {
        auto [index, inserted] = columns_.insert(col);
        if (!inserted) return;
        if (static_cast<std::uint64_t>(columns_.size()) * rows_ > limits_.max_matrix_entries) {
            throw Error(ErrorKind::TooLarge, "evaluation columns exceed the matrix cap");
        }
        frontier_.push_back(index);
        basis_->insert_exponents(col);
    }

    std::size_t rows_;
    std::size_t s_;
    std::uint32_t m_;
    const Limits& limits_;
    detail::FlatRowSet<std::uint16_t> columns_;
    std::unique_ptr<detail::ColumnBasis> basis_;
    std::vector<std::uint16_t> shifts_;
    std::vector<std::size_t> frontier_;
    int degree_ = -1;
};

}  // namespace

std::uint64_t hilbert_value(const PointSet& points, unsigned d, const Field& field,
                            const Limits& limits) {
    require_field_matches(points, field);
    const std::size_t rows = points.size();
    const std::size_t s = points.num_coordinates();
    auto basis = detail::ColumnBasis::create(field, rows, limits.max_matrix_entries);
    detail::FlatRowSet<std::uint16_t> seen(rows);
    std::vector<std::uint16_t> col(rows);
    for (const ExponentVec& a : monomials_of_degree(s, d)) {
        for (std::size_t p = 0; p < rows; ++p) {
            col[p] = static_cast<std::uint16_t>(evaluate_monomial(points.point(p), a, field).exponent());
        }
        if (!seen.insert(col).second) continue;
        if (static_cast<std::uint64_t>(seen.size()) * rows > limits.max_matrix_entries) {
            throw Error(ErrorKind::TooLarge, "evaluation matrix exceeds the matrix cap");
        }
        basis->insert_exponents(col);
        if (basis->full()) break;
    }
    check_rank_bound(basis->rank(), s, d);
    return basis->rank();
}

HilbertProfile hilbert_profile(const PointSet& points, const Field& field, unsigned max_degree,
                               const Limits& limits) {
    require_field_matches(points, field);
    HilbertProfile profile;
    profile.degree = points.size();
    ProfileWalker walker(points, field, limits);
    for (unsigned d = 0; d <= max_degree; ++d) {
        const std::uint64_t h = walker.advance();
        check_rank_bound(h, points.num_coordinates(), d);
        profile.values.push_back(h);
        if (h == profile.degree) {
            profile.regularity = d;
            while (profile.values.size() <= max_degree) profile.values.push_back(h);
            break;
        }
    }
    return profile;
}

namespace {

/// Greedy generating set of the point group (addition of exponent vectors mod q-1).
std::vector<std::vector<std::uint16_t>> group_generators(const PointSet& points) {
    const std::size_t s = points.num_coordinates();
    const std::uint32_t m = points.q() - 1;
    detail::FlatRowSet<std::uint16_t> all(s);
    std::vector<std::uint16_t> row(s);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points.point(i);
        std::copy(p.begin(), p.end(), row.begin());
        all.insert(row);
    }

    const std::vector<std::uint16_t> identity(s, 0);
    if (!all.contains(identity)) throw Error(ErrorKind::Internal, "point set lacks the identity");
    std::vector<std::vector<std::uint16_t>> gens;
    detail::FlatRowSet<std::uint16_t> span(s);
    span.insert(identity);
    for (std::size_t i = 0; i < all.size() && span.size() < all.size(); ++i) {
        const std::vector<std::uint16_t> p(all.row(i).begin(), all.row(i).end());
        if (span.contains(p)) continue;
        gens.push_back(p);
        // span <- span + <p>
        const std::size_t old_size = span.size();
        for (std::size_t h = 0; h < old_size; ++h) {
            std::copy(span.row(h).begin(), span.row(h).end(), row.begin());
            while (true) {
                for (std::size_t c = 0; c < s; ++c) row[c] = static_cast<std::uint16_t>((row[c] + p[c]) % m);
                if (!all.contains(row)) {
                    throw Error(ErrorKind::Internal, "point set is not closed under multiplication");
                }
                if (!span.insert(row).second) break;
            }
        }
    }
    if (span.size() != all.size()) {
        throw Error(ErrorKind::Internal, "generated subgroup differs from the point set");
    }
    return gens;
}

}  // namespace

HilbertProfile hilbert_profile_characters(const PointSet& points, unsigned max_degree) {
    const std::size_t s = points.num_coordinates();
    const std::uint32_t m = points.q() - 1;
    const auto gens = group_generators(points);
    const std::size_t k = gens.size();

    HilbertProfile profile;
    profile.degree = points.size();
    profile.engine = RankEngine::Characters;
    // A column is the monomial's exponent of g at each generator; width at least 1.
    const std::size_t width = std::max<std::size_t>(k, 1);
    detail::FlatRowSet<std::uint16_t> columns(width);
    std::vector<std::size_t> frontier{columns.insert(std::vector<std::uint16_t>(width, 0)).first};
    std::vector<std::uint16_t> col(width, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        if (d > 0) {
            std::vector<std::size_t> next;
            for (std::size_t c : frontier) {
                for (std::size_t i = 0; i < s; ++i) {
                    const auto src = columns.row(c);
                    for (std::size_t j = 0; j < k; ++j) {
                        col[j] = static_cast<std::uint16_t>((src[j] + gens[j][i]) % m);
                    }
                    const auto [index, inserted] = columns.insert(col);
                    if (inserted) next.push_back(index);
                }
            }
            frontier.swap(next);
        }
        const std::uint64_t h = columns.size();
        check_rank_bound(h, s, d);
        profile.values.push_back(h);
        if (h == profile.degree) {
            profile.regularity = d;
            while (profile.values.size() <= max_degree) profile.values.push_back(h);
            break;
        }
    }
    return profile;
}

HilbertProfile regularity_rank(const Multigraph& g, std::uint32_t q, const Limits& limits) {
    const PointSet points = enumerate_points(g, q, limits);
    const std::uint64_t n = points.size();
    const Field field(q);
    const unsigned ceiling = regularity_ceiling(g.num_edges(), q);
    HilbertProfile profile = n * n > limits.max_matrix_entries
                                 ? hilbert_profile_characters(points, ceiling)
                                 : hilbert_profile(points, field, ceiling, limits);
    if (!profile.regularity) {
        throw Error(ErrorKind::CeilingExceeded, "Hilbert function below |X| at degree " +
                                                    std::to_string(ceiling));
    }
    profile.values.resize(*profile.regularity + 1);
    return profile;
}

}  // namespace toricreg
