#include "toricreg/cli.hpp"
#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace toricreg;

namespace {

Multigraph G(const char* spec) { return parse_graph_spec(spec).graph; }

/// Plain Gaussian elimination on field elements, independent of the ColumnBasis kernels.
std::size_t naive_rank(std::vector<std::vector<FieldElem>> rows, const Field& F) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const FieldElem inv = F.inv(rows[rank][c]);
        for (FieldElem& x : rows[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const FieldElem f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

std::uint64_t naive_hilbert(const PointSet& ps, unsigned d, const Field& F) {
    const auto monos = monomials_of_degree(ps.num_coordinates(), d);
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::vector<FieldElem> row;
        for (const ExponentVec& a : monos) row.push_back(evaluate_monomial(ps.point(i), a, F));
        rows.push_back(std::move(row));
    }
    return naive_rank(std::move(rows), F);
}

}  // namespace

TEST_CASE("monomial enumeration") {
    CHECK(monomials_of_degree(2, 0) == std::vector<ExponentVec>{ExponentVec{0, 0}});
    CHECK(monomials_of_degree(2, 2) ==
          std::vector<ExponentVec>{ExponentVec{2, 0}, ExponentVec{1, 1}, ExponentVec{0, 2}});
    CHECK(monomials_of_degree(3, 2).size() == 6);
    for (std::size_t s = 1; s <= 5; ++s) {
        for (unsigned d = 0; d <= 5; ++d) {
            const auto monos = monomials_of_degree(s, d);
            CHECK(monos.size() == count_monomials(s, d));
            for (std::size_t i = 0; i < monos.size(); ++i) {
                CHECK(monos[i].degree() == d);
                if (i > 0) CHECK(monos[i - 1] > monos[i]);
            }
        }
    }
    CHECK(count_monomials(11, 20) == 30045015);
    CHECK(count_monomials(200, 200) == ~std::uint64_t{0});
}

TEST_CASE("Hilbert values") {
    const Field F3(3);
    const PointSet p2 = enumerate_points(G("path(2)"), 3);
    CHECK(hilbert_value(p2, 0, F3) == 1);
    CHECK(hilbert_value(p2, 1, F3) == 2);
    const PointSet c3 = enumerate_points(G("cycle(3)"), 3);
    CHECK(hilbert_value(c3, 0, F3) == 1);
    CHECK(hilbert_value(c3, 1, F3) == 3);
    CHECK(hilbert_value(c3, 2, F3) == 4);
}

TEST_CASE("Hilbert values match naive elimination") {
    for (const char* spec : {"cycle(3)", "cycle(4)", "parallel(1,2,2)", "biclique(2,2)", "complete(4)",
                             "path(3)", "edges(0-1,0-1,1-2)", "star(3)"}) {
        for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
            CAPTURE(spec);
            CAPTURE(q);
            const Field F(q);
            const PointSet ps = enumerate_points(G(spec), q);
            if (ps.size() > 400) continue;
            for (unsigned d = 0; d <= 4; ++d) CHECK(hilbert_value(ps, d, F) == naive_hilbert(ps, d, F));
        }
    }
}

TEST_CASE("regularity by rank") {
    CHECK(regularity_rank(G("cycle(4)"), 3).regularity == 1u);
    CHECK(regularity_rank(G("parallel(1,1)"), 3).regularity == 0u);
    CHECK(regularity_rank(G("cycle(3)"), 3).regularity == 2u);
    CHECK(regularity_rank(G("path(3)"), 3).regularity == 2u);
    CHECK(regularity_rank(G("path(2)"), 4).regularity == 2u);
    const HilbertProfile c3 = regularity_rank(G("cycle(3)"), 3);
    CHECK(c3.degree == 4);
    CHECK(c3.values == std::vector<std::uint64_t>{1, 3, 4});
    for (const char* spec : {"path(1)", "cycle(5)", "complete(4)"}) {
        CHECK(regularity_rank(G(spec), 2).regularity == 0u);
    }
    CHECK(regularity_ceiling(4, 5) == 10);
}

TEST_CASE("profiles increase strictly, then stay at |X|") {
    for (const char* spec : {"cycle(5)", "parallel(2,3)", "biclique(2,3)", "star(4)", "edges(0-1,2-3)"}) {
        for (std::uint32_t q : {3u, 4u, 5u}) {
            CAPTURE(spec);
            CAPTURE(q);
            const PointSet ps = enumerate_points(G(spec), q);
            const Field F(q);
            const HilbertProfile hp = hilbert_profile(ps, F, 12);
            REQUIRE(hp.regularity.has_value());
            for (std::size_t d = 1; d < hp.values.size(); ++d) {
                if (d <= *hp.regularity) {
                    CHECK(hp.values[d] > hp.values[d - 1]);
                } else {
                    CHECK(hp.values[d] == hp.degree);
                }
            }
        }
    }
}

TEST_CASE("prime-field and Zech kernels agree") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {3u, 5u, 7u, 4u, 9u}) {
        const Field F(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + trial % 9;
            auto fast = detail::ColumnBasis::create(F, rows, 1 << 20);
            auto slow = detail::ColumnBasis::create_generic(F, rows, 1 << 20);
            for (int c = 0; c < 15; ++c) {
                std::vector<FieldElem> col(rows);
                for (FieldElem& x : col) x = F.from_int(pick(rng) % (c % 3 == 0 ? 2 : q));
                CHECK(fast->insert_elements(col) == slow->insert_elements(col));
                std::vector<std::uint16_t> ex(rows);
                for (auto& e : ex) e = static_cast<std::uint16_t>(pick(rng) % (q - 1));
                CHECK(fast->insert_exponents(ex) == slow->insert_exponents(ex));
                CHECK(fast->rank() == slow->rank());
            }
            CHECK(fast->full() == (fast->rank() == rows));
        }
    }
}

TEST_CASE("character count agrees with elimination") {
    for (const char* spec : {"cycle(3)", "cycle(6)", "parallel(1,2,2)", "parallel(3,3)", "biclique(2,3)",
                             "complete(4)", "path(4)", "edges(0-1,2-3)", "edges(0-1,0-1,1-2)"}) {
        for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
            CAPTURE(spec);
            CAPTURE(q);
            const PointSet ps = enumerate_points(G(spec), q);
            const HilbertProfile a = hilbert_profile(ps, Field(q), 14);
            const HilbertProfile b = hilbert_profile_characters(ps, 14);
            CHECK(a.values == b.values);
            CHECK(a.regularity == b.regularity);
            CHECK(b.engine == RankEngine::Characters);
        }
    }
}

TEST_CASE("rank method switches engines at the matrix cap") {
    Limits tiny;
    tiny.max_matrix_entries = 10;
    const HilbertProfile big = regularity_rank(G("cycle(4)"), 5, tiny);
    CHECK(big.engine == RankEngine::Characters);
    const HilbertProfile small = regularity_rank(G("cycle(4)"), 5);
    CHECK(small.engine == RankEngine::Elimination);
    CHECK(big.values == small.values);
    CHECK(small.regularity == 3u);

    CHECK_THROWS_AS(hilbert_profile_characters(PointSet(3, 2, {0, 1}), 3), Error);
}
