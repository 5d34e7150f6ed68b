#include "toricreg/cli.hpp"
#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/ideal.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace toricreg;

namespace {

Multigraph G(const char* spec) { return parse_graph_spec(spec).graph; }

ResidueVec R(std::vector<std::uint32_t> v, std::uint32_t m) { return ResidueVec(std::move(v), m); }

/// Reach(d) by listing every degree-d monomial.
std::set<std::vector<std::uint32_t>> brute_reach(const Multigraph& g, std::uint32_t q, unsigned d) {
    std::set<std::vector<std::uint32_t>> out;
    for (const ExponentVec& a : monomials_of_degree(g.num_edges(), d)) out.insert(residue_of(g, q, a).values());
    return out;
}

/// Whether t^a - t^b vanishes on every point of X.
bool vanishes_on_points(const PointSet& ps, const Field& F, const ExponentVec& a, const ExponentVec& b) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (evaluate_monomial(ps.point(i), a, F) != evaluate_monomial(ps.point(i), b, F)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("residues") {
    const Multigraph p2 = G("path(2)");
    CHECK(residue_of(p2, 3, ExponentVec{1, 0}) == R({1, 1, 0}, 2));
    CHECK(residue_of(p2, 3, ExponentVec{1, 1}) == R({1, 0, 1}, 2));
    CHECK(residue_of(p2, 3, ExponentVec{0, 0}) == R({0, 0, 0}, 2));
    CHECK(residue_of(G("cycle(5)"), 7, ExponentVec{0, 0, 0, 0, 0}).values() ==
          std::vector<std::uint32_t>(5, 0));
}

TEST_CASE("binomial membership") {
    const Multigraph p2 = G("path(2)");
    CHECK(binomial_in_ideal(p2, 3, ExponentVec{1, 1}, ExponentVec{1, 1}));
    CHECK_FALSE(binomial_in_ideal(p2, 3, ExponentVec{1, 0}, ExponentVec{0, 1}));
    const Multigraph c5 = G("cycle(5)");
    for (std::uint32_t q : {3u, 4u, 5u}) {
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) {
                ExponentVec a(5), b(5);
                a[i] = q - 1;
                b[j] = q - 1;
                CHECK(binomial_in_ideal(c5, q, a, b));
            }
        }
    }
    try {
        (void)binomial_in_ideal(p2, 3, ExponentVec{1, 0}, ExponentVec{1, 1});
        FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHomogeneous);
    }
}

TEST_CASE("congruence criterion agrees with evaluation on small graphs") {
    std::mt19937 rng(99);
    for (const char* spec : {"cycle(3)", "cycle(4)", "parallel(1,2,2)", "edges(0-1,0-1,1-2)", "edges(0-1,2-3)"}) {
        const Multigraph g = G(spec);
        for (std::uint32_t q : {3u, 4u, 5u}) {
            const Field F(q);
            const PointSet ps = enumerate_points(g, q);
            for (unsigned d = 1; d <= 3; ++d) {
                const auto monos = monomials_of_degree(g.num_edges(), d);
                for (int t = 0; t < 60; ++t) {
                    const ExponentVec& a = monos[rng() % monos.size()];
                    const ExponentVec& b = monos[rng() % monos.size()];
                    CHECK(binomial_in_ideal(g, q, a, b) == vanishes_on_points(ps, F, a, b));
                }
            }
        }
    }
}

TEST_CASE("reachable residues") {
    const Multigraph p2 = G("path(2)");
    const ReachTable t = reachable_residues(p2, 3, 2);
    CHECK(t.max_degree() == 2);
    CHECK(t.residues(0) == std::vector<ResidueVec>{R({0, 0, 0}, 2)});
    const auto r1 = t.residues(1);
    CHECK(std::set<std::vector<std::uint32_t>>{r1[0].values(), r1[1].values()} ==
          std::set<std::vector<std::uint32_t>>{{1, 1, 0}, {0, 1, 1}});
    CHECK(t.size(1) == 2);
    CHECK(t.size(2) == 2);
    CHECK(t.contains(2, R({0, 0, 0}, 2)));
    CHECK(t.contains(2, R({1, 0, 1}, 2)));
    CHECK_FALSE(t.contains(2, R({1, 1, 0}, 2)));

    const ReachTable c3 = reachable_residues(G("cycle(3)"), 3, 2);
    CHECK(c3.size(2) == 4);
    for (const ResidueVec& r : c3.residues(2)) CHECK((r[0] + r[1] + r[2]) % 2 == 0);
}

TEST_CASE("reach table matches brute force") {
    for (const char* spec : {"path(3)", "cycle(4)", "cycle(5)", "parallel(1,2,2)", "edges(0-1,0-1,1-2)",
                             "star(4)", "edges(0-1,2-3)"}) {
        const Multigraph g = G(spec);
        for (std::uint32_t q : {3u, 4u, 5u}) {
            CAPTURE(spec);
            CAPTURE(q);
            const ReachTable t = reachable_residues(g, q, 4);
            for (unsigned d = 0; d <= 4; ++d) {
                std::set<std::vector<std::uint32_t>> got;
                for (const ResidueVec& r : t.residues(d)) got.insert(r.values());
                CHECK(got == brute_reach(g, q, d));
            }
            for (std::uint64_t code = 0; code < t.num_states(); ++code) {
                CHECK(t.encode(t.decode(code)) == code);
                for (EdgeIndex j = 0; j < g.num_edges(); ++j) CHECK(t.sub_edge(t.add_edge(code, j), j) == code);
            }
        }
    }
}

TEST_CASE("membership in (I(X), t_j)") {
    const Multigraph p2 = G("path(2)");
    const ReachTable t = reachable_residues(p2, 3, 2);
    CHECK(monomial_in_ideal_plus_edge(p2, 3, ExponentVec{1, 0}, 0, t));
    CHECK(monomial_in_ideal_plus_edge(p2, 3, ExponentVec{1, 1}, 0, t));
    CHECK_FALSE(monomial_in_ideal_plus_edge(p2, 3, ExponentVec{0, 1}, 0, t));
    CHECK_FALSE(monomial_in_ideal_plus_edge(p2, 3, ExponentVec{0, 0}, 0, t));
}

TEST_CASE("regularity by the sieve") {
    CHECK(regularity_sieve(G("path(2)"), 3, 0) == 1);
    for (EdgeIndex j = 0; j < 4; ++j) CHECK(regularity_sieve(G("cycle(4)"), 3, j) == 1);
    for (EdgeIndex j = 0; j < 3; ++j) CHECK(regularity_sieve(G("cycle(3)"), 3, j) == 2);
    CHECK(regularity_sieve(G("parallel(3,5,2)"), 3, 0) == 5);
    CHECK(regularity_sieve(G("parallel(3,3,5)"), 5, 4) == 12);
    for (const char* spec : {"path(4)", "cycle(5)", "complete(4)"}) CHECK(regularity_sieve(G(spec), 2, 0) == 0);
    CHECK_THROWS_AS(regularity_sieve(G("cycle(4)"), 3, 4), Error);
}

TEST_CASE("sieve and rank agree on small graphs, for every j") {
    for (const char* spec : {"path(3)", "cycle(5)", "parallel(1,2,2)", "biclique(2,2)", "star(3)",
                             "edges(0-1,0-1,1-2)", "edges(0-1,2-3)"}) {
        const Multigraph g = G(spec);
        for (std::uint32_t q : {3u, 4u}) {
            CAPTURE(spec);
            CAPTURE(q);
            const unsigned rank = *regularity_rank(g, q).regularity;
            for (EdgeIndex j = 0; j < g.num_edges(); ++j) CHECK(regularity_sieve(g, q, j) == rank);
        }
    }
}

TEST_CASE("state cap") {
    Limits tiny;
    tiny.max_states = 50;
    try {
        ReachTable t(G("cycle(6)"), 3, tiny);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("ears") {
    const Multigraph p51 = G("parallel(5,1)");
    const auto es = ears(p51);
    REQUIRE(es.size() == 1);
    CHECK(es[0].cyclic);
    CHECK(es[0].edges.size() == 6);

    const Multigraph p222 = G("parallel(2,2,2)");
    const auto e3 = ears(p222);
    CHECK(e3.size() == 3);
    for (const Ear& e : e3) {
        CHECK_FALSE(e.cyclic);
        CHECK(e.edges.size() == 2);
    }
    CHECK(same_parity_on_ear(p222, 0, 0));
    CHECK_FALSE(same_parity_on_ear(p222, 0, 1));
    CHECK_FALSE(same_parity_on_ear(p222, 0, 2));

    const Multigraph p3 = G("path(3)");
    CHECK(same_parity_on_ear(p3, 0, 2));
    CHECK_FALSE(same_parity_on_ear(p3, 0, 1));

    const Multigraph c5 = G("cycle(5)");
    for (EdgeIndex i = 0; i < 5; ++i) {
        for (EdgeIndex j = 0; j < 5; ++j) CHECK(same_parity_on_ear(c5, i, j));
    }
}

TEST_CASE("ear swap") {
    const Multigraph p51 = G("parallel(5,1)");
    CHECK(ear_swap(p51, ExponentVec{2, 0, 1, 0, 0, 0}, 0, 2) == ExponentVec{1, 0, 2, 0, 0, 0});
    try {
        (void)ear_swap(G("parallel(2,2,2)"), ExponentVec{1, 0, 0, 0, 0, 0}, 0, 1);
        FAIL("expected NotSameParityEar");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSameParityEar);
    }

    std::mt19937 rng(2024);
    const Multigraph p53 = G("parallel(5,3)");
    const auto monos = monomials_of_degree(8, 3);
    int checked = 0;
    for (int t = 0; t < 2000; ++t) {
        const ExponentVec& a = monos[rng() % monos.size()];
        const ExponentVec& b = monos[rng() % monos.size()];
        const EdgeIndex i = rng() % 8;
        const EdgeIndex j = rng() % 8;
        if (!same_parity_on_ear(p53, i, j)) continue;
        ++checked;
        CHECK(binomial_in_ideal(p53, 3, a, b) ==
              binomial_in_ideal(p53, 3, ear_swap(p53, a, i, j), ear_swap(p53, b, i, j)));
    }
    CHECK(checked > 100);
}

TEST_CASE("f_i g_j - f_j g_i") {
    const auto [a, b] = parallel_fg_binomial(ParallelSpec{{3, 3}}, 0, 1);
    CHECK(a == ExponentVec{1, 0, 1, 0, 1, 0});
    CHECK(b == ExponentVec{0, 1, 0, 1, 0, 1});
    CHECK(binomial_in_ideal(G("parallel(3,3)"), 3, a, b));

    const auto [c, d] = parallel_fg_binomial(ParallelSpec{{1, 1}}, 0, 1);
    CHECK(c == ExponentVec{1, 0});
    CHECK(d == ExponentVec{0, 1});

    CHECK_THROWS_AS(parallel_fg_binomial(ParallelSpec{{3, 3}}, 0, 0), Error);
    CHECK_THROWS_AS(parallel_fg_binomial(ParallelSpec{{3, 3}}, 0, 2), Error);
}
