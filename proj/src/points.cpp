#include "toricreg/points.hpp"

#include "flat_row_set.hpp"
#include "toricreg/error.hpp"

#include <string>

namespace toricreg {

PointSet::PointSet(std::uint32_t q, std::size_t s, std::vector<std::uint32_t> flat)
    : q_(q), s_(s), flat_(std::move(flat)) {
    if (s_ == 0 || flat_.size() % s_ != 0) {
        throw Error(ErrorKind::LengthMismatch, "point buffer is not a multiple of s");
    }
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

namespace {

std::vector<std::uint32_t> collect_points(const Multigraph& g, std::uint32_t q,
                                                 const Limits& limits) {
    if (!is_prime_power(q)) {
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    const std::uint32_t m = q - 1;
    const std::size_t n = g.num_vertices();
    const std::size_t s = g.num_edges();
    const std::uint64_t total = checked_pow(m, n, limits.max_states);
    if (total > limits.max_states) {
        throw Error(ErrorKind::TooLarge, "(q-1)^n = " + std::to_string(m) + "^" + std::to_string(n) +
                                             " exceeds the state cap " +
                                             std::to_string(limits.max_states));
    }

    detail::FlatRowSet<std::uint32_t> seen(s);
    std::vector<std::uint32_t> assignment(n, 0);
    std::vector<std::uint32_t> image(s, 0);
    const auto& edges = g.edges();
    for (std::uint64_t iter = 0; iter < total; ++iter) {
        const std::uint32_t base = (assignment[edges[0].u] + assignment[edges[0].w]) % m;
        for (std::size_t i = 0; i < s; ++i) {
            image[i] = (assignment[edges[i].u] + assignment[edges[i].w] + m - base) % m;
        }
        seen.insert(image);
        for (std::size_t v = 0; v < n; ++v) {
            if (++assignment[v] < m) break;
            assignment[v] = 0;
        }
    }

    return seen.release();
}

}  // namespace

std::uint64_t count_points(const Multigraph& g, std::uint32_t q, const Limits& limits) {
    return collect_points(g, q, limits).size() / g.num_edges();
}

PointSet enumerate_points(const Multigraph& g, std::uint32_t q, const Limits& limits) {
    std::vector<std::uint32_t> flat = collect_points(g, q, limits);
    const std::uint64_t count = flat.size() / g.num_edges();
    const std::uint64_t expected = degree_formula(graph_stats(g), q);
    if (count != expected) {
        throw Error(ErrorKind::Internal, "enumerated |X| = " + std::to_string(count) +
                                             " but the degree formula gives " +
                                             std::to_string(expected));
    }
    return PointSet(q, g.num_edges(), std::move(flat));
}

std::uint64_t degree_formula(const GraphStats& stats, std::uint32_t q) {
    if (q < 2) throw Error(ErrorKind::InvalidSpec, "q must be >= 2");
    const std::uint64_t m = q - 1;
    const auto power = [&](std::int64_t e) {
        if (e < 0) throw Error(ErrorKind::Internal, "negative exponent in degree formula");
        return checked_pow(m, static_cast<std::uint64_t>(e), ~std::uint64_t{0} / 2);
    };
    const auto n = static_cast<std::int64_t>(stats.n);
    const auto comps = static_cast<std::int64_t>(stats.m);
    const auto gamma = static_cast<std::int64_t>(stats.gamma);
    if (gamma == 0) return power(n - comps - 1);
    const std::uint64_t value = power(n - comps + gamma - 1);
    if (q % 2 == 0) return value;
    const std::uint64_t divisor = std::uint64_t{1} << (gamma - 1);
    if (value % divisor != 0) throw Error(ErrorKind::Internal, "degree formula is not an integer");
    return value / divisor;
}

FieldElem evaluate_monomial(std::span<const std::uint32_t> point, const ExponentVec& a,
                            const Field& field) {
    if (point.size() != a.size()) {
        throw Error(ErrorKind::LengthMismatch, "point has " + std::to_string(point.size()) +
                                                   " coordinates, monomial has " +
                                                   std::to_string(a.size()));
    }
    const std::uint64_t m = field.order();
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e = (e + (a[i] % m) * point[i]) % m;
    return FieldElem::from_exponent(static_cast<std::uint32_t>(e));
}

}  // namespace toricreg
