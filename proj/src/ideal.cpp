#include "toricreg/ideal.hpp"

#include "toricreg/error.hpp"
#include "toricreg/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <bit>
#include <set>
#include <string>

namespace toricreg {

namespace {

void require_length(const Multigraph& g, const ExponentVec& a) {
    if (a.size() != g.num_edges()) {
        throw Error(ErrorKind::LengthMismatch, "exponent vector has length " +
                                                   std::to_string(a.size()) + ", graph has " +
                                                   std::to_string(g.num_edges()) + " edges");
    }
}

void require_q(std::uint32_t q) {
    if (!is_prime_power(q)) {
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
}

}  // namespace

ResidueVec residue_of(const Multigraph& g, std::uint32_t q, const ExponentVec& a) {
    require_q(q);
    require_length(g, a);
    const std::uint64_t m = q - 1;
    std::vector<std::uint64_t> sums(g.num_vertices(), 0);
    for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
        sums[g.edge(i).u] += a[i];
        sums[g.edge(i).w] += a[i];
    }
    std::vector<std::uint32_t> r(sums.size());
    for (std::size_t v = 0; v < sums.size(); ++v) r[v] = static_cast<std::uint32_t>(sums[v] % m);
    return ResidueVec(std::move(r), q - 1);
}

bool binomial_in_ideal(const Multigraph& g, std::uint32_t q, const ExponentVec& a,
                       const ExponentVec& b) {
    require_length(g, a);
    require_length(g, b);
    if (a.degree() != b.degree()) {
        throw Error(ErrorKind::NotHomogeneous, "degrees " + std::to_string(a.degree()) + " and " +
                                                   std::to_string(b.degree()) + " differ");
    }
    return residue_of(g, q, a) == residue_of(g, q, b);
}

ReachTable::ReachTable(const Multigraph& g, std::uint32_t q, const Limits& limits)
    : edges_(g.edges()), n_(g.num_vertices()), modulus_(q - 1) {
    require_q(q);
    states_ = 1;
    weight_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        weight_[v] = states_;
        if (modulus_ > 1 && states_ > limits.max_states / modulus_) {
            throw Error(ErrorKind::TooLarge, "(q-1)^n residue states exceed the state cap " +
                                                 std::to_string(limits.max_states));
        }
        states_ *= modulus_;
    }
    if (states_ > limits.max_states) {
        throw Error(ErrorKind::TooLarge, "(q-1)^n residue states exceed the state cap");
    }
    // Parallel edges act identically on residues.
    std::set<Edge> distinct(edges_.begin(), edges_.end());
    distinct_.assign(distinct.begin(), distinct.end());
    Bitset zero((states_ + 63) / 64, 0);
    zero[0] = 1;
    levels_.push_back(std::move(zero));
}

std::uint64_t ReachTable::shift_vertex(std::uint64_t code, Vertex v, bool up) const {
    const std::uint64_t w = weight_[v];
    const std::uint64_t digit = (code / w) % modulus_;
    if (up) return digit + 1 == modulus_ ? code - digit * w : code + w;
    return digit == 0 ? code + (modulus_ - 1) * w : code - w;
}

std::uint64_t ReachTable::add_edge(std::uint64_t code, EdgeIndex j) const {
    if (j >= edges_.size()) throw Error(ErrorKind::IndexOutOfRange, "edge index");
    return shift_vertex(shift_vertex(code, edges_[j].u, true), edges_[j].w, true);
}

std::uint64_t ReachTable::sub_edge(std::uint64_t code, EdgeIndex j) const {
    if (j >= edges_.size()) throw Error(ErrorKind::IndexOutOfRange, "edge index");
    return shift_vertex(shift_vertex(code, edges_[j].u, false), edges_[j].w, false);
}

void ReachTable::extend_to(unsigned d) {
    while (levels_.size() <= d) {
        const Bitset& prev = levels_.back();
        Bitset next(prev.size(), 0);
        for (std::size_t word = 0; word < prev.size(); ++word) {
            std::uint64_t bits = prev[word];
            while (bits != 0) {
                const std::uint64_t code = word * 64 + static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                for (const Edge& e : distinct_) {
                    const std::uint64_t t = shift_vertex(shift_vertex(code, e.u, true), e.w, true);
                    next[t / 64] |= std::uint64_t{1} << (t % 64);
                }
            }
        }
        levels_.push_back(std::move(next));
    }
}

bool ReachTable::contains_code(unsigned d, std::uint64_t code) const {
    if (d >= levels_.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "reach table not computed to degree " +
                                                    std::to_string(d));
    }
    return (levels_[d][code / 64] >> (code % 64)) & 1u;
}

bool ReachTable::contains(unsigned d, const ResidueVec& r) const {
    return contains_code(d, encode(r));
}

std::uint64_t ReachTable::size(unsigned d) const {
    if (d >= levels_.size()) throw Error(ErrorKind::IndexOutOfRange, "reach degree");
    std::uint64_t count = 0;
    for (std::uint64_t word : levels_[d]) count += static_cast<std::uint64_t>(std::popcount(word));
    return count;
}

std::vector<ResidueVec> ReachTable::residues(unsigned d) const {
    if (d >= levels_.size()) throw Error(ErrorKind::IndexOutOfRange, "reach degree");
    std::vector<ResidueVec> out;
    for (std::uint64_t code = 0; code < states_; ++code) {
        if (contains_code(d, code)) out.push_back(decode(code));
    }
    return out;
}

std::uint64_t ReachTable::encode(const ResidueVec& r) const {
    if (r.size() != n_) throw Error(ErrorKind::LengthMismatch, "residue vector length");
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < n_; ++v) code += (r[v] % modulus_) * weight_[v];
    return code;
}

ResidueVec ReachTable::decode(std::uint64_t code) const {
    std::vector<std::uint32_t> r(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        r[v] = static_cast<std::uint32_t>((code / weight_[v]) % modulus_);
    }
    return ResidueVec(std::move(r), modulus_);
}

ReachTable reachable_residues(const Multigraph& g, std::uint32_t q, unsigned d_max,
                              const Limits& limits) {
    ReachTable table(g, q, limits);
    table.extend_to(d_max);
    return table;
}

bool monomial_in_ideal_plus_edge(const Multigraph& g, std::uint32_t q, const ExponentVec& a,
                                 EdgeIndex j, const ReachTable& reach) {
    require_length(g, a);
    if (j >= g.num_edges()) throw Error(ErrorKind::IndexOutOfRange, "edge index");
    const std::uint64_t deg = a.degree();
    if (deg == 0) return false;
    const std::uint64_t code = reach.encode(residue_of(g, q, a));
    return reach.contains_code(static_cast<unsigned>(deg - 1), reach.sub_edge(code, j));
}

unsigned regularity_sieve(const Multigraph& g, std::uint32_t q, EdgeIndex j, const Limits& limits) {
    if (j >= g.num_edges()) throw Error(ErrorKind::IndexOutOfRange, "edge index");
    ReachTable reach(g, q, limits);
    const auto bound =
        static_cast<unsigned>((g.num_edges() - 1) * (q - 2) + 2);
    for (unsigned d = 1; d <= bound; ++d) {
        reach.extend_to(d);
        bool all_members = true;
        for (std::uint64_t code = 0; code < reach.num_states() && all_members; ++code) {
            if (reach.contains_code(d, code) && !reach.contains_code(d - 1, reach.sub_edge(code, j))) {
                all_members = false;
            }
        }
        if (all_members) return d - 1;
    }
    throw Error(ErrorKind::CeilingExceeded, "(I(X), t_j) not saturated by degree " +
                                                std::to_string(bound));
}

std::vector<Ear> ears(const Multigraph& g) {
    std::vector<bool> used(g.num_edges(), false);
    std::vector<Ear> out;
    auto next_edge = [&](Vertex y, EdgeIndex via) {
        const auto inc = g.incident(y);
        return inc[0] == via ? inc[1] : inc[0];
    };
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (g.degree(x) == 2) continue;
        for (EdgeIndex start : g.incident(x)) {
            if (used[start]) continue;
            Ear ear;
            Vertex cur = x;
            EdgeIndex e = start;
            while (true) {
                used[e] = true;
                ear.edges.push_back(e);
                const Vertex y = g.edge(e).other(cur);
                if (g.degree(y) != 2) break;
                cur = y;
                e = next_edge(y, e);
            }
            out.push_back(std::move(ear));
        }
    }
    for (EdgeIndex start = 0; start < g.num_edges(); ++start) {
        if (used[start]) continue;
        Ear ear;
        ear.cyclic = true;
        Vertex cur = g.edge(start).u;
        EdgeIndex e = start;
        do {
            used[e] = true;
            ear.edges.push_back(e);
            cur = g.edge(e).other(cur);
            e = next_edge(cur, e);
        } while (e != start);
        out.push_back(std::move(ear));
    }
    return out;
}

bool same_parity_on_ear(const Multigraph& g, EdgeIndex i, EdgeIndex j) {
    if (i >= g.num_edges() || j >= g.num_edges()) {
        throw Error(ErrorKind::IndexOutOfRange, "edge index");
    }
    for (const Ear& ear : ears(g)) {
        const auto pi = std::find(ear.edges.begin(), ear.edges.end(), i);
        const auto pj = std::find(ear.edges.begin(), ear.edges.end(), j);
        if (pi == ear.edges.end() || pj == ear.edges.end()) continue;
        const auto dist = static_cast<std::size_t>(std::abs(pi - pj));
        if (dist % 2 == 0) return true;
        return ear.cyclic && (ear.edges.size() - dist) % 2 == 0;
    }
    return false;
}

ExponentVec ear_swap(const Multigraph& g, const ExponentVec& a, EdgeIndex i, EdgeIndex j) {
    require_length(g, a);
    if (!same_parity_on_ear(g, i, j)) {
        throw Error(ErrorKind::NotSameParityEar, "t" + std::to_string(i + 1) + " and t" +
                                                     std::to_string(j + 1) +
                                                     " are not on a common ear in same-parity positions");
    }
    ExponentVec out = a;
    std::swap(out[i], out[j]);
    return out;
}

std::pair<ExponentVec, ExponentVec> parallel_fg_binomial(const ParallelSpec& spec, std::size_t i,
                                                         std::size_t j) {
    spec.validate();
    if (i >= spec.num_paths() || j >= spec.num_paths() || i == j) {
        throw Error(ErrorKind::IndexOutOfRange, "path indices must be distinct and < r");
    }
    const std::size_t s = spec.total_length();
    // odd[p] adds the odd-position edges of path p (f_p), even[p] the even-position ones (g_p).
    auto add_path = [&](ExponentVec& v, std::size_t path, unsigned parity) {
        const std::size_t base = spec.sigma(path);
        for (unsigned pos = 1; pos <= spec.lengths[path]; ++pos) {
            if (pos % 2 == parity) ++v[base + pos - 1];
        }
    };
    ExponentVec fi_gj(s), fj_gi(s);
    add_path(fi_gj, i, 1);
    add_path(fi_gj, j, 0);
    add_path(fj_gi, j, 1);
    add_path(fj_gi, i, 0);
    return {std::move(fi_gj), std::move(fj_gi)};
}

}  // namespace toricreg
