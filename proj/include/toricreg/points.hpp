#pragma once

#include "toricreg/field.hpp"
#include "toricreg/graph.hpp"
#include "toricreg/limits.hpp"
#include "toricreg/monomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace toricreg {

/// The projective toric subset X parameterized by a graph, as exponent vectors in
/// (Z_{q-1})^s. Point (E_1, ..., E_s) stands for (g^{E_1} : ... : g^{E_s}); every stored
/// vector has E_1 = 0 and no two are equal.
class PointSet {
public:
    PointSet(std::uint32_t q, std::size_t s, std::vector<std::uint32_t> flat);

    std::uint32_t q() const { return q_; }
    std::size_t num_coordinates() const { return s_; }
    std::size_t size() const { return s_ == 0 ? 0 : flat_.size() / s_; }
    std::span<const std::uint32_t> point(std::size_t i) const {
        return {flat_.data() + i * s_, s_};
    }
    const std::vector<std::uint32_t>& flat() const { return flat_; }

private:
    std::uint32_t q_;
    std::size_t s_;
    std::vector<std::uint32_t> flat_;
};

/// Enumerates all (q-1)^n vertex assignments and collects their canonical edge images.
/// Throws TooLarge beyond limits.max_states; throws Internal if |X| disagrees with
/// degree_formula.
PointSet enumerate_points(const Multigraph& g, std::uint32_t q,
                          const Limits& limits = default_limits());

/// |X| by enumeration, without comparing against degree_formula.
std::uint64_t count_points(const Multigraph& g, std::uint32_t q,
                           const Limits& limits = default_limits());

/// |X| from the component data: (1/2)^{gamma-1}(q-1)^{n-m+gamma-1} (gamma >= 1, q odd),
/// (q-1)^{n-m+gamma-1} (gamma >= 1, q even), (q-1)^{n-m-1} (gamma = 0).
std::uint64_t degree_formula(const GraphStats& stats, std::uint32_t q);

/// Value of t^a at the point: g^{sum a_i E_i}.
FieldElem evaluate_monomial(std::span<const std::uint32_t> point, const ExponentVec& a,
                            const Field& field);

}  // namespace toricreg
