#pragma once

#include <cstdint>

namespace toricreg {

/// Work caps shared by the enumeration, reachability and rank routines.
struct Limits {
    /// Upper bound on (q-1)^n, the size of the vertex-assignment torus and of the residue space.
    std::uint64_t max_states = 10'000'000;
    /// Upper bound on stored matrix entries (points x retained columns).
    std::uint64_t max_matrix_entries = std::uint64_t{1} << 25;
};

/// Defaults, with TORICREG_MAX_STATES (when set to a positive integer) overriding both caps.
const Limits& default_limits();

}  // namespace toricreg
