#pragma once

#include <cstdint>
#include <vector>

#include "crit/gallery.hpp"

namespace crit {

struct OrbitSpec {
  OrbitType type;
  int index = 1;  // k, must divide n; Type II additionally needs n/k even
};

/// Builds a connected harmonic D_n instance from formal orbits with the
/// canonical generator action, joined by randomly sampled free edge orbits
/// (pairs with trivial pointwise stabilizer; endpoint-swapping elements are
/// allowed and become edge involutions).  Deterministic per seed.
Instance random_harmonic(int n, const std::vector<OrbitSpec>& spec, int edge_orbit_count,
                         std::uint64_t seed);

}  // namespace crit
