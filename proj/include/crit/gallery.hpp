#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crit/action.hpp"
#include "crit/graph.hpp"

namespace crit {

struct Instance {
  Multigraph graph;
  DihedralAction action;
};

/// Built-in instances: k44, fig1-d3, fig1-d4, octahedron, wheel (param n,
/// builds W_2n), squareweb (param n rings), k23-d3.  The returned action is
/// validated and harmonic.
Instance gallery(const std::string& name, int param = 0);

std::vector<std::string> gallery_names();

}  // namespace crit
