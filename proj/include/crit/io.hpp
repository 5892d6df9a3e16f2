#pragma once

#include <string>

#include "crit/decomp.hpp"
#include "crit/gallery.hpp"
#include "crit/quotient.hpp"

namespace crit {

/// Thrown for malformed input documents; message carries position context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses `{"graph": {...}, "action": {...}}`; the action block is optional
/// (absent action leaves Instance::action with n == 0).  Permutations may be
/// cycle strings like "(z1 z4)(z2 z3)" or label-to-label objects; edge
/// permutations are derived for simple graphs or given as index arrays.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

Multigraph parse_graph_json(const std::string& json_text);

std::string graph_to_json(const Multigraph& g);
std::string instance_to_json(const Instance& inst);

/// Divisor document: `{"label": value, ...}`; missing vertices are zero.
Divisor parse_divisor(const std::string& json_text, const Multigraph& g);

std::string report_to_json(const VerificationReport& rep);
std::string morphism_to_json(const GraphMorphism& phi);

/// Cycle permutation parser, exposed for tests: "(a b)(c d)" over the
/// graph's labels, fixed points omitted.
Perm parse_cycles(const std::string& text, const Multigraph& g);

}  // namespace crit
