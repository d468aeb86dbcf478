#pragma once

#include <optional>
#include <string>

#include "gapbrack/periodic.hpp"
#include "gapbrack/potential.hpp"
#include "gapbrack/weights.hpp"

namespace gapbrack {

/// Everything a graph description file defines. `quotient` is present iff the
/// file declares a rank.
struct GraphDescription {
    WeightedGraph weighted;
    VectorPotential alpha;
    std::optional<PeriodicQuotient> quotient;
};

/// Line-oriented text format with [meta] / [vertices] / [edges] sections.
/// Unknown sections, keys or edge fields are rejected; ids are range-checked.
/// Defaults: standard weights, zero potential, zero indices.
///
///   # comment
///   [meta]
///   scheme standard            # standard|combinatorial|normalised|electric|explicit
///   rank 1                     # optional; declares a Z^rank quotient
///   [vertices]
///   count 4
///   weight 0 2.5               # explicit scheme only
///   [edges]
///   edge 1 0 index 1           # tail head, then optional fields
///   edge 0 1 weight 2 alpha 1.5707963267949
GraphDescription parse_graph_file(const std::string& text);

GraphDescription load_graph_file(const std::string& path);

/// Canonical text for the description; parse(print(parse(text))) is the
/// identity on the object level.
std::string print_graph_file(const GraphDescription& d);

} // namespace gapbrack
