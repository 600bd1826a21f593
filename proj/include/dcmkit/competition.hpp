#ifndef DCMKIT_COMPETITION_HPP
#define DCMKIT_COMPETITION_HPP

#include "dcmkit/core.hpp"

namespace dcmkit {

/// Multiplicity of {x,y} is |N+(x) ∩ N+(y)| * |N-(x) ∩ N-(y)|.
/// Loops count like any other arc, so a looped vertex is its own
/// in- and out-neighbour.
Multigraph double_competition_multigraph(const Digraph& d);

/// Multiplicity of {x,y} is the number of common out-neighbours.
Multigraph competition_multigraph(const Digraph& d);

/// Edge {x,y} iff x and y share an out-neighbour.
SimpleGraph competition_graph(const Digraph& d);

/// Edge {x,y} iff x and y share an out-neighbour and an in-neighbour
/// (the competition-common enemy graph).
SimpleGraph double_competition_graph(const Digraph& d);

} // namespace dcmkit

#endif // DCMKIT_COMPETITION_HPP
