#pragma once

#include <string>

#include "mwi/index.hpp"

namespace mwi {

// Graphviz rendering of the automaton: solid transitions (first symbol plus
// label length, full label when the build text is retained), dashed suffix
// links, doubled circles on final nodes.
std::string cdawg_dot(const Index& ix);

// Graphviz rendering of the tree: gray leaves filled, dashed suffix links,
// dotted bold arrows to each parent-edge's `top` node.
std::string lpt_dot(const Index& ix);

}  // namespace mwi
