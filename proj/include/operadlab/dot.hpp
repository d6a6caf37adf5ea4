#pragma once

#include <cstddef>
#include <string>

namespace operadlab {

enum class LatticeOrder { weak, tamari, quotient };

// Hasse diagram of the requested order as a DOT digraph, edges pointing
// from smaller to larger. With color_fibers, weak-order nodes in the same
// Tonks class share a fill color and collapsed edges are drawn dashed in
// red; quotient nodes are labelled by their trees. Output is byte-stable
// for fixed inputs.
std::string lattice_dot(std::size_t n, LatticeOrder order, bool color_fibers,
                        std::size_t max_n = 9);

}  // namespace operadlab
