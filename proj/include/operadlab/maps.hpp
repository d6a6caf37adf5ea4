#pragma once

#include <cstddef>
#include <vector>

#include "operadlab/encodings.hpp"
#include "operadlab/tree.hpp"
#include "operadlab/word.hpp"

namespace operadlab {

// The Loday-Ronco map psi: split at the maximal entry, recurse on the
// standardized halves, graft at a new root. psi(empty) is the leaf.
BinaryTree loday_ronco(const Permutation& pi);

// Corolla-insertion recursion: graft the 2-corolla at leaf pi_1 of the
// image of the standardized tail.
BinaryTree phihat(const Permutation& pi);

// Last-letter recursion: split around the value of the last entry and
// graft the two standardized images at a new root.
BinaryTree varphi(const Permutation& pi);

// The vertex restriction of Tonks' projection, computed as g = eval of
// the head-insertion encoding of the reversed permutation. phihat and
// varphi are independent implementations of the same map, kept separate
// as cross-checks.
BinaryTree tonks_map(const Permutation& pi);

// Whether the adjacent pair at positions (pos, pos+1) is Tonks
// independent: some later entry lies strictly between the two values.
// pos is 1-based; throws position_error unless 1 <= pos <= n-1.
bool tonks_independent(const Permutation& pi, int pos);

struct TonksClass {
  Permutation representative;  // lexicographically least member
  std::vector<Permutation> members;  // sorted
  BinaryTree tree;             // common image under the Tonks map
};

// The partition of S_n into connected components of the independent-swap
// graph, classes ordered by representative.
struct TonksClassPartition {
  std::size_t n = 0;
  std::vector<TonksClass> classes;

  // Index into classes; throws domain_error for a foreign permutation.
  std::size_t class_index(const Permutation& pi) const;
};

TonksClassPartition tonks_classes(std::size_t n, std::size_t max_n = 8);

}  // namespace operadlab
