#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "operadlab/errors.hpp"

namespace operadlab {

// A planar rooted full binary tree, an immutable value with structural
// equality. The element of Y_0 is the single leaf; a tree in Y_n has n
// internal nodes and n+1 leaves, numbered 1..n+1 left to right.
//
// Text form, bit-exact round trip:  tree := "*" | "(" tree "," tree ")".
class BinaryTree {
 public:
  BinaryTree() = default;  // the leaf
  static BinaryTree leaf() { return BinaryTree{}; }

  bool is_leaf() const { return node_ == nullptr; }
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  int internal_nodes() const;
  int leaves() const;

  std::string str() const;
  static BinaryTree parse(std::string_view text);

  bool operator==(const BinaryTree& other) const;
  bool operator!=(const BinaryTree& other) const { return !(*this == other); }
  // Total order: by size, then preorder with leaf < node. Deterministic,
  // good enough for std::set / sorted output.
  bool operator<(const BinaryTree& other) const;

  friend BinaryTree graft_root(const BinaryTree& t1, const BinaryTree& t2);

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  int size;  // internal node count of the subtree rooted here
};

// T1 v T2: new root with T1 and T2 as left and right subtrees.
BinaryTree graft_root(const BinaryTree& t1, const BinaryTree& t2);

// Replace the leaf_pos-th leaf (1-based, left to right) of t by s.
BinaryTree graft_at(const BinaryTree& t, int leaf_pos, const BinaryTree& s);

// The 2-corolla, the unique element of Y_1.
BinaryTree corolla();

// All trees one right rotation ((X,Y),Z) -> (X,(Y,Z)) above t, applied at
// any node whose left child is internal. Sorted and distinct.
std::vector<BinaryTree> rotations(const BinaryTree& t);

// lo <=_T hi in the Tamari order: hi reachable from lo by rotations.
// Memoized per size for small n, breadth-first search above.
bool tamari_leq(const BinaryTree& lo, const BinaryTree& hi);

// All of Y_n, in a fixed order: by left-subtree size, recursively.
std::vector<BinaryTree> enumerate_trees(int n, int max_n = 12);

BinaryTree left_comb(int n);
BinaryTree right_comb(int n);

// C_n = binom(2n, n) / (n + 1).
unsigned long long catalan(int n);

}  // namespace operadlab
