#include "operadlab/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace operadlab {

const BinaryTree& BinaryTree::left() const {
  if (!node_) throw std::logic_error("leaf has no left subtree");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (!node_) throw std::logic_error("leaf has no right subtree");
  return node_->right;
}

int BinaryTree::internal_nodes() const { return node_ ? node_->size : 0; }

int BinaryTree::leaves() const { return internal_nodes() + 1; }

std::string BinaryTree::str() const {
  if (is_leaf()) return "*";
  return "(" + left().str() + "," + right().str() + ")";
}

namespace {

BinaryTree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw parse_error("unexpected end of tree text");
  if (text[pos] == '*') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (text[pos] != '(') {
    throw parse_error("expected '*' or '(' at position " + std::to_string(pos));
  }
  ++pos;
  BinaryTree l = parse_tree(text, pos);
  if (pos >= text.size() || text[pos] != ',') {
    throw parse_error("expected ',' at position " + std::to_string(pos));
  }
  ++pos;
  BinaryTree r = parse_tree(text, pos);
  if (pos >= text.size() || text[pos] != ')') {
    throw parse_error("expected ')' at position " + std::to_string(pos));
  }
  ++pos;
  return graft_root(l, r);
}

}  // namespace

BinaryTree BinaryTree::parse(std::string_view text) {
  std::size_t pos = 0;
  BinaryTree t = parse_tree(text, pos);
  if (pos != text.size()) {
    throw parse_error("trailing characters after tree at position " +
                      std::to_string(pos));
  }
  return t;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
  if (node_ == other.node_) return true;
  if (is_leaf() || other.is_leaf()) return false;
  if (node_->size != other.node_->size) return false;
  return left() == other.left() && right() == other.right();
}

bool BinaryTree::operator<(const BinaryTree& other) const {
  if (internal_nodes() != other.internal_nodes()) {
    return internal_nodes() < other.internal_nodes();
  }
  if (is_leaf()) return false;  // equal sizes, both leaves -> equal
  if (left() != other.left()) return left() < other.left();
  return right() < other.right();
}

BinaryTree graft_root(const BinaryTree& t1, const BinaryTree& t2) {
  auto node = std::make_shared<const BinaryTree::Node>(BinaryTree::Node{
      t1, t2, t1.internal_nodes() + t2.internal_nodes() + 1});
  return BinaryTree{std::move(node)};
}

BinaryTree graft_at(const BinaryTree& t, int leaf_pos, const BinaryTree& s) {
  if (leaf_pos < 1 || leaf_pos > t.leaves()) {
    throw position_error("leaf index " + std::to_string(leaf_pos) +
                         " out of range 1.." + std::to_string(t.leaves()));
  }
  if (t.is_leaf()) return s;
  const int left_leaves = t.left().leaves();
  if (leaf_pos <= left_leaves) {
    return graft_root(graft_at(t.left(), leaf_pos, s), t.right());
  }
  return graft_root(t.left(), graft_at(t.right(), leaf_pos - left_leaves, s));
}

BinaryTree corolla() { return graft_root(BinaryTree::leaf(), BinaryTree::leaf()); }

namespace {

void collect_rotations(const BinaryTree& t, std::vector<BinaryTree>& out) {
  if (t.is_leaf()) return;
  const BinaryTree& l = t.left();
  const BinaryTree& r = t.right();
  if (!l.is_leaf()) {
    // ((X,Y),Z) -> (X,(Y,Z)) at the root of this subtree.
    out.push_back(graft_root(l.left(), graft_root(l.right(), r)));
  }
  std::vector<BinaryTree> inner;
  collect_rotations(l, inner);
  for (const BinaryTree& u : inner) out.push_back(graft_root(u, r));
  inner.clear();
  collect_rotations(r, inner);
  for (const BinaryTree& u : inner) out.push_back(graft_root(l, u));
}

}  // namespace

std::vector<BinaryTree> rotations(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  collect_rotations(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

constexpr int kTamariClosureCacheMax = 9;

using Bitset = std::vector<std::uint64_t>;

void set_bit(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool test_bit(const Bitset& b, std::size_t i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}

struct TamariClosure {
  std::map<std::string, std::size_t> index;
  std::vector<Bitset> upset;
};

// Up-sets over Y_n under rotation reachability. The rotation graph is
// acyclic, so a memoized post-order fill terminates.
const TamariClosure& tamari_closure_table(int n) {
  static std::mutex mutex;
  static std::map<int, TamariClosure> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  TamariClosure closure;
  std::vector<BinaryTree> trees = enumerate_trees(n);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    closure.index.emplace(trees[i].str(), i);
  }
  const std::size_t words = (trees.size() + 63) / 64;
  closure.upset.assign(trees.size(), Bitset{});

  // Process in decreasing rotation distance from the right comb by simple
  // recursion with an explicit done marker (empty bitset = not computed).
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (!closure.upset[i].empty()) return;
    Bitset bits(words, 0);
    set_bit(bits, i);
    for (const BinaryTree& next : rotations(trees[i])) {
      const std::size_t j = closure.index.at(next.str());
      self(self, j);
      for (std::size_t w = 0; w < words; ++w) bits[w] |= closure.upset[j][w];
    }
    closure.upset[i] = std::move(bits);
  };
  for (std::size_t i = 0; i < trees.size(); ++i) fill(fill, i);
  return cache.emplace(n, std::move(closure)).first->second;
}

bool tamari_leq_bfs(const BinaryTree& lo, const BinaryTree& hi) {
  std::set<BinaryTree> visited{lo};
  std::vector<BinaryTree> frontier{lo};
  while (!frontier.empty()) {
    std::vector<BinaryTree> next;
    for (const BinaryTree& t : frontier) {
      if (t == hi) return true;
      for (BinaryTree& u : rotations(t)) {
        if (visited.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

bool tamari_leq(const BinaryTree& lo, const BinaryTree& hi) {
  if (lo.internal_nodes() != hi.internal_nodes()) {
    throw size_mismatch_error("tamari_leq needs equal node counts, got " +
                              std::to_string(lo.internal_nodes()) + " and " +
                              std::to_string(hi.internal_nodes()));
  }
  if (lo == hi) return true;
  const int n = lo.internal_nodes();
  if (n <= kTamariClosureCacheMax) {
    const TamariClosure& closure = tamari_closure_table(n);
    return test_bit(closure.upset[closure.index.at(lo.str())],
                    closure.index.at(hi.str()));
  }
  return tamari_leq_bfs(lo, hi);
}

namespace {

std::vector<BinaryTree> enumerate_trees_uncached(int n) {
  if (n == 0) return {BinaryTree::leaf()};
  std::vector<BinaryTree> out;
  out.reserve(static_cast<std::size_t>(catalan(n)));
  for (int k = 0; k < n; ++k) {
    for (const BinaryTree& l : enumerate_trees(k, n)) {
      for (const BinaryTree& r : enumerate_trees(n - 1 - k, n)) {
        out.push_back(graft_root(l, r));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BinaryTree> enumerate_trees(int n, int max_n) {
  if (n < 0) throw domain_error("negative tree size");
  if (n > max_n) {
    throw resource_limit_error("enumerate_trees(" + std::to_string(n) +
                               ") exceeds maximum " + std::to_string(max_n));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<BinaryTree>> cache;
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<BinaryTree> trees = enumerate_trees_uncached(n);
  std::scoped_lock lock(mutex);
  return cache.emplace(n, std::move(trees)).first->second;
}

BinaryTree left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = graft_root(t, BinaryTree::leaf());
  return t;
}

BinaryTree right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = graft_root(BinaryTree::leaf(), t);
  return t;
}

unsigned long long catalan(int n) {
  if (n < 0) throw domain_error("negative Catalan index");
  if (n > 30) throw resource_limit_error("Catalan index too large");
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * 2 * (2 * static_cast<unsigned long long>(k) + 1) / (k + 2);
  }
  return c;
}

}  // namespace operadlab
