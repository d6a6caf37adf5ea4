#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operadlab/errors.hpp"
#include "operadlab/tree.hpp"

namespace operadlab {

// An indexed operadic term: a generator 2^k of arity 2, or a partial
// composition A o_n B of arity |A|+|B|-1 with 1 <= n <= |A|. Generator
// indices are positive and pairwise distinct within a term. Immutable
// value with structural equality.
//
// Text form, bit-exact round trip:
//   term := "2^" int | "(" term " o_" int " " term ")"
// e.g. "((2^3 o_1 2^1) o_2 2^2)".
class Term {
 public:
  static Term gen(int index);

  bool is_gen() const;
  int gen_index() const;
  const Term& head() const;
  int position() const;
  const Term& arg() const;

  int arity() const;
  int generator_count() const { return arity() - 1; }
  // Sorted set of generator indices.
  const std::vector<int>& indices() const;
  bool has_index(int k) const;

  std::string str() const;
  static Term parse(std::string_view text);

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;

  friend Term compose(const Term& a, int n, const Term& b);

 private:
  struct Node;
  Term() = default;  // null term; never escapes the implementation
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Term head;  // null term inside a generator node
  Term arg;
  int number;  // composition position, or the generator index
  int arity;
  std::vector<int> indices;
};

// A o_n B. Throws position_error when n is out of range and
// index_clash_error when the index sets overlap.
Term compose(const Term& a, int n, const Term& b);

// Evaluation: forget indices, read each generator as the 2-corolla and
// each o_i as grafting at the i-th leaf.
BinaryTree eval(const Term& t);

// Root index when t is an l-factor (each generator inserted at the rank
// of its index), otherwise empty.
std::optional<int> is_l_factor(const Term& t);

// Canonical representative of the index-erased term: generators renumbered
// 1..k in left-to-right order. Two terms with the same erasure get equal
// results.
Term index_erased(const Term& t);

// Root decomposition (2^i o_2 R) o_1 L, with one-sided and trivial forms
// signalled by absent components.
struct RootDecomposition {
  int root_index;
  std::optional<Term> left;
  std::optional<Term> right;

  Term rebuild() const;
  bool operator==(const RootDecomposition&) const = default;
};

}  // namespace operadlab
