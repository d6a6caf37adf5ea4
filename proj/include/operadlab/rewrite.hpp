#pragma once

#include <string>
#include <utility>
#include <vector>

#include "operadlab/term.hpp"

namespace operadlab {

// The two axiom schemes of the calculus, read left to right:
//   (assoc1)  (A o_n B) o_m C = A o_n (B o_{m-n+1} C)   if n <= m < n+|B|
//   (assoc2)  (A o_n B) o_m C = (A o_{m-|B|+1} C) o_n B  if n+|B| <= m
enum class Axiom { assoc1, assoc2 };
enum class Direction { left_to_right, right_to_left };
enum class PathStep { head, arg };

// One axiom application: where (path of head/arg selectors from the term
// root), which axiom, in which direction, with the (n, m) of the instance
// as written above. Carrying (n, m) makes traces replayable and checkable.
struct RewriteStep {
  Axiom axiom;
  Direction direction;
  std::vector<PathStep> path;
  int n;
  int m;

  RewriteStep inverted() const;
  std::string str() const;
  bool operator==(const RewriteStep&) const = default;
};

// Applies one step. Throws path_error when the path leaves the term,
// pattern_error when the addressed node does not match the axiom side,
// side_condition_error when (n, m) violate the scheme's constraint.
Term apply_rewrite(const Term& t, const RewriteStep& step);

// Every step applicable anywhere in t, in a fixed deterministic order.
std::vector<RewriteStep> applicable_steps(const Term& t);

// Equality modulo the calculus, decided by evaluation (complete for the
// unit-free calculus on one binary generator).
bool eq_mod_I(const Term& a, const Term& b);

// Root normalization of an l-factor, following the inductive argument of
// the normalization lemma: returns the decomposition (2^i o_2 R) o_1 L
// (or a one-sided / trivial form) together with a trace that replays from
// t to the rebuilt normal form. Throws domain_error when t is not an
// l-factor.
std::pair<RootDecomposition, std::vector<RewriteStep>> normalize_l_factor(
    const Term& t);

}  // namespace operadlab
