#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "operadlab/maps.hpp"
#include "operadlab/rewrite.hpp"
#include "operadlab/tree.hpp"
#include "operadlab/word.hpp"

namespace operadlab {

// Verdict for one right-weak cover pair: the images either coincide
// (independent swap) or differ by a single rotation.
struct StrictRotation {
  BinaryTree tree_from;
  BinaryTree tree_to;
  bool operator==(const StrictRotation&) const = default;
};

struct CoverClassification {
  Permutation pi;
  Permutation rho;
  // Absent means Collapsed.
  std::optional<StrictRotation> rotation;

  bool collapsed() const { return !rotation.has_value(); }
};

// Classifies a right-weak cover pair by Tonks independence of the swapped
// entries. Throws domain_error when rho is not a cover of pi.
CoverClassification classify_cover(const Permutation& pi, const Permutation& rho);

// The local-index lemma instance for context tau and fresh letters u < v:
//   k(v; tau) - k(u; tau v) = |{x in tau : u < x < v}|.
bool check_local_indices(const Word& tau, int u, int v);

// Outcome of one exhaustive check at one size.
struct VerificationReport {
  std::string check;
  std::size_t n = 0;
  long long instances = 0;
  std::vector<std::string> failures;  // counterexamples, lexicographic
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  std::string text() const;
  // check <tab> n <tab> instances <tab> failures joined by ';'
  std::string tsv_line() const;
};

// A finite poset presented by labelled elements and cover pairs
// (lo, hi) as indices into elements.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

Poset weak_order_poset(std::size_t n);
Poset tamari_poset(int n, int max_n = 12);

struct QuotientPoset {
  Poset poset;  // elements labelled by class representatives
  std::vector<BinaryTree> class_trees;
  bool isomorphic_to_tamari = false;
};

// Quotient of the right-weak cover digraph by the Tonks classes;
// isomorphic_to_tamari holds when class -> tree is a bijection onto Y_n
// carrying the quotient covers exactly onto the rotation covers.
QuotientPoset quotient_poset(std::size_t n, std::size_t max_n = 8);

// Identity suite over S_n: agreement of the four map implementations,
// psi = eval(f), phi = psi o inverse, the l-factor shape of h, and both
// root-decomposition lemmas checked modulo the calculus.
VerificationReport verify_identities(std::size_t n, std::size_t max_n = 9);

// Every right-weak cover pair classified; collapsed pairs must share
// their image, dependent pairs must differ by one rotation, and the
// Tamari comparison must hold.
VerificationReport verify_order_preservation(std::size_t n, std::size_t max_n = 9);

// Class partition checks: Catalan count, bijection onto Y_n, members
// sharing the class image, fibers of the Tonks map equal to classes,
// surjectivity of both maps, and independent swaps preserving the image.
VerificationReport verify_classes(std::size_t n, std::size_t max_n = 9);

// Wraps quotient_poset into a report.
VerificationReport verify_quotient(std::size_t n, std::size_t max_n = 9);

// check_local_indices over every word with distinct letters from [n] and
// every admissible pair u < v <= n+1.
VerificationReport verify_local_indices(std::size_t n, std::size_t max_n = 9);

// Random (term, applicable step) pairs: evaluation invariance, inverse
// step restores the term, arity and index set preserved.
VerificationReport verify_soundness_fuzz(long long pairs, int max_generators,
                                         unsigned seed);

// Exhaustive cross-check that equality-by-evaluation agrees with
// reachability under rewrite steps on all index-erased terms with at most
// max_generators generators.
VerificationReport verify_completeness(int max_generators);

}  // namespace operadlab
