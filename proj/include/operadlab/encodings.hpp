#pragma once

#include "operadlab/term.hpp"
#include "operadlab/word.hpp"

namespace operadlab {

// Head-insertion encoding h: fold the word left to right, inserting each
// generator 2^{a_t} at position 1 + |{earlier letters below a_t}|. The
// result is an l-factor with root a_1 and index set the letter set.
// Throws domain_error on the empty word.
Term head_insertion(const Word& a);

// u_a(x) = |{letters to the left of x in a that are greater than x}|.
int u_count(const Word& a, int x);

// Decreasing encoding f: insert generators in decreasing letter order,
// 2^{kappa_q} at position u_a(kappa_q) + 1. Throws domain_error on the
// empty word.
Term decreasing_encoding(const Word& a);

// g(a) = eval(h(w(a))), the evaluation of the head-insertion encoding of
// the reversed word.
BinaryTree g_map(const Word& a);

// Root decomposition of h(a) at i = a_1: left and right components are
// the encodings of the subwords a^{<i} and a^{>i}, which inherit the
// letter order of a. The rebuilt term is congruent to h(a).
RootDecomposition h_root_decomposition(const Word& a);

// Normalization of f(a) at the maximal letter kappa_1, splitting
// a = a_L kappa_1 a_R: components are the decreasing encodings of a_L and
// a_R. The rebuilt term is congruent to f(a).
RootDecomposition f_normalization(const Word& a);

}  // namespace operadlab
