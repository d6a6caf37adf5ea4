#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "operadlab/errors.hpp"

namespace operadlab {

// A finite word of pairwise distinct positive integers. Positions are
// 1-based in the public API, matching the usual one-line conventions.
//
// Text form: a space-free digit string when every letter is <= 9 ("2413"),
// comma-separated integers otherwise ("2,4,1,3,10"). Both forms parse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  static Word parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // 1-based access.
  int at(std::size_t pos) const;
  bool contains(int x) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

// A permutation of [n] in one-line notation; n = 0 gives the empty
// permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word word);
  explicit Permutation(std::vector<int> entries);

  static Permutation parse(std::string_view text);
  static Permutation identity(std::size_t n);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  int at(std::size_t pos) const { return word_.at(pos); }

  std::string str() const { return word_.str(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word word_;
};

// std(a): relabel onto {1,...,k} preserving relative order.
Permutation standardize(const Word& a);

// w(a): the reversal.
Word reverse(const Word& a);

// (a^{<x}, a^{>x}), both in the original left-to-right order. A letter
// equal to x lands in neither.
std::pair<Word, Word> split_below_above(const Word& a, int x);

// k(x; sigma) = 1 + |{letters of sigma below x}|, the insertion index of
// the head-insertion encoding. Throws duplicate_letter_error if x occurs
// in sigma.
int insertion_index(int x, const Word& sigma);

// Number of inversions, l(pi).
long inversions(const Permutation& pi);

// Right weak Bruhat covers: swap adjacent positions i, i+1 with
// pi_i < pi_{i+1}. Results in lexicographic order.
std::vector<Permutation> weak_covers_right(const Permutation& pi);

// Left weak Bruhat covers: swap the values i, i+1 when i sits to the left
// of i+1. Results in lexicographic order.
std::vector<Permutation> weak_covers_left(const Permutation& pi);

// lo <=_B hi in the right weak order. Closure of the cover relation,
// memoized per n for n <= 7, plain breadth-first search above that.
bool weak_leq(const Permutation& lo, const Permutation& hi);

// Group inverse.
Permutation inverse(const Permutation& pi);

// All of S_n in lexicographic order.
std::vector<Permutation> enumerate_permutations(std::size_t n);

}  // namespace operadlab
