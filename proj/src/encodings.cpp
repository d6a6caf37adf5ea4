#include "operadlab/encodings.hpp"

#include <algorithm>

namespace operadlab {

Term head_insertion(const Word& a) {
  if (a.empty()) throw domain_error("head_insertion of the empty word");
  const auto& letters = a.letters();
  Term t = Term::gen(letters[0]);
  std::vector<int> prefix{letters[0]};
  for (std::size_t i = 1; i < letters.size(); ++i) {
    t = compose(t, insertion_index(letters[i], Word(prefix)), Term::gen(letters[i]));
    prefix.push_back(letters[i]);
  }
  return t;
}

int u_count(const Word& a, int x) {
  if (!a.contains(x)) {
    throw domain_error("letter " + std::to_string(x) + " does not occur in " +
                       a.str());
  }
  int count = 0;
  for (int y : a.letters()) {
    if (y == x) break;
    if (y > x) ++count;
  }
  return count;
}

Term decreasing_encoding(const Word& a) {
  if (a.empty()) throw domain_error("decreasing_encoding of the empty word");
  std::vector<int> kappa = a.letters();
  std::sort(kappa.begin(), kappa.end(), std::greater<int>());
  Term t = Term::gen(kappa[0]);
  for (std::size_t q = 1; q < kappa.size(); ++q) {
    t = compose(t, u_count(a, kappa[q]) + 1, Term::gen(kappa[q]));
  }
  return t;
}

BinaryTree g_map(const Word& a) {
  if (a.empty()) throw domain_error("g_map of the empty word");
  return eval(head_insertion(reverse(a)));
}

RootDecomposition h_root_decomposition(const Word& a) {
  if (a.empty()) throw domain_error("h_root_decomposition of the empty word");
  const int i = a.letters().front();
  auto [below, above] = split_below_above(a, i);
  RootDecomposition dec{i, std::nullopt, std::nullopt};
  if (!below.empty()) dec.left = head_insertion(below);
  if (!above.empty()) dec.right = head_insertion(above);
  return dec;
}

RootDecomposition f_normalization(const Word& a) {
  if (a.empty()) throw domain_error("f_normalization of the empty word");
  const auto& letters = a.letters();
  const auto max_it = std::max_element(letters.begin(), letters.end());
  std::vector<int> left(letters.begin(), max_it);
  std::vector<int> right(max_it + 1, letters.end());
  RootDecomposition dec{*max_it, std::nullopt, std::nullopt};
  if (!left.empty()) dec.left = decreasing_encoding(Word(std::move(left)));
  if (!right.empty()) dec.right = decreasing_encoding(Word(std::move(right)));
  return dec;
}

}  // namespace operadlab
