#include <doctest.h>

#include "operadlab/encodings.hpp"
#include "operadlab/rewrite.hpp"

using namespace operadlab;

namespace {

Word w(const char* text) { return Word::parse(text); }

// All nonempty words over subsets of [max_letter].
std::vector<Word> all_words(int max_letter) {
  std::vector<Word> out;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(max_letter) + 1, false);
  auto extend = [&](auto&& self) -> void {
    for (int x = 1; x <= max_letter; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      current.push_back(x);
      out.emplace_back(current);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  extend(extend);
  return out;
}

}  // namespace

TEST_CASE("head_insertion") {
  CHECK(head_insertion(w("312")).str() == "((2^3 o_1 2^1) o_2 2^2)");
  CHECK(head_insertion(w("1")).str() == "2^1");
  CHECK(head_insertion(w("2413")).str() == "(((2^2 o_2 2^4) o_1 2^1) o_3 2^3)");
  CHECK_THROWS_AS(head_insertion(Word{}), domain_error);
}

TEST_CASE("u_count") {
  CHECK(u_count(w("312"), 2) == 1);
  CHECK(u_count(w("312"), 1) == 1);
  CHECK(u_count(w("312"), 3) == 0);
  CHECK_THROWS_AS(u_count(w("312"), 4), domain_error);
}

TEST_CASE("decreasing_encoding") {
  CHECK(decreasing_encoding(w("312")).str() == "((2^3 o_2 2^2) o_2 2^1)");
  CHECK(decreasing_encoding(w("1")).str() == "2^1");
  CHECK(decreasing_encoding(w("231")).str() == "((2^3 o_1 2^2) o_3 2^1)");
  CHECK_THROWS_AS(decreasing_encoding(Word{}), domain_error);
}

TEST_CASE("g_map") {
  CHECK(g_map(w("312")).str() == "((*,*),(*,*))");
  CHECK(g_map(w("1")) == corolla());
  CHECK(g_map(w("132")) == g_map(w("312")));
  CHECK_THROWS_AS(g_map(Word{}), domain_error);
}

TEST_CASE("h_root_decomposition") {
  const RootDecomposition d1 = h_root_decomposition(w("312"));
  CHECK(d1.root_index == 3);
  REQUIRE(d1.left.has_value());
  CHECK(*d1.left == head_insertion(w("12")));
  CHECK_FALSE(d1.right.has_value());

  const RootDecomposition d2 = h_root_decomposition(w("1"));
  CHECK(d2.root_index == 1);
  CHECK_FALSE(d2.left.has_value());
  CHECK_FALSE(d2.right.has_value());

  const RootDecomposition d3 = h_root_decomposition(w("231"));
  CHECK(d3.root_index == 2);
  REQUIRE(d3.left.has_value());
  CHECK(*d3.left == head_insertion(w("1")));
  REQUIRE(d3.right.has_value());
  CHECK(*d3.right == head_insertion(w("3")));

  CHECK_THROWS_AS(h_root_decomposition(Word{}), domain_error);
}

TEST_CASE("f_normalization") {
  const RootDecomposition d1 = f_normalization(w("312"));
  CHECK(d1.root_index == 3);
  CHECK_FALSE(d1.left.has_value());
  REQUIRE(d1.right.has_value());
  CHECK(eq_mod_I(*d1.right, decreasing_encoding(w("12"))));

  const RootDecomposition d2 = f_normalization(w("5"));
  CHECK(d2.root_index == 5);
  CHECK_FALSE(d2.left.has_value());
  CHECK_FALSE(d2.right.has_value());

  const RootDecomposition d3 = f_normalization(w("231"));
  CHECK(d3.root_index == 3);
  REQUIRE(d3.left.has_value());
  CHECK(eq_mod_I(*d3.left, decreasing_encoding(w("2"))));
  REQUIRE(d3.right.has_value());
  CHECK(eq_mod_I(*d3.right, decreasing_encoding(w("1"))));

  CHECK_THROWS_AS(f_normalization(Word{}), domain_error);
}

TEST_CASE("encodings over all words on subsets of [7]") {
  for (const Word& a : all_words(7)) {
    const Term h = head_insertion(a);
    const Term f = decreasing_encoding(a);

    // h is an l-factor rooted at the first letter, indexed by the letters.
    CHECK(is_l_factor(h) == a.letters().front());
    std::vector<int> sorted = a.letters();
    std::sort(sorted.begin(), sorted.end());
    CHECK(h.indices() == sorted);
    CHECK(f.indices() == sorted);

    CHECK(h.arity() == static_cast<int>(a.size()) + 1);
    CHECK(f.arity() == static_cast<int>(a.size()) + 1);

    // Standardization invariance after evaluation.
    const Word std_a = standardize(a).word();
    CHECK(eval(head_insertion(reverse(a))) ==
          eval(head_insertion(reverse(std_a))));
    CHECK(eval(f) == eval(decreasing_encoding(std_a)));

    // Both decomposition lemmas, modulo the calculus.
    CHECK(eq_mod_I(h, h_root_decomposition(a).rebuild()));
    CHECK(eq_mod_I(f, f_normalization(a).rebuild()));
  }
}
