#include <doctest.h>

#include <algorithm>
#include <set>

#include "operadlab/word.hpp"

using namespace operadlab;

namespace {

// Independent rank oracle: each letter replaced by 1 + number of smaller
// letters in the word.
std::vector<int> rank_oracle(const std::vector<int>& a) {
  std::vector<int> out;
  for (int x : a) {
    int rank = 1;
    for (int y : a) {
      if (y < x) ++rank;
    }
    out.push_back(rank);
  }
  return out;
}

// All words over nonempty subsets of [max_letter], including the empty word.
std::vector<Word> all_words(int max_letter) {
  std::vector<Word> out{Word{}};
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

std::set<std::string> strings(const std::vector<Permutation>& perms) {
  std::set<std::string> out;
  for (const Permutation& p : perms) out.insert(p.str());
  return out;
}

}  // namespace

TEST_CASE("word parsing and printing") {
  CHECK(Word::parse("2413").str() == "2413");
  CHECK(Word::parse("2,4,1,3,10").str() == "2,4,1,3,10");
  CHECK(Word::parse("2,4,1,3").str() == "2413");
  CHECK(Word::parse("").str() == "");
  CHECK(Word::parse("  312 ").letters() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(Word::parse("1a2"), parse_error);
  CHECK_THROWS_AS(Word::parse("1,,2"), parse_error);
  CHECK_THROWS_AS(Word::parse("102"), domain_error);  // digit 0 is no letter
  CHECK_THROWS_AS(Word::parse("11"), duplicate_letter_error);
  CHECK_THROWS_AS(Word(std::vector<int>{2, 2}), duplicate_letter_error);
  CHECK_THROWS_AS(Word(std::vector<int>{0}), domain_error);
}

TEST_CASE("permutation validation") {
  CHECK(Permutation::parse("2413").size() == 4);
  CHECK(Permutation::parse("").empty());
  CHECK(Permutation::identity(3).str() == "123");
  CHECK_THROWS_AS(Permutation::parse("13"), domain_error);
  CHECK_THROWS_AS(Permutation::parse("24"), domain_error);
}

TEST_CASE("standardize") {
  CHECK(standardize(Word::parse("13")).str() == "12");
  CHECK(standardize(Word{}).empty());
  CHECK(standardize(Word::parse("524")).str() == "312");

  for (const Word& a : all_words(5)) {
    const Permutation std_a = standardize(a);
    CHECK(std_a.word().letters() == rank_oracle(a.letters()));
    CHECK(standardize(std_a.word()) == std_a);  // idempotent on images
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(Word::parse("312")).str() == "213");
  CHECK(reverse(Word::parse("1")).str() == "1");
  CHECK(reverse(Word{}).empty());
  for (const Word& a : all_words(5)) {
    CHECK(reverse(reverse(a)) == a);
  }
}

TEST_CASE("split_below_above") {
  auto [b1, a1] = split_below_above(Word::parse("312"), 2);
  CHECK(b1.str() == "1");
  CHECK(a1.str() == "3");
  auto [b2, a2] = split_below_above(Word::parse("2413"), 3);
  CHECK(b2.str() == "21");
  CHECK(a2.str() == "4");
  auto [b3, a3] = split_below_above(Word{}, 5);
  CHECK(b3.empty());
  CHECK(a3.empty());
}

TEST_CASE("insertion_index") {
  CHECK(insertion_index(2, Word::parse("31")) == 2);
  CHECK(insertion_index(7, Word{}) == 1);
  CHECK(insertion_index(1, Word::parse("23")) == 1);
  CHECK_THROWS_AS(insertion_index(3, Word::parse("31")),
                  duplicate_letter_error);

  // Local-index relation: k(v; s) - k(u; s v) counts the letters of s
  // strictly between u and v.
  for (const Word& sigma : all_words(4)) {
    for (int u = 1; u <= 5; ++u) {
      for (int v = u + 1; v <= 6; ++v) {
        if (sigma.contains(u) || sigma.contains(v)) continue;
        std::vector<int> extended = sigma.letters();
        extended.push_back(v);
        int between = 0;
        for (int x : sigma.letters()) {
          if (u < x && x < v) ++between;
        }
        CHECK(insertion_index(v, sigma) -
                  insertion_index(u, Word(extended)) ==
              between);
      }
    }
  }
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::parse("123")) == 0);
  CHECK(inversions(Permutation::parse("312")) == 2);
  CHECK(inversions(Permutation::parse("321")) == 3);
}

TEST_CASE("weak covers") {
  CHECK(strings(weak_covers_right(Permutation::parse("132"))) ==
        std::set<std::string>{"312"});
  CHECK(strings(weak_covers_right(Permutation::parse("123"))) ==
        std::set<std::string>{"132", "213"});
  CHECK(weak_covers_right(Permutation::parse("321")).empty());

  CHECK(strings(weak_covers_left(Permutation::parse("132"))) ==
        std::set<std::string>{"231"});
  CHECK(strings(weak_covers_left(Permutation::parse("123"))) ==
        std::set<std::string>{"213", "132"});
  CHECK(weak_covers_left(Permutation::parse("321")).empty());
}

TEST_CASE("covers raise the inversion count by one") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t maximal = 0;
    for (const Permutation& pi : enumerate_permutations(n)) {
      const auto covers = weak_covers_right(pi);
      if (covers.empty()) ++maximal;
      for (const Permutation& rho : covers) {
        CHECK(inversions(rho) == inversions(pi) + 1);
      }
    }
    CHECK(maximal == 1);  // only n n-1 ... 1 has no ascent
  }
}

TEST_CASE("weak_leq") {
  CHECK(weak_leq(Permutation::parse("123"), Permutation::parse("321")));
  CHECK(weak_leq(Permutation::parse("132"), Permutation::parse("312")));
  CHECK_FALSE(weak_leq(Permutation::parse("312"), Permutation::parse("132")));
  CHECK_THROWS_AS(weak_leq(Permutation::parse("12"), Permutation::parse("123")),
                  size_mismatch_error);
}

TEST_CASE("weak order is a partial order") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::vector<Permutation> perms = enumerate_permutations(n);
    for (const Permutation& a : perms) {
      CHECK(weak_leq(a, a));
      for (const Permutation& b : perms) {
        if (a != b && weak_leq(a, b)) {
          CHECK_FALSE(weak_leq(b, a));  // antisymmetry
          for (const Permutation& c : perms) {
            if (weak_leq(b, c)) CHECK(weak_leq(a, c));  // transitivity
          }
        }
      }
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::parse("123")).str() == "123");
  CHECK(inverse(Permutation::parse("312")).str() == "231");
  CHECK(inverse(Permutation::parse("2413")).str() == "3142");
  for (const Permutation& pi : enumerate_permutations(5)) {
    CHECK(inverse(inverse(pi)) == pi);
  }
}

TEST_CASE("enumerate_permutations is lexicographic and complete") {
  const std::vector<Permutation> s3 = enumerate_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front().str() == "123");
  CHECK(s3.back().str() == "321");
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(enumerate_permutations(0).size() == 1);
}
