#include <doctest.h>

#include <map>
#include <set>

#include "operadlab/tree.hpp"

using namespace operadlab;

namespace {

BinaryTree t(const char* text) { return BinaryTree::parse(text); }

std::set<std::string> strings(const std::vector<BinaryTree>& trees) {
  std::set<std::string> out;
  for (const BinaryTree& x : trees) out.insert(x.str());
  return out;
}

// Trees of size <= max, flattened.
std::vector<BinaryTree> small_trees(int max) {
  std::vector<BinaryTree> out;
  for (int n = 0; n <= max; ++n) {
    for (const BinaryTree& x : enumerate_trees(n)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* text : {"*", "(*,*)", "((*,*),*)", "(*,(*,*))",
                           "((*,(*,*)),((*,*),*))"}) {
    CHECK(t(text).str() == text);
  }
  CHECK_THROWS_AS(BinaryTree::parse(""), parse_error);
  CHECK_THROWS_AS(BinaryTree::parse("(*"), parse_error);
  CHECK_THROWS_AS(BinaryTree::parse("(*,*"), parse_error);
  CHECK_THROWS_AS(BinaryTree::parse("(,*)"), parse_error);
  CHECK_THROWS_AS(BinaryTree::parse("**"), parse_error);
}

TEST_CASE("grafting") {
  CHECK(graft_root(BinaryTree::leaf(), BinaryTree::leaf()) == corolla());
  CHECK(graft_root(corolla(), BinaryTree::leaf()).str() == "((*,*),*)");
  CHECK(graft_root(BinaryTree::leaf(), corolla()).str() == "(*,(*,*))");

  CHECK(graft_at(corolla(), 1, corolla()).str() == "((*,*),*)");
  CHECK(graft_at(corolla(), 2, corolla()).str() == "(*,(*,*))");
  CHECK(graft_at(BinaryTree::leaf(), 1, t("((*,*),*)")) == t("((*,*),*)"));
  CHECK_THROWS_AS(graft_at(corolla(), 0, corolla()), position_error);
  CHECK_THROWS_AS(graft_at(corolla(), 3, corolla()), position_error);
}

TEST_CASE("graft node counts and compatibility") {
  const std::vector<BinaryTree> trees = small_trees(3);
  for (const BinaryTree& a : trees) {
    for (const BinaryTree& b : trees) {
      CHECK(graft_root(a, b).internal_nodes() ==
            a.internal_nodes() + b.internal_nodes() + 1);
      // T1 v T2 as two leaf substitutions into the corolla.
      CHECK(graft_root(a, b) ==
            graft_at(graft_at(corolla(), 2, b), 1, a));
      for (int i = 1; i <= a.leaves(); ++i) {
        CHECK(graft_at(a, i, b).internal_nodes() ==
              a.internal_nodes() + b.internal_nodes());
      }
    }
  }
}

TEST_CASE("rotations") {
  CHECK(strings(rotations(t("((*,*),*)"))) ==
        std::set<std::string>{"(*,(*,*))"});
  CHECK(rotations(t("(*,(*,*))")).empty());
  CHECK(strings(rotations(t("(((*,*),*),*)"))) ==
        std::set<std::string>{"((*,(*,*)),*)", "((*,*),(*,*))"});
  CHECK(rotations(BinaryTree::leaf()).empty());
}

TEST_CASE("rotation preserves node count") {
  for (const BinaryTree& x : enumerate_trees(5)) {
    for (const BinaryTree& y : rotations(x)) {
      CHECK(y.internal_nodes() == x.internal_nodes());
      CHECK(y != x);
    }
  }
}

TEST_CASE("tamari_leq") {
  CHECK(tamari_leq(t("(((*,*),*),*)"), t("(*,(*,(*,*)))")));
  CHECK(tamari_leq(t("((*,*),(*,*))"), t("((*,*),(*,*))")));
  CHECK_FALSE(tamari_leq(t("(*,(*,*))"), t("((*,*),*)")));
  CHECK_THROWS_AS(tamari_leq(corolla(), t("((*,*),*)")), size_mismatch_error);
}

TEST_CASE("tamari order is a partial order with comb extremes") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<BinaryTree> trees = enumerate_trees(n);

    // Unique tree with no rotation successor / predecessor.
    std::map<std::string, int> indegree;
    std::size_t sinks = 0;
    for (const BinaryTree& x : trees) {
      const auto succ = rotations(x);
      if (succ.empty()) {
        ++sinks;
        CHECK(x == right_comb(n));
      }
      for (const BinaryTree& y : succ) ++indegree[y.str()];
    }
    CHECK(sinks == 1);
    std::size_t sources = 0;
    for (const BinaryTree& x : trees) {
      if (indegree.find(x.str()) == indegree.end()) {
        ++sources;
        CHECK(x == left_comb(n));
      }
    }
    CHECK(sources == 1);
    CHECK(tamari_leq(left_comb(n), right_comb(n)));

    if (n > 5) continue;  // partial-order triple sweep up to Y_5
    for (const BinaryTree& a : trees) {
      CHECK(tamari_leq(a, a));
      for (const BinaryTree& b : trees) {
        if (a != b && tamari_leq(a, b)) {
          CHECK_FALSE(tamari_leq(b, a));
          for (const BinaryTree& c : trees) {
            if (tamari_leq(b, c)) CHECK(tamari_leq(a, c));
          }
        }
      }
    }
  }
  // Antisymmetry, exhaustive at n = 6.
  const std::vector<BinaryTree> y6 = enumerate_trees(6);
  for (const BinaryTree& a : y6) {
    for (const BinaryTree& b : y6) {
      if (a != b && tamari_leq(a, b)) CHECK_FALSE(tamari_leq(b, a));
    }
  }
}

TEST_CASE("tamari order is closed under leaf substitution") {
  const std::vector<BinaryTree> contexts = small_trees(4);
  for (int m = 0; m <= 4; ++m) {
    const std::vector<BinaryTree> subs = enumerate_trees(m);
    for (const BinaryTree& s1 : subs) {
      for (const BinaryTree& s2 : subs) {
        if (!tamari_leq(s1, s2)) continue;
        for (const BinaryTree& context : contexts) {
          for (int i = 1; i <= context.leaves(); ++i) {
            CHECK(tamari_leq(graft_at(context, i, s1),
                             graft_at(context, i, s2)));
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate_trees") {
  const unsigned long long expect[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    CHECK(catalan(n) == expect[n]);
    const std::vector<BinaryTree> trees = enumerate_trees(n);
    CHECK(trees.size() == expect[n]);
    CHECK(strings(trees).size() == trees.size());  // distinct
    for (const BinaryTree& x : trees) {
      CHECK(x.internal_nodes() == n);
      CHECK(x.leaves() == n + 1);
    }
  }
  CHECK(enumerate_trees(0).front() == BinaryTree::leaf());
  CHECK(enumerate_trees(2).front().str() == "(*,(*,*))");
  CHECK(enumerate_trees(2).back().str() == "((*,*),*)");
  CHECK_THROWS_AS(enumerate_trees(13), resource_limit_error);
  CHECK_THROWS_AS(enumerate_trees(5, 4), resource_limit_error);
}
