#include <doctest.h>

#include <set>

#include "operadlab/maps.hpp"

using namespace operadlab;

namespace {

Permutation p(const char* text) { return Permutation::parse(text); }

}  // namespace

TEST_CASE("loday_ronco") {
  CHECK(loday_ronco(Permutation{}) == BinaryTree::leaf());
  CHECK(loday_ronco(p("2413")).str() == "((*,*),((*,*),*))");
  CHECK(loday_ronco(p("2413")) ==
        graft_root(loday_ronco(p("1")), loday_ronco(p("12"))));
  CHECK(loday_ronco(p("132")).str() == "((*,*),(*,*))");
}

TEST_CASE("phihat") {
  CHECK(phihat(Permutation{}) == BinaryTree::leaf());
  CHECK(phihat(p("1")) == corolla());
  CHECK(phihat(p("21")).str() == "(*,(*,*))");
  CHECK(phihat(p("12")).str() == "((*,*),*)");
}

TEST_CASE("varphi") {
  CHECK(varphi(p("312")).str() == "((*,*),(*,*))");
  CHECK(varphi(p("123")).str() == "(((*,*),*),*)");
  CHECK(varphi(Permutation{}) == BinaryTree::leaf());
}

TEST_CASE("tonks_map") {
  CHECK(tonks_map(p("132")).str() == "((*,*),(*,*))");
  CHECK(tonks_map(p("132")) == tonks_map(p("312")));
  CHECK(tonks_map(p("321")) == right_comb(3));
  CHECK(tonks_map(p("123")) == left_comb(3));
  CHECK(tonks_map(Permutation{}) == BinaryTree::leaf());
}

TEST_CASE("tonks_independent") {
  CHECK(tonks_independent(p("132"), 1));
  CHECK_FALSE(tonks_independent(p("123"), 2));
  CHECK(tonks_independent(p("2413"), 2));
  CHECK_THROWS_AS(tonks_independent(p("132"), 0), position_error);
  CHECK_THROWS_AS(tonks_independent(p("132"), 3), position_error);
}

TEST_CASE("tonks_classes at n = 3 reproduces the fiber partition") {
  const TonksClassPartition partition = tonks_classes(3);
  REQUIRE(partition.classes.size() == 5);
  std::vector<std::vector<std::string>> members;
  for (const TonksClass& cls : partition.classes) {
    std::vector<std::string> names;
    for (const Permutation& member : cls.members) names.push_back(member.str());
    members.push_back(names);
  }
  CHECK(members == std::vector<std::vector<std::string>>{
                       {"123"}, {"132", "312"}, {"213"}, {"231"}, {"321"}});
  CHECK(partition.classes[1].representative.str() == "132");
  CHECK(partition.classes[1].tree.str() == "((*,*),(*,*))");
  CHECK(partition.class_index(p("312")) == 1);
}

TEST_CASE("tonks_classes counts") {
  CHECK(tonks_classes(0).classes.size() == 1);
  CHECK(tonks_classes(1).classes.size() == 1);
  CHECK(tonks_classes(4).classes.size() == 14);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(tonks_classes(n).classes.size() == catalan(static_cast<int>(n)));
  }
  CHECK_THROWS_AS(tonks_classes(9), resource_limit_error);
}

TEST_CASE("the four implementations agree with the f identity") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Permutation& pi : enumerate_permutations(n)) {
      const BinaryTree phi = tonks_map(pi);
      CHECK(phihat(pi) == phi);
      CHECK(varphi(pi) == phi);
      if (!pi.empty()) CHECK(g_map(pi.word()) == phi);
      CHECK(loday_ronco(pi) ==
            (pi.empty() ? BinaryTree::leaf()
                        : eval(decreasing_encoding(pi.word()))));
      CHECK(phi == loday_ronco(inverse(pi)));
    }
  }
}

TEST_CASE("both maps are onto Y_n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> phi_images, psi_images, all;
    for (const BinaryTree& t : enumerate_trees(static_cast<int>(n))) {
      all.insert(t.str());
    }
    for (const Permutation& pi : enumerate_permutations(n)) {
      phi_images.insert(tonks_map(pi).str());
      psi_images.insert(loday_ronco(pi).str());
    }
    CHECK(phi_images == all);
    CHECK(psi_images == all);
  }
}
