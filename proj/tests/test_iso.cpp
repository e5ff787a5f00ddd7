#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tmine/brute.hpp"
#include "tmine/errors.hpp"
#include "tmine/iso.hpp"

using namespace tmine;

TEST_CASE("single vertex embeds everywhere") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Tree t = testsupport::random_tree(rng, 1 + rng() % 10, 5);
    CHECK(subtree_iso(Tree{}, t, Mode::unordered));
    CHECK(subtree_iso(Tree{}, t, Mode::ordered));
  }
}

TEST_CASE("star below the root") {
  Tree star = make_star(2);
  Tree target = parse_tree("((()()))");
  CHECK(brute_subtree_iso(star, target, Mode::unordered));
  auto w = find_embedding(star, target, Mode::unordered);
  REQUIRE(w.has_value());
  CHECK(w->map[0] == 1);
  CHECK(validate_witness(star, target, Mode::unordered, *w));
}

TEST_CASE("ordered sibling order matters") {
  Tree p = parse_tree("(()(()))");
  Tree t = parse_tree("((())())");
  CHECK_FALSE(brute_subtree_iso(p, t, Mode::ordered));
  CHECK_FALSE(subtree_iso(p, t, Mode::ordered));
  Tree reversed = parse_tree("((())())");
  CHECK(subtree_iso(reversed, t, Mode::ordered));
  CHECK(subtree_iso(p, t, Mode::unordered));
}

TEST_CASE("tree_equal") {
  Tree a = parse_tree("(()(()))");
  Tree b = parse_tree("((())())");
  CHECK(tree_equal(a, a, Mode::ordered));
  CHECK(tree_equal(a, b, Mode::unordered));
  CHECK_FALSE(tree_equal(a, b, Mode::ordered));
  CHECK_FALSE(tree_equal(a, parse_tree("(()())"), Mode::unordered));
}

TEST_CASE("support sets") {
  Dataset d(std::vector<Tree>{make_star(1), parse_tree("((()()))")}, Mode::unordered);
  CHECK(support_set(Tree{}, d).indices == std::vector<std::size_t>{0, 1});
  CHECK(support_set(make_star(2), d).indices == std::vector<std::size_t>{1});
  CHECK(support_set(d.tree(0), d).contains(0));
  CHECK(is_frequent(make_star(2), d, 1));
  CHECK_FALSE(is_frequent(Tree{}, d, 3));
  CHECK_THROWS_AS(is_frequent(Tree{}, d, 0), ArgumentError);
}

TEST_CASE("witnesses validate on random positive pairs") {
  std::mt19937_64 rng(99);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    Tree t = testsupport::random_tree(rng, 4 + rng() % 12, 4);
    Tree p = testsupport::random_tree(rng, 1 + rng() % 5, 3);
    for (Mode mode : {Mode::ordered, Mode::unordered}) {
      auto w = find_embedding(p, t, mode);
      CHECK(w.has_value() == subtree_iso(p, t, mode));
      if (w) {
        ++found;
        CHECK(validate_witness(p, t, mode, *w));
      }
    }
  }
  CHECK(found > 50);
}

TEST_CASE("agrees with the exhaustive oracle on random pairs up to 10 vertices") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Tree t = testsupport::random_tree(rng, 1 + rng() % 10, 5);
    Tree p = testsupport::random_tree(rng, 1 + rng() % 6, 4);
    for (Mode mode : {Mode::ordered, Mode::unordered}) {
      CHECK(subtree_iso(p, t, mode) == brute_subtree_iso(p, t, mode));
    }
  }
}
