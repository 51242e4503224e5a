#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gpavoid/perm.hpp"

using namespace gpavoid;

namespace {

// Deterministic pseudo-random letters for the larger property cases.
struct Lcg {
  unsigned long long state = 0x2545F4914F6CDD1DULL;
  unsigned next(unsigned bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>((state >> 33) % bound);
  }
};

Permutation random_perm(Lcg& rng, int n) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(letters[i], letters[rng.next(i + 1)]);
  return Permutation(std::move(letters));
}

template <typename Fn>
void for_all_perms(int n, Fn fn) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  do {
    fn(Permutation(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

}  // namespace

TEST_CASE("parsing accepts all three text forms") {
  const std::vector<int> expected{5, 4, 1, 2, 3};
  CHECK(Permutation::parse("5 4 1 2 3").letters() == expected);
  CHECK(Permutation::parse("5,4,1,2,3").letters() == expected);
  CHECK(Permutation::parse("54123").letters() == expected);
  CHECK(Permutation::parse("").empty());
  CHECK(Permutation::parse("10 1 2 3 4 5 6 7 8 9").size() == 10);
  CHECK_THROWS_AS(Permutation::parse("1 2 2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 3"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1x2"), std::invalid_argument);
}

TEST_CASE("trivial maps on the worked examples") {
  const Permutation p = Permutation::parse("1342");
  CHECK(trivial_map(p, Symmetry::reverse).str() == "2 4 3 1");
  CHECK(trivial_map(p, Symmetry::complement).str() == "4 2 1 3");
  CHECK(trivial_map(Permutation(), Symmetry::reverse).empty());
}

TEST_CASE("trivial maps form the Klein four-group") {
  Lcg rng;
  std::vector<Permutation> cases;
  for_all_perms(5, [&](const Permutation& p) { cases.push_back(p); });
  for (int i = 0; i < 8; ++i) cases.push_back(random_perm(rng, 12));
  for (const auto& p : cases) {
    CHECK(trivial_map(trivial_map(p, Symmetry::reverse), Symmetry::reverse) == p);
    CHECK(trivial_map(trivial_map(p, Symmetry::complement), Symmetry::complement) == p);
    CHECK(trivial_map(p, Symmetry::reverse_complement) ==
          trivial_map(trivial_map(p, Symmetry::complement), Symmetry::reverse));
  }
  for (Symmetry f : {Symmetry::identity, Symmetry::reverse, Symmetry::complement,
                     Symmetry::reverse_complement})
    for (Symmetry g : {Symmetry::identity, Symmetry::reverse, Symmetry::complement,
                       Symmetry::reverse_complement})
      CHECK(trivial_map(cases[7], compose(f, g)) == trivial_map(trivial_map(cases[7], g), f));
}

TEST_CASE("boundary constraints on the worked examples") {
  CHECK(boundary_satisfies(Permutation::parse("54123"),
                           {Placement::end, Direction::increasing, 3}));
  CHECK_FALSE(boundary_satisfies(Permutation::parse("21345"),
                                 {Placement::begin, Direction::increasing, 2}));
  // k = 1 restricts nothing, the empty permutation included.
  CHECK(boundary_satisfies(Permutation(), {Placement::begin, Direction::increasing, 1}));
  CHECK(boundary_satisfies(Permutation(), {Placement::end, Direction::decreasing, 1}));
  CHECK_FALSE(boundary_satisfies(Permutation::parse("1"), {Placement::end, Direction::increasing, 2}));
  CHECK_THROWS_AS(boundary_satisfies(Permutation(), {Placement::begin, Direction::increasing, 0}),
                  std::domain_error);
}

TEST_CASE("symmetries transport boundary constraints") {
  for (int n = 0; n <= 6; ++n) {
    for_all_perms(n, [&](const Permutation& p) {
      for (int k = 1; k <= 4; ++k) {
        const BoundaryConstraint c{Placement::begin, Direction::increasing, k};
        for (Symmetry s : {Symmetry::reverse, Symmetry::complement, Symmetry::reverse_complement})
          CHECK(boundary_satisfies(p, c) == boundary_satisfies(trivial_map(p, s), transport(c, s)));
      }
    });
  }
  // The table action itself.
  const BoundaryConstraint c{Placement::begin, Direction::increasing, 3};
  CHECK(transport(c, Symmetry::reverse) ==
        BoundaryConstraint{Placement::end, Direction::decreasing, 3});
  CHECK(transport(c, Symmetry::complement) ==
        BoundaryConstraint{Placement::begin, Direction::decreasing, 3});
  CHECK(transport(c, Symmetry::reverse_complement) ==
        BoundaryConstraint{Placement::end, Direction::increasing, 3});
}

TEST_CASE("right-to-left minima in position order") {
  CHECK(right_to_left_minima(Permutation::parse("2 9 10 5 3 1 11 13 14 8 12 7 4 6")) ==
        std::vector<int>{1, 4, 6});
  CHECK(right_to_left_minima(Permutation::parse("123")) == std::vector<int>{1, 2, 3});
  CHECK(right_to_left_minima(Permutation::parse("321")) == std::vector<int>{1});
  CHECK(right_to_left_minima(Permutation()).empty());
}

TEST_CASE("right-to-left minima increase and start at 1") {
  Lcg rng;
  for (int n = 1; n <= 6; ++n) {
    for_all_perms(n, [&](const Permutation& p) {
      const auto minima = right_to_left_minima(p);
      REQUIRE(!minima.empty());
      CHECK(minima.front() == 1);
      CHECK(minima.back() == p.letters().back());
      CHECK(std::is_sorted(minima.begin(), minima.end()));
      CHECK(std::adjacent_find(minima.begin(), minima.end()) == minima.end());
    });
  }
  for (int i = 0; i < 20; ++i) {
    const auto minima = right_to_left_minima(random_perm(rng, 30));
    CHECK(minima.front() == 1);
    CHECK(std::is_sorted(minima.begin(), minima.end()));
  }
}
