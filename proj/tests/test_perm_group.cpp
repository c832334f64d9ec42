#include <doctest.h>

#include <algorithm>
#include <set>

#include "grace/errors.hpp"
#include "grace/perm_group.hpp"
#include "oracles.hpp"

using namespace grace;

namespace {

Transformation t(std::initializer_list<int> images) {
  return Transformation::from_images(std::vector<int>(images));
}

PermutationGroup symmetric_group(int n) {
  PermutationGroup g;
  g.n = n;
  g.elements = all_permutations(n);
  return g;
}

}  // namespace

TEST_SUITE("perm_group") {

TEST_CASE("perm_rank enumerates lexicographically") {
  const auto perms = all_permutations(4);
  REQUIRE(perms.size() == 24);
  for (std::size_t i = 0; i < perms.size(); ++i) CHECK(perm_rank(perms[i]) == i);
}

TEST_CASE("automorphism group spec examples") {
  const PermutationGroup star = automorphism_group(t({0, 0, 0}));
  REQUIRE(star.order() == 2);
  CHECK(star.elements[0] == Permutation{0, 1, 2});
  CHECK(star.elements[1] == Permutation{0, 2, 1});

  CHECK(automorphism_group(Transformation::identity(4)).order() == 24);
  CHECK(automorphism_group(t({0, 0, 1})).order() == 1);
}

TEST_CASE("automorphism group matches brute force") {
  // all 27 maps on Z_3, plus random larger instances
  for (int idx = 0; idx < 27; ++idx) {
    Transformation f;
    f.images = {idx / 9, (idx / 3) % 3, idx % 3};
    CHECK(automorphism_group(f).elements == oracle::aut_brute_force(f));
  }
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Transformation f = random_transformation(rng.between(1, 6), rng);
    CHECK(automorphism_group(f).elements == oracle::aut_brute_force(f));
  }
  for (int trial = 0; trial < 4; ++trial) {
    const Transformation f = random_transformation(rng.between(7, 8), rng);
    CHECK(automorphism_group(f).elements == oracle::aut_brute_force(f));
  }
}

TEST_CASE("automorphism group satisfies the subgroup axioms") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial)
    CHECK(is_subgroup(automorphism_group(random_transformation(rng.between(1, 6), rng))));
}

TEST_CASE("Aut(G_f) is contained in Aut(G_f^2)") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Transformation f = random_transformation(rng.between(1, 6), rng);
    const PermutationGroup aut_f = automorphism_group(f);
    const PermutationGroup aut_f2 = automorphism_group(iterate(f, 2));
    for (const Permutation& sigma : aut_f.elements) CHECK(aut_f2.contains(sigma));
  }
}

TEST_CASE("coset representatives") {
  CHECK(left_coset_representatives(symmetric_group(3)) ==
        std::vector<Permutation>{{0, 1, 2}});

  PermutationGroup trivial;
  trivial.n = 3;
  trivial.elements = {identity_permutation(3)};
  CHECK(left_coset_representatives(trivial).size() == 6);

  const PermutationGroup star = automorphism_group(t({0, 0, 0}));
  const auto reps = left_coset_representatives(star);
  REQUIRE(reps.size() == 3);
  // each representative is the lexicographic minimum of its coset
  for (const Permutation& rep : reps)
    for (const Permutation& h : star.elements) CHECK(rep <= compose_perm(rep, h));
  // cosets partition S_3
  std::set<Permutation> covered;
  for (const Permutation& rep : reps)
    for (const Permutation& h : star.elements) covered.insert(compose_perm(rep, h));
  CHECK(covered.size() == 6);
}

TEST_CASE("coset representative count is n!/|G| on random automorphism groups") {
  Rng rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.between(2, 5);
    const PermutationGroup g = automorphism_group(random_transformation(n, rng));
    CHECK(left_coset_representatives(g).size() == factorial(n) / g.order());
  }
}

TEST_CASE("non-subgroup input is rejected") {
  PermutationGroup bad;
  bad.n = 3;
  bad.elements = {Permutation{0, 2, 1}};  // no identity
  CHECK_THROWS_AS(left_coset_representatives(bad), GroupAxiomError);

  PermutationGroup not_closed;
  not_closed.n = 3;
  not_closed.elements = {identity_permutation(3), {1, 0, 2}, {0, 2, 1}};
  std::sort(not_closed.elements.begin(), not_closed.elements.end());
  CHECK_THROWS_AS(left_coset_representatives(not_closed), GroupAxiomError);
}

}  // TEST_SUITE
