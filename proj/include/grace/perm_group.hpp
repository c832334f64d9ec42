#pragma once

#include <cstdint>
#include <vector>

#include "grace/transformation.hpp"

namespace grace {

// Permutations are image sequences, like transformations.
using Permutation = std::vector<int>;

bool is_permutation(const std::vector<int>& v);
Permutation identity_permutation(int n);
Permutation compose_perm(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse_perm(const Permutation& p);

// All n! permutations of Z_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Lehmer rank of a permutation within the lexicographic order of S_n.
std::uint64_t perm_rank(const Permutation& p);

// Subgroup of S_n stored as its full sorted element list.
struct PermutationGroup {
  int n = 0;
  std::vector<Permutation> elements;  // sorted lexicographically

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

// Subgroup axioms by table lookup: identity, closure, inverses.
bool is_subgroup(const PermutationGroup& g);

// Aut(G_f) = {sigma : sigma(f(i)) = f(sigma(i)) for all i}, computed by
// backtracking over S_n with in-degree and loop pruning. Sorted output.
PermutationGroup automorphism_group(const Transformation& f);

// One permutation per left coset sigma*G, always the lexicographically least
// member of its coset; output sorted. Throws GroupAxiomError if the element
// list is not a subgroup.
std::vector<Permutation> left_coset_representatives(const PermutationGroup& g);

// True iff every element of inner is an element of outer and outer is larger.
bool is_strict_subgroup(const PermutationGroup& inner, const PermutationGroup& outer);

}  // namespace grace
