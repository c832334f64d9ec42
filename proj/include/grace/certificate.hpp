#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grace/config.hpp"
#include "grace/labeling.hpp"
#include "grace/linear_form.hpp"
#include "grace/perm_group.hpp"
#include "grace/transformation.hpp"

namespace grace {

// Point of the integer lattice (Z_n)^n.
using LatticePoint = std::vector<int>;

// Whether the canonical representative of P modulo the falling-factorial
// relations {(x_k)^n_falling == 0} is nonzero. The representative is the
// unique per-variable-degree < n polynomial matching P on the lattice
// (Z_n)^n, so the test is: does some lattice point make every factor
// nonzero? When P contains the full vertex Vandermonde the scan is
// restricted to permutation points, since any point with a repeated
// coordinate is already a root of that factor. Returns a witness point when
// nonzero.
std::pair<bool, std::optional<LatticePoint>> canonical_rep_is_nonzero(
    const LinearFormProduct& p, int n);

// Prop.-2 style certificate: LCM of vertex Vandermonde and edge products is
// nonzero mod falling factorials iff f is graceful. An identically-zero edge
// product short-circuits to false (the graph carries two loops or a
// 2-cycle, so two edge labels always collide). Returns witness labeling.
std::pair<bool, std::optional<Labeling>> determinantal_certificate(
    const Transformation& f, int max_n = kDefaultMaxN);

// m-subset certificate: true iff some injective labeling makes some m of the
// induced edge labels pairwise distinct. max over m of the certified values
// equals beta(f); m = 1 is treated as trivially certified by callers.
bool subset_certificate(const Transformation& f, int m, int max_n = kDefaultMaxN);

// Largest m in [2, n] certified, or 1 when none is (matches beta == 1).
int max_certified_m(const Transformation& f, int max_n = kDefaultMaxN);

// Power-sum residuals (sum_i x_i^k - sum_i i^k) for k = 1..n. All-zero
// exactly when x is a permutation of (0, ..., n-1).
std::vector<BigInt> power_sum_residuals(const std::vector<long long>& x);

// Stabilizer test against Aut(G_f): builds the ordered-pair product
//   P_f = prod_{i != j} (x_j - x_i) ((x_{f(j)}-x_j)^2 - (x_{f(i)}-x_i)^2),
// with each quadratic split into its two linear parts, and compares the raw
// signed factor multiset of P_f with that of the variable-permuted P_f(x_sigma).
// The comparison is exact per factor occurrence: absorbing signs into one
// global scalar would also accept permutations conjugating f onto the
// reversed-edge map (e.g. a cycle onto its inverse), where the two products
// coincide as polynomials without sigma commuting with f.
bool stabilizer_check(const Transformation& f, const Permutation& sigma);

// Evaluation of P_g (the ordered-pair product above) at an exact rational
// point. The factors are homogeneous, so denominators are cleared once and
// the integer product is divided by the common denominator to the total
// degree.
Rational p_poly_value(const Transformation& g, const std::vector<Rational>& x);
BigInt p_poly_value(const Transformation& g, const std::vector<int>& x);

// sum over the given coset representatives sigma of P_{sigma f sigma^(-1)}(x).
Rational orbit_sum_value(const Transformation& f, const std::vector<Permutation>& reps,
                         const std::vector<Rational>& x);

struct RepDependenceReport {
  bool found = false;
  // Self-contained evidence for the first dependence hit (empty when none):
  Permutation canonical_rep;
  Permutation alternative_rep;
  LatticePoint point;
  std::string canonical_value;
  std::string alternative_value;
  std::string description;
};

// For f with Aut(G_f) strictly inside Aut(G_{f^(2)}) and n <= 4: scans all
// permutation lattice points and all single-coset deviations from the
// canonical Aut(G_{f^(2)})-coset representatives for an evaluation where the
// orbit sum changes. Any two representative choices differ by such single
// swaps, so the scan decides existence exactly.
RepDependenceReport rep_dependence_witness(const Transformation& f);

// Verifies (A_{f^(2)} - I) (A_f + I)^(-1) == (A_f - I) over exact rationals.
// Singular A_f + I propagates as SingularMatrixError (impossible for
// semigroup members, whose determinant is 2).
bool substitution_transform_check(const Transformation& f);

}  // namespace grace
