#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grace/numeric.hpp"
#include "grace/transformation.hpp"

namespace grace {

// Integer linear form  sum_j coeffs[j] * x_j + constant.
struct LinearForm {
  std::vector<std::int64_t> coeffs;
  std::int64_t constant = 0;

  bool is_zero() const;

  // Normalized: divided by the gcd of all entries, first nonzero entry
  // (coefficients scanned first, then the constant) positive. Returns the
  // normalized form and the integer scalar pulled out, so that
  // raw = scalar * normalized. The zero form normalizes to (zero, 0).
  std::pair<LinearForm, std::int64_t> normalized() const;

  BigInt evaluate(const std::vector<int>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Variable substitution x_j -> x_{sigma(j)}.
  LinearForm permuted(const std::vector<int>& sigma) const;

  bool operator==(const LinearForm&) const = default;
  auto operator<=>(const LinearForm&) const = default;
};

// Difference form x_{f(j)} - x_j for vertex j of G_f.
LinearForm difference_form(const Transformation& f, int j, int n);
// The form x_b - x_a over n variables.
LinearForm pair_difference_form(int a, int b, int n);

// Product of normalized linear forms with positive exponents and an exact
// rational scalar. An identically-zero product is represented by scalar 0;
// `zero_markers` counts the unsplit degenerate factors that caused it.
struct LinearFormProduct {
  Rational scalar = 1;
  std::map<LinearForm, int> factors;
  int zero_markers = 0;

  int num_vars = 0;

  static LinearFormProduct one(int num_vars);

  bool is_zero() const { return scalar == 0; }
  int total_degree() const;

  // Multiplies in raw^exponent, normalizing the form and absorbing the
  // extracted scalar. A zero raw form zeroes the whole product.
  void multiply_form(const LinearForm& raw, int exponent = 1);
  void multiply(const LinearFormProduct& other);

  Rational evaluate(const std::vector<int>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // True iff the product vanishes at the point; detected structurally (some
  // factor evaluates to zero), no products are formed.
  bool vanishes_at(const std::vector<int>& point) const;

  // Dump format used by golden-file tests: one factor per line,
  // "exp * (c_0,...,c_{n-1} | const)"; a leading "scalar p/q" line appears
  // when the scalar is not 1.
  std::string dump() const;

  bool operator==(const LinearFormProduct&) const = default;
};

// Vertex Vandermonde product  prod_{0<=i<j<n} (x_j - x_i). Requires n >= 2.
LinearFormProduct build_vertex_vandermonde(int n);

// Edge product  prod_{0<=i<j<n} ((x_{f(j)}-x_j)^2 - (x_{f(i)}-x_i)^2), each
// pair factor split into (d_j - d_i)(d_j + d_i). A split part that is
// identically zero (two loops at i and j, or a 2-cycle) makes the whole
// product identically zero and is retained as a zero marker.
LinearFormProduct build_edge_polynomial(const Transformation& f);

// LCM with exponent max over normalized factors; scalar fixed to 1. Throws
// ZeroProductError if either input is identically zero.
LinearFormProduct lcm(const LinearFormProduct& f, const LinearFormProduct& g);

// True iff the product contains every pair factor of the vertex Vandermonde
// (then non-injective lattice points are all roots).
bool contains_vertex_vandermonde(const LinearFormProduct& p, int n);

}  // namespace grace
