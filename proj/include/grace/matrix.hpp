#pragma once

#include <cstdint>
#include <vector>

#include "grace/numeric.hpp"
#include "grace/transformation.hpp"

namespace grace {

// Dense square integer matrix, sized for n <= ~12.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(size * size, 0) {}

  std::int64_t& at(int i, int j) { return a[i * n + j]; }
  std::int64_t at(int i, int j) const { return a[i * n + j]; }

  static IntMatrix identity(int n);

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

// Adjacency matrix of the functional graph G_f: entry [i][j] = 1 iff j = f(i).
IntMatrix adjacency_matrix(const Transformation& f);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(const IntMatrix& m);

// Dense square matrix of exact rationals.
struct RationalMatrix {
  int n = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  explicit RationalMatrix(int size) : n(size), a(size * size) {}
  explicit RationalMatrix(const IntMatrix& m);

  Rational& at(int i, int j) { return a[i * n + j]; }
  const Rational& at(int i, int j) const { return a[i * n + j]; }

  static RationalMatrix identity(int n);

  bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);

// Exact inverse via Gauss-Jordan; throws SingularMatrixError (message carries
// the determinant, computed fraction-free) when singular.
RationalMatrix inverse(const IntMatrix& m);

// Functional digraph of f: vertex set Z_n, one out-edge (i, f(i)) per vertex.
struct FunctionalGraph {
  Transformation f;
  IntMatrix adjacency;

  explicit FunctionalGraph(Transformation map)
      : f(std::move(map)), adjacency(adjacency_matrix(f)) {}

  int n() const { return f.n(); }
  std::vector<std::pair<int, int>> edges() const;
};

// Checks (A_f - I)(A_f + I) == A_{f^(2)} - I and A_f^2 == A_{f^(2)} exactly
// over the integers.
bool adjacency_algebra_check(const Transformation& f);

// Exact rational inverse of A_f + I. For semigroup members additionally
// verifies det(A_f + I) = 2 by fraction-free elimination.
RationalMatrix inverse_a_plus_i(const Transformation& f);

}  // namespace grace
