#include "grace/matrix.hpp"

#include <cassert>
#include <utility>

#include "grace/errors.hpp"

namespace grace {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  assert(x.n == y.n);
  IntMatrix r(x.n);
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  assert(x.n == y.n);
  IntMatrix r(x.n);
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  assert(x.n == y.n);
  IntMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

IntMatrix adjacency_matrix(const Transformation& f) {
  IntMatrix m(f.n());
  for (int i = 0; i < f.n(); ++i) m.at(i, f(i)) = 1;
  return m;
}

BigInt bareiss_determinant(const IntMatrix& m) {
  const int n = m.n;
  if (n == 0) return 1;
  std::vector<BigInt> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> BigInt& { return w[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.n) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = m.a[k];
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  assert(x.n == y.n);
  RationalMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

RationalMatrix inverse(const IntMatrix& m) {
  const int n = m.n;
  RationalMatrix w(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && w.at(pivot, col) == 0) ++pivot;
    if (pivot == n)
      throw SingularMatrixError("matrix is singular (det = " +
                                to_string(bareiss_determinant(m)) + ")");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational p = w.at(col, col);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col) == 0) continue;
      const Rational factor = w.at(i, col);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= factor * w.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::pair<int, int>> FunctionalGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(n());
  for (int i = 0; i < n(); ++i) e.emplace_back(i, f(i));
  return e;
}

bool adjacency_algebra_check(const Transformation& f) {
  const IntMatrix a = adjacency_matrix(f);
  const IntMatrix id = IntMatrix::identity(f.n());
  const IntMatrix a2 = adjacency_matrix(iterate(f, 2));
  return (a - id) * (a + id) == a2 - id && a * a == a2;
}

RationalMatrix inverse_a_plus_i(const Transformation& f) {
  const IntMatrix s = adjacency_matrix(f) + IntMatrix::identity(f.n());
  if (is_semigroup_member(f)) {
    const BigInt det = bareiss_determinant(s);
    if (det != 2)
      throw SingularMatrixError("det(A+I) = " + to_string(det) +
                                " for semigroup member; expected 2");
  }
  return inverse(s);
}

}  // namespace grace
