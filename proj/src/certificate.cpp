#include "grace/certificate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>

#include "grace/errors.hpp"
#include "grace/matrix.hpp"

namespace grace {

namespace {

// Odometer over (Z_n)^n in lexicographic order; fn returns true to stop.
bool scan_lattice(int n, const std::function<bool(const LatticePoint&)>& fn) {
  LatticePoint p(n, 0);
  for (;;) {
    if (fn(p)) return true;
    int i = n - 1;
    while (i >= 0 && p[i] == n - 1) {
      p[i] = 0;
      --i;
    }
    if (i < 0) return false;
    ++p[i];
  }
}

}  // namespace

std::pair<bool, std::optional<LatticePoint>> canonical_rep_is_nonzero(
    const LinearFormProduct& p, int n) {
  if (p.is_zero()) return {false, std::nullopt};
  std::optional<LatticePoint> witness;
  if (contains_vertex_vandermonde(p, n)) {
    LatticePoint x(n);
    for (int i = 0; i < n; ++i) x[i] = i;
    do {
      if (!p.vanishes_at(x)) {
        witness = x;
        break;
      }
    } while (std::next_permutation(x.begin(), x.end()));
  } else {
    scan_lattice(n, [&](const LatticePoint& x) {
      if (!p.vanishes_at(x)) {
        witness = x;
        return true;
      }
      return false;
    });
  }
  return {witness.has_value(), witness};
}

std::pair<bool, std::optional<Labeling>> determinantal_certificate(
    const Transformation& f, int max_n) {
  const int n = f.n();
  if (n > max_n)
    throw SizeCapError("certificate: n=" + std::to_string(n) + " exceeds max_n=" +
                       std::to_string(max_n));
  if (n == 1) return {true, Labeling::from_values({0})};
  const LinearFormProduct edge = build_edge_polynomial(f);
  if (edge.is_zero()) return {false, std::nullopt};
  const LinearFormProduct cert = lcm(build_vertex_vandermonde(n), edge);
  auto [nonzero, point] = canonical_rep_is_nonzero(cert, n);
  if (!nonzero) return {false, std::nullopt};
  return {true, Labeling::from_values(*point)};
}

bool subset_certificate(const Transformation& f, int m, int max_n) {
  const int n = f.n();
  if (m < 2 || m > n)
    throw ParseError("subset_certificate: m=" + std::to_string(m) +
                     " out of range (1, " + std::to_string(n) + "]");
  if (n > max_n)
    throw SizeCapError("subset_certificate: n=" + std::to_string(n) +
                       " exceeds max_n=" + std::to_string(max_n));
  // Some m-subset of edges has pairwise distinct labels at injective x iff
  // the full label multiset has at least m distinct values.
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = i;
  std::vector<bool> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), false);
    int distinct = 0;
    for (int j = 0; j < n; ++j) {
      const int l = std::abs(x[f(j)] - x[j]);
      if (!seen[l]) {
        seen[l] = true;
        ++distinct;
      }
    }
    if (distinct >= m) return true;
  } while (std::next_permutation(x.begin(), x.end()));
  return false;
}

int max_certified_m(const Transformation& f, int max_n) {
  for (int m = f.n(); m >= 2; --m)
    if (subset_certificate(f, m, max_n)) return m;
  return 1;
}

std::vector<BigInt> power_sum_residuals(const std::vector<long long>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<BigInt> residuals;
  residuals.reserve(n);
  std::vector<BigInt> pow_x(x.begin(), x.end());
  std::vector<BigInt> pow_i(n);
  for (int i = 0; i < n; ++i) pow_i[i] = i;
  std::vector<BigInt> cur_x(pow_x), cur_i(pow_i);
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 0; i < n; ++i) acc += cur_x[i] - cur_i[i];
    residuals.push_back(acc);
    if (k < n)
      for (int i = 0; i < n; ++i) {
        cur_x[i] *= pow_x[i];
        cur_i[i] *= pow_i[i];
      }
  }
  return residuals;
}

namespace {

// Raw signed factor list of P_f = prod over ordered pairs (i, j), i != j, of
// (x_j - x_i) * (d_j - d_i) * (d_j + d_i), d_k = x_{f(k)} - x_k. Signs stay
// attached to the factor occurrences; only the list is sorted.
std::vector<LinearForm> raw_p_factors(const Transformation& f) {
  const int n = f.n();
  std::vector<LinearForm> d;
  d.reserve(n);
  for (int k = 0; k < n; ++k) d.push_back(difference_form(f, k, n));
  std::vector<LinearForm> out;
  out.reserve(3 * n * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back(pair_difference_form(i, j, n));
      LinearForm diff = d[j];
      LinearForm sum = d[j];
      for (int k = 0; k < n; ++k) {
        diff.coeffs[k] -= d[i].coeffs[k];
        sum.coeffs[k] += d[i].coeffs[k];
      }
      out.push_back(std::move(diff));
      out.push_back(std::move(sum));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool stabilizer_check(const Transformation& f, const Permutation& sigma) {
  std::vector<LinearForm> base = raw_p_factors(f);
  std::vector<LinearForm> permuted;
  permuted.reserve(base.size());
  for (const LinearForm& form : base) permuted.push_back(form.permuted(sigma));
  std::sort(permuted.begin(), permuted.end());
  return base == permuted;
}

BigInt p_poly_value(const Transformation& g, const std::vector<int>& x) {
  const int n = g.n();
  std::vector<BigInt> d(n);
  for (int k = 0; k < n; ++k)
    d[k] = BigInt(x[g(k)]) - x[k];
  std::vector<BigInt> dd(n);
  for (int k = 0; k < n; ++k) dd[k] = d[k] * d[k];
  BigInt acc = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      acc *= BigInt(x[j]) - x[i];
      if (acc == 0) return acc;
      acc *= dd[j] - dd[i];
      if (acc == 0) return acc;
    }
  return acc;
}

Rational p_poly_value(const Transformation& g, const std::vector<Rational>& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::lcm;
  const int n = g.n();
  BigInt den = 1;
  for (const Rational& v : x) den = lcm(den, denominator(v));
  std::vector<BigInt> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = numerator(x[i]) *
                                     (den / denominator(x[i]));
  std::vector<BigInt> d(n), dd(n);
  for (int k = 0; k < n; ++k) {
    d[k] = u[g(k)] - u[k];
    dd[k] = d[k] * d[k];
  }
  BigInt acc = 1;
  for (int i = 0; i < n && acc != 0; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      acc *= u[j] - u[i];
      acc *= dd[j] - dd[i];
      if (acc == 0) break;
    }
  if (acc == 0) return 0;
  // P_g is homogeneous of degree 3n(n-1); undo the scaling x -> den * x.
  BigInt scale = 1;
  const int degree = 3 * n * (n - 1);
  for (int e = 0; e < degree; ++e) scale *= den;
  return Rational(acc, scale);
}

Rational orbit_sum_value(const Transformation& f, const std::vector<Permutation>& reps,
                         const std::vector<Rational>& x) {
  Rational acc = 0;
  for (const Permutation& sigma : reps) acc += p_poly_value(conjugate(sigma, f), x);
  return acc;
}

RepDependenceReport rep_dependence_witness(const Transformation& f) {
  const int n = f.n();
  if (n > 4)
    throw SizeCapError("rep_dependence_witness: n=" + std::to_string(n) + " exceeds 4");
  const PermutationGroup aut_f = automorphism_group(f);
  const PermutationGroup aut_f2 = automorphism_group(iterate(f, 2));
  if (!is_strict_subgroup(aut_f, aut_f2))
    throw PremiseError("rep_dependence_witness: Aut(G_f) is not strictly inside Aut(G_f^2)");

  const std::vector<Permutation> reps = left_coset_representatives(aut_f2);
  RepDependenceReport report;
  // A deviation swaps one canonical rep sigma for sigma*h, h in Aut(G_f^2).
  // The orbit sum changes at x iff the two conjugate P-values differ there.
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = i;
  do {
    for (const Permutation& sigma : reps) {
      const BigInt base_value = p_poly_value(conjugate(sigma, f), x);
      for (const Permutation& h : aut_f2.elements) {
        if (h == identity_permutation(n)) continue;
        const Permutation alt = compose_perm(sigma, h);
        const BigInt alt_value = p_poly_value(conjugate(alt, f), x);
        if (alt_value != base_value) {
          report.found = true;
          report.canonical_rep = sigma;
          report.alternative_rep = alt;
          report.point = x;
          report.canonical_value = to_string(base_value);
          report.alternative_value = to_string(alt_value);
          std::string pt;
          for (std::size_t i = 0; i < x.size(); ++i)
            pt += (i ? "," : "") + std::to_string(x[i]);
          report.description = "orbit sum changes at x=(" + pt + "): P value " +
                               report.canonical_value + " -> " + report.alternative_value;
          return report;
        }
      }
    }
  } while (std::next_permutation(x.begin(), x.end()));
  report.description = "all representative choices agree at every permutation point";
  return report;
}

bool substitution_transform_check(const Transformation& f) {
  const IntMatrix a = adjacency_matrix(f);
  const IntMatrix id = IntMatrix::identity(f.n());
  const IntMatrix a2 = adjacency_matrix(iterate(f, 2));
  const RationalMatrix inv = inverse(a + id);
  return RationalMatrix(a2 - id) * inv == RationalMatrix(a - id);
}

}  // namespace grace
