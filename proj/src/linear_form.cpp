#include "grace/linear_form.hpp"

#include <cassert>
#include <numeric>

#include "grace/errors.hpp"

namespace grace {

bool LinearForm::is_zero() const {
  if (constant != 0) return false;
  for (std::int64_t c : coeffs)
    if (c != 0) return false;
  return true;
}

std::pair<LinearForm, std::int64_t> LinearForm::normalized() const {
  LinearForm norm = *this;
  std::int64_t g = 0;
  std::int64_t first_nonzero = 0;
  for (std::int64_t c : coeffs) {
    g = std::gcd(g, c);
    if (first_nonzero == 0) first_nonzero = c;
  }
  g = std::gcd(g, constant);
  if (first_nonzero == 0) first_nonzero = constant;
  if (g == 0) return {norm, 0};
  std::int64_t scalar = (first_nonzero < 0) ? -g : g;
  for (std::int64_t& c : norm.coeffs) c /= scalar;
  norm.constant /= scalar;
  return {norm, scalar};
}

BigInt LinearForm::evaluate(const std::vector<int>& point) const {
  assert(point.size() == coeffs.size());
  std::int64_t acc = constant;  // |coeffs| and |point| are tiny; no overflow
  for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * point[j];
  return acc;
}

Rational LinearForm::evaluate(const std::vector<Rational>& point) const {
  assert(point.size() == coeffs.size());
  Rational acc = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) acc += Rational(coeffs[j]) * point[j];
  return acc;
}

LinearForm LinearForm::permuted(const std::vector<int>& sigma) const {
  LinearForm out;
  out.constant = constant;
  out.coeffs.assign(coeffs.size(), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    out.coeffs[sigma[j]] = coeffs[j];
  return out;
}

LinearForm difference_form(const Transformation& f, int j, int n) {
  LinearForm d;
  d.coeffs.assign(n, 0);
  d.coeffs[f(j)] += 1;
  d.coeffs[j] -= 1;
  return d;
}

LinearForm pair_difference_form(int a, int b, int n) {
  LinearForm d;
  d.coeffs.assign(n, 0);
  d.coeffs[b] += 1;
  d.coeffs[a] -= 1;
  return d;
}

LinearFormProduct LinearFormProduct::one(int num_vars) {
  LinearFormProduct p;
  p.num_vars = num_vars;
  return p;
}

int LinearFormProduct::total_degree() const {
  int deg = 0;
  for (const auto& [form, exp] : factors) deg += exp;
  return deg;
}

void LinearFormProduct::multiply_form(const LinearForm& raw, int exponent) {
  assert(exponent >= 1);
  auto [norm, scalar] = raw.normalized();
  if (scalar == 0) {
    this->scalar = 0;
    ++zero_markers;
    return;
  }
  if (is_zero()) {
    // already identically zero; factor bookkeeping stops mattering
    return;
  }
  Rational s = scalar;
  for (int e = 0; e < exponent; ++e) this->scalar *= s;
  factors[norm] += exponent;
}

void LinearFormProduct::multiply(const LinearFormProduct& other) {
  assert(num_vars == other.num_vars);
  scalar *= other.scalar;
  zero_markers += other.zero_markers;
  if (is_zero()) return;
  for (const auto& [form, exp] : other.factors) factors[form] += exp;
}

Rational LinearFormProduct::evaluate(const std::vector<int>& point) const {
  if (is_zero()) return 0;
  BigInt acc = 1;
  for (const auto& [form, exp] : factors) {
    const BigInt v = form.evaluate(point);
    if (v == 0) return 0;
    for (int e = 0; e < exp; ++e) acc *= v;
  }
  return scalar * Rational(acc);
}

Rational LinearFormProduct::evaluate(const std::vector<Rational>& point) const {
  if (is_zero()) return 0;
  Rational acc = scalar;
  for (const auto& [form, exp] : factors) {
    const Rational v = form.evaluate(point);
    if (v == 0) return 0;
    for (int e = 0; e < exp; ++e) acc *= v;
  }
  return acc;
}

bool LinearFormProduct::vanishes_at(const std::vector<int>& point) const {
  if (is_zero()) return true;
  for (const auto& [form, exp] : factors)
    if (form.evaluate(point) == 0) return true;
  return false;
}

std::string LinearFormProduct::dump() const {
  std::string out;
  if (is_zero()) {
    out = "scalar 0 (" + std::to_string(zero_markers) + " zero markers)\n";
    return out;
  }
  if (scalar != 1) out += "scalar " + to_string(scalar) + "\n";
  for (const auto& [form, exp] : factors) {
    out += std::to_string(exp) + " * (";
    for (std::size_t j = 0; j < form.coeffs.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(form.coeffs[j]);
    }
    out += " | " + std::to_string(form.constant) + ")\n";
  }
  return out;
}

LinearFormProduct build_vertex_vandermonde(int n) {
  if (n < 2) throw DomainSizeError("vertex Vandermonde requires n >= 2");
  LinearFormProduct p = LinearFormProduct::one(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.multiply_form(pair_difference_form(i, j, n));
  return p;
}

LinearFormProduct build_edge_polynomial(const Transformation& f) {
  const int n = f.n();
  if (n < 2) throw DomainSizeError("edge polynomial requires n >= 2");
  std::vector<LinearForm> d;
  d.reserve(n);
  for (int j = 0; j < n; ++j) d.push_back(difference_form(f, j, n));
  LinearFormProduct p = LinearFormProduct::one(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LinearForm diff = d[j];
      LinearForm sum = d[j];
      for (int k = 0; k < n; ++k) {
        diff.coeffs[k] -= d[i].coeffs[k];
        sum.coeffs[k] += d[i].coeffs[k];
      }
      p.multiply_form(diff);
      p.multiply_form(sum);
    }
  return p;
}

LinearFormProduct lcm(const LinearFormProduct& f, const LinearFormProduct& g) {
  if (f.is_zero() || g.is_zero())
    throw ZeroProductError("lcm is undefined for identically-zero products");
  assert(f.num_vars == g.num_vars);
  LinearFormProduct out = LinearFormProduct::one(f.num_vars);
  out.factors = f.factors;
  for (const auto& [form, exp] : g.factors) {
    auto it = out.factors.find(form);
    if (it == out.factors.end())
      out.factors[form] = exp;
    else
      it->second = std::max(it->second, exp);
  }
  return out;
}

bool contains_vertex_vandermonde(const LinearFormProduct& p, int n) {
  if (p.is_zero()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto [norm, scalar] = pair_difference_form(i, j, n).normalized();
      if (p.factors.find(norm) == p.factors.end()) return false;
    }
  return true;
}

}  // namespace grace
