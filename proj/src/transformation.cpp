#include "grace/transformation.hpp"

#include <numeric>

#include "grace/errors.hpp"

namespace grace {

Transformation Transformation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw ParseError("transformation must have at least one image");
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n)
      throw ParseError("image " + std::to_string(images[i]) +
                       " at index " + std::to_string(i) + " out of range for n=" +
                       std::to_string(n));
  }
  Transformation f;
  f.images = std::move(images);
  return f;
}

Transformation Transformation::identity(int n) {
  Transformation f;
  f.images.resize(n);
  std::iota(f.images.begin(), f.images.end(), 0);
  return f;
}

std::string Transformation::to_literal() const {
  std::string s;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images[i]);
  }
  return s;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.n() != g.n())
    throw DomainSizeError("compose: domain sizes differ (" + std::to_string(f.n()) +
                          " vs " + std::to_string(g.n()) + ")");
  Transformation h;
  h.images.resize(g.images.size());
  for (int i = 0; i < g.n(); ++i) h.images[i] = f(g(i));
  return h;
}

Transformation iterate(const Transformation& f, std::uint64_t k) {
  Transformation result = Transformation::identity(f.n());
  Transformation base = f;
  while (k > 0) {
    if (k & 1) result = compose(base, result);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

bool is_semigroup_member(const Transformation& f) {
  if (f(0) != 0) return false;
  for (int i = 1; i < f.n(); ++i)
    if (f(i) >= i) return false;
  return true;
}

void for_each_semigroup_member(int n, const std::function<void(const Transformation&)>& fn) {
  if (n < 1) throw DomainSizeError("semigroup enumeration requires n >= 1");
  // Odometer over the choices f(i) in {0, ..., i-1}, f(0) = 0; lexicographic
  // order of image sequences coincides with odometer order.
  std::vector<int> images(n, 0);
  Transformation f;
  for (;;) {
    f.images = images;
    fn(f);
    int i = n - 1;
    while (i >= 1 && images[i] == i - 1) {
      images[i] = 0;
      --i;
    }
    if (i < 1) break;
    ++images[i];
  }
}

std::vector<Transformation> enumerate_semigroup(int n) {
  std::vector<Transformation> out;
  out.reserve(factorial(n > 0 ? n - 1 : 0));
  for_each_semigroup_member(n, [&](const Transformation& f) { out.push_back(f); });
  return out;
}

Transformation conjugate(const std::vector<int>& sigma, const Transformation& f) {
  const int n = f.n();
  std::vector<int> inv(sigma.size());
  for (int i = 0; i < n; ++i) inv[sigma[static_cast<std::size_t>(i)]] = i;
  Transformation g;
  g.images.resize(n);
  for (int i = 0; i < n; ++i)
    g.images[i] = sigma[f(inv[static_cast<std::size_t>(i)])];
  return g;
}

Transformation random_transformation(int n, Rng& rng) {
  Transformation f;
  f.images.resize(n);
  for (int i = 0; i < n; ++i) f.images[i] = rng.below(n);
  return f;
}

}  // namespace grace
