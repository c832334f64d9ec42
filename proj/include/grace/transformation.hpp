#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "grace/numeric.hpp"

namespace grace {

// Total self-map of Z_n = {0, ..., n-1}, stored as its image sequence.
struct Transformation {
  std::vector<int> images;  // images[i] = f(i), each in [0, n)

  Transformation() = default;

  // Validates that every image lies in [0, n); throws ParseError otherwise.
  static Transformation from_images(std::vector<int> images);
  static Transformation identity(int n);

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }

  bool operator==(const Transformation&) const = default;
  bool operator<(const Transformation& other) const { return images < other.images; }

  // Comma-separated decimal images, e.g. "0,0,1".
  std::string to_literal() const;
};

// h(i) = f(g(i)), right-to-left application. Throws DomainSizeError on
// mismatched domain sizes.
Transformation compose(const Transformation& f, const Transformation& g);

// f^(k) by repeated squaring; iterate(f, 0) is the identity.
Transformation iterate(const Transformation& f, std::uint64_t k);

// Membership in the semigroup {h : h^(n-1)(Z_n) = {0}, h(i) <= i}. The
// pointwise test below is equivalent: h(i) <= i for all i forces every
// iterate chain to be non-increasing, and h^(n-1) == 0 then holds exactly
// when 0 is the only fixed point, i.e. h(0) = 0 and h(i) < i for i >= 1.
// (If h(i) = i for some i > 0, the chain sticks at i forever; conversely a
// strictly decreasing chain from any i reaches 0 in at most i <= n-1 steps.)
bool is_semigroup_member(const Transformation& f);

// All (n-1)! semigroup members, in lexicographic order of image sequences.
std::vector<Transformation> enumerate_semigroup(int n);
void for_each_semigroup_member(int n, const std::function<void(const Transformation&)>& fn);

// sigma f sigma^(-1) for a permutation sigma given as an image sequence.
Transformation conjugate(const std::vector<int>& sigma, const Transformation& f);

Transformation random_transformation(int n, Rng& rng);

}  // namespace grace
