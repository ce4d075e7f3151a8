#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dident {

// Permutation of the points {1..degree}. Products read left to right: in
// a * b the left factor acts first, so (a * b)(i) = b(a(i)).
class Perm {
public:
  Perm() = default;

  // Identity of the given degree.
  explicit Perm(std::size_t degree);

  // images[i] is the image of point i + 1, stored 0-based.
  Perm(std::size_t degree, std::vector<std::uint32_t> images);

  // Parses cycle notation: "(1 2 3)(4 5)", "(1,2,3)" or the compact "(123)(45)"
  // (compact form only when every point is a single digit). "()" is the
  // identity. A degree of 0 means "largest point mentioned".
  static Perm parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }

  // Image of a 1-based point.
  std::uint32_t operator()(std::uint32_t point) const { return images_[point - 1] + 1; }

  std::span<const std::uint32_t> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;

  // Disjoint cycles of length >= 2, 1-based, each starting at its least point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  // Cycle notation with space-separated points; "()" for the identity.
  std::string str() const;

  // Same permutation on a larger point set.
  Perm extended(std::size_t degree) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint32_t> images_;
};

// i -> b(a(i)); throws std::invalid_argument on degree mismatch.
Perm perm_compose(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace dident
