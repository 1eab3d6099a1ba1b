#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations on {1..n} and disjoint-cycle notation.
 *
 * Points are 1-based in text and 0-based in storage. Products act on the
 * right: `(p * q)(x) == q(p(x))`, so `p * q` means "apply p, then q". All
 * group arithmetic in the library follows this convention.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhm/error.hpp"

namespace lhm {

using point_t = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_t{0});
  }

  /// Takes 0-based images; throws if they do not form a bijection.
  explicit Permutation(std::vector<point_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point_t x : images_) {
      if (x >= images_.size()) {
        throw Error(ErrorKind::PointOutOfRange,
                    "image " + std::to_string(x + 1) + " exceeds degree " +
                        std::to_string(images_.size()));
      }
      if (seen[x]) {
        throw Error(ErrorKind::RepeatedPoint,
                    "image " + std::to_string(x + 1) + " appears twice");
      }
      seen[x] = true;
    }
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator()(point_t x) const { return images_[x]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  bool has_fixed_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] == i) return true;
    }
    return false;
  }

  Permutation inverse() const {
    Permutation result(degree());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      result.images_[images_[i]] = static_cast<point_t>(i);
    }
    return result;
  }

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.degree() != rhs.degree()) {
      throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of degree " +
                                                 std::to_string(lhs.degree()) + " and " +
                                                 std::to_string(rhs.degree()));
    }
    Permutation result(lhs.degree());
    for (std::size_t i = 0; i < lhs.images_.size(); ++i) {
      result.images_[i] = rhs.images_[lhs.images_[i]];
    }
    return result;
  }

  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t x = i; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Adds `extra` fixed points at the end.
  Permutation extended(std::size_t extra) const {
    std::vector<point_t> img(images_);
    for (std::size_t i = 0; i < extra; ++i) {
      img.push_back(static_cast<point_t>(images_.size() + i));
    }
    Permutation result;
    result.images_ = std::move(img);
    return result;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) {
    return lhs.images_ <=> rhs.images_;
  }

 private:
  std::vector<point_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    // FNV-1a over the image sequence
    std::uint64_t h = 1469598103934665603ULL;
    for (point_t x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Disjoint-cycle string, 1-based, fixed points omitted; identity is "()".
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (point_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (point_t x = i; !seen[x]; x = p(x)) {
      seen[x] = true;
      if (x != i) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses disjoint-cycle notation such as "(1 2)(3 5)". Whitespace and commas
/// inside cycles separate points; "()" and "id" denote the identity. Cycles need
/// not be disjoint textually but a point may appear only once overall.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<point_t> images(degree);
  std::iota(images.begin(), images.end(), point_t{0});
  std::vector<bool> used(degree, false);

  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "id") return Permutation(degree);
  if (trimmed.empty()) {
    throw Error(ErrorKind::MalformedCycle, "empty permutation text");
  }

  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::MalformedCycle,
                msg + " at column " + std::to_string(pos + 1) + " in \"" +
                    std::string(text) + "\"");
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    ++pos;
    std::vector<point_t> cycle;
    bool closed = false;
    while (pos < text.size()) {
      c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos;
      } else if (c == ')') {
        ++pos;
        closed = true;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        auto token = text.substr(start, pos - start);
        if (token.size() > 9) fail("point too large");
        std::size_t value = std::stoul(std::string(token));
        if (value == 0 || value > degree) {
          throw Error(ErrorKind::PointOutOfRange,
                      "point " + std::string(token) + " outside 1.." +
                          std::to_string(degree));
        }
        point_t x = static_cast<point_t>(value - 1);
        if (used[x]) {
          throw Error(ErrorKind::RepeatedPoint,
                      "point " + std::string(token) + " appears more than once");
        }
        used[x] = true;
        cycle.push_back(x);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (!closed) fail("unclosed cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace lhm
