#pragma once

/**
 * @file automorphism.hpp
 * @brief The full automorphism group of a small enumerated group.
 *
 * Automorphisms are found by backtracking over the images of a fixed ordered
 * generating sequence. A candidate image must have the same element order as
 * its generator, and each prefix of the assignment must extend to an injective
 * partial homomorphism on the subgroup generated by that prefix. A complete
 * assignment therefore determines a unique automorphism.
 */

#include <algorithm>
#include <limits>
#include <vector>

#include "lhm/finite_group.hpp"

namespace lhm {

inline constexpr std::size_t kDefaultAutGroupCap = 2048;

class GroupAutomorphism {
 public:
  GroupAutomorphism(FiniteGroup group, std::vector<elem_t> map)
      : group_(std::move(group)), map_(std::move(map)) {}

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<elem_t>& map() const noexcept { return map_; }
  elem_t operator()(elem_t i) const { return map_[i]; }

  /// Apply this, then other.
  GroupAutomorphism then(const GroupAutomorphism& other) const {
    std::vector<elem_t> m(map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = other.map_[map_[i]];
    return GroupAutomorphism(group_, std::move(m));
  }

  GroupAutomorphism inverse() const {
    std::vector<elem_t> m(map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[map_[i]] = static_cast<elem_t>(i);
    return GroupAutomorphism(group_, std::move(m));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (map_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    return same_group(a.group_, b.group_) && a.map_ == b.map_;
  }

 private:
  FiniteGroup group_;
  std::vector<elem_t> map_;
};

/// Greedy generating sequence: repeatedly adds the element that enlarges the
/// generated subgroup the most, breaking ties by smallest index.
inline std::vector<elem_t> generating_sequence(const FiniteGroup& g) {
  std::vector<elem_t> gens;
  if (g.order() == 1) return gens;
  ElementSet current = ElementSet::of(g, {FiniteGroup::identity()});
  while (current.size() < g.order()) {
    elem_t best = 0;
    std::size_t best_size = 0;
    for (elem_t x = 1; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      std::size_t size = generated_subgroup(g, trial).size();
      if (size > best_size) {
        best = x;
        best_size = size;
        if (size == g.order()) break;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

namespace detail {

class AutSearch {
 public:
  explicit AutSearch(const FiniteGroup& g) : g_(g), gens_(generating_sequence(g)) {
    images_.resize(gens_.size());
  }

  std::vector<std::vector<elem_t>> run() {
    if (gens_.empty()) return {{FiniteGroup::identity()}};
    recurse(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  static constexpr elem_t kUnset = std::numeric_limits<elem_t>::max();

  // Builds the homomorphism on <gens_[0..level]> induced by images_[0..level];
  // false if it is not well defined or not injective.
  bool extend(std::size_t level, std::vector<elem_t>& map) const {
    const std::size_t n = g_.order();
    map.assign(n, kUnset);
    std::vector<bool> used(n, false);
    std::vector<elem_t> queue{FiniteGroup::identity()};
    map[FiniteGroup::identity()] = FiniteGroup::identity();
    used[FiniteGroup::identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const elem_t x = queue[head];
      for (std::size_t k = 0; k <= level; ++k) {
        const elem_t y = g_.mul(x, gens_[k]);
        const elem_t yi = g_.mul(map[x], images_[k]);
        if (map[y] == kUnset) {
          if (used[yi]) return false;
          map[y] = yi;
          used[yi] = true;
          queue.push_back(y);
        } else if (map[y] != yi) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t level) {
    const elem_t gen = gens_[level];
    std::vector<elem_t> map;
    for (elem_t cand = 0; cand < g_.order(); ++cand) {
      if (g_.element_order(cand) != g_.element_order(gen)) continue;
      images_[level] = cand;
      if (!extend(level, map)) continue;
      if (level + 1 == gens_.size()) {
        results_.push_back(map);
      } else {
        recurse(level + 1);
      }
    }
  }

  const FiniteGroup& g_;
  std::vector<elem_t> gens_;
  std::vector<elem_t> images_;
  std::vector<std::vector<elem_t>> results_;
};

}  // namespace detail

/// Cached maps of every automorphism, sorted lexicographically (identity first).
inline const std::vector<std::vector<elem_t>>& automorphism_maps(
    const FiniteGroup& g, std::size_t cap = kDefaultAutGroupCap) {
  if (g.order() > cap) {
    throw Error(ErrorKind::GroupTooLargeForAut,
                "group of order " + std::to_string(g.order()) +
                    " exceeds automorphism cap " + std::to_string(cap));
  }
  const auto& data = g.data();
  std::call_once(data.aut_once, [&] { data.aut_maps = detail::AutSearch(g).run(); });
  return data.aut_maps;
}

inline std::vector<GroupAutomorphism> automorphism_group(
    const FiniteGroup& g, std::size_t cap = kDefaultAutGroupCap) {
  std::vector<GroupAutomorphism> out;
  for (const auto& m : automorphism_maps(g, cap)) out.emplace_back(g, m);
  return out;
}

inline bool is_homomorphism(const FiniteGroup& g, const std::vector<elem_t>& map) {
  for (elem_t i = 0; i < g.order(); ++i) {
    for (elem_t j = 0; j < g.order(); ++j) {
      if (map[g.mul(i, j)] != g.mul(map[i], map[j])) return false;
    }
  }
  return true;
}

}  // namespace lhm
