#pragma once

/**
 * @file finite_group.hpp
 * @brief Fully enumerated permutation groups and their element sets.
 *
 * A FiniteGroup is built by closure from permutation generators. Elements are
 * stored sorted by image sequence, so the identity has index 0 and every index
 * is reproducible across runs. Subsets of the group (subgroups, cosets, product
 * sets) are bitsets over these indices.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lhm/bitset.hpp"
#include "lhm/error.hpp"
#include "lhm/permutation.hpp"

namespace lhm {

using elem_t = std::uint32_t;

inline constexpr std::size_t kDefaultGroupOrderCap = 200000;
inline constexpr std::size_t kMulTableLimit = 4096;

/// Closure cap, overridable through LHM_MAX_GROUP_ORDER.
inline std::size_t default_group_order_cap() {
  if (const char* env = std::getenv("LHM_MAX_GROUP_ORDER")) {
    try {
      std::size_t value = std::stoul(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultGroupOrderCap;
}

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, elem_t, PermutationHash> index;
  std::vector<elem_t> mul_table;  // empty when |G| > kMulTableLimit
  std::vector<elem_t> inverse;
  std::vector<std::uint32_t> order;
  std::vector<elem_t> generators;

  // Automorphism list, computed at most once and then frozen.
  mutable std::once_flag aut_once;
  mutable std::vector<std::vector<elem_t>> aut_maps;
};

}  // namespace detail

class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup closure(const std::vector<Permutation>& generators,
                             std::size_t cap = default_group_order_cap()) {
    if (generators.empty()) {
      throw Error(ErrorKind::BadParameter, "closure needs at least one generator");
    }
    const std::size_t degree = generators.front().degree();
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw Error(ErrorKind::DegreeMismatch,
                    "generators have degrees " + std::to_string(degree) + " and " +
                        std::to_string(g.degree()));
      }
    }

    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> found;
    Permutation id(degree);
    seen.insert(id);
    found.push_back(id);
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const auto& s : generators) {
        Permutation next = found[head] * s;
        if (seen.insert(next).second) {
          found.push_back(std::move(next));
          if (found.size() > cap) {
            throw Error(ErrorKind::GroupTooLarge,
                        "group order exceeds cap " + std::to_string(cap));
          }
        }
      }
    }
    std::sort(found.begin(), found.end());

    auto data = std::make_shared<detail::GroupData>();
    data->degree = degree;
    data->elements = std::move(found);
    const std::size_t n = data->elements.size();
    data->index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      data->index.emplace(data->elements[i], static_cast<elem_t>(i));
    }
    if (n <= kMulTableLimit) {
      data->mul_table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          data->mul_table[i * n + j] = data->index.at(data->elements[i] * data->elements[j]);
        }
      }
    }
    data->inverse.resize(n);
    data->order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      data->inverse[i] = data->index.at(data->elements[i].inverse());
      data->order[i] = static_cast<std::uint32_t>(data->elements[i].order());
    }
    for (const auto& g : generators) {
      data->generators.push_back(data->index.at(g));
    }
    FiniteGroup group;
    group.data_ = std::move(data);
    return group;
  }

  bool valid() const noexcept { return data_ != nullptr; }
  std::size_t degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  const Permutation& element(elem_t i) const { return data_->elements[i]; }
  const std::vector<Permutation>& elements() const noexcept { return data_->elements; }
  const std::vector<elem_t>& generators() const noexcept { return data_->generators; }
  static constexpr elem_t identity() noexcept { return 0; }

  elem_t mul(elem_t a, elem_t b) const {
    const std::size_t n = order();
    if (!data_->mul_table.empty()) return data_->mul_table[a * n + b];
    return data_->index.at(data_->elements[a] * data_->elements[b]);
  }
  elem_t inv(elem_t a) const { return data_->inverse[a]; }
  std::uint32_t element_order(elem_t a) const { return data_->order[a]; }
  bool has_mul_table() const noexcept { return !data_->mul_table.empty(); }

  elem_t pow(elem_t a, std::size_t e) const {
    elem_t result = identity();
    for (std::size_t i = 0; i < e; ++i) result = mul(result, a);
    return result;
  }

  std::optional<elem_t> index_of(const Permutation& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  void check_index(elem_t i) const {
    if (i >= order()) {
      throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(i) +
                                                  " outside group of order " +
                                                  std::to_string(order()));
    }
  }

  const detail::GroupData& data() const noexcept { return *data_; }

  friend bool same_group(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

inline std::uint32_t element_order(const FiniteGroup& g, elem_t i) {
  g.check_index(i);
  return g.element_order(i);
}

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(FiniteGroup group)
      : group_(std::move(group)), members_(group_.order()) {}
  ElementSet(FiniteGroup group, Bitset members)
      : group_(std::move(group)), members_(std::move(members)) {}

  static ElementSet of(const FiniteGroup& group, std::initializer_list<elem_t> elems) {
    ElementSet s(group);
    for (elem_t e : elems) {
      group.check_index(e);
      s.insert(e);
    }
    return s;
  }
  static ElementSet whole(const FiniteGroup& group) {
    ElementSet s(group);
    for (elem_t i = 0; i < group.order(); ++i) s.insert(i);
    return s;
  }

  const FiniteGroup& group() const noexcept { return group_; }
  const Bitset& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(elem_t i) const noexcept { return members_.test(i); }
  void insert(elem_t i) noexcept { members_.set(i); }
  std::vector<elem_t> to_vector() const { return members_.to_vector(); }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    return members_.is_subset_of(other.members_);
  }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    return ElementSet(a.group_, a.members_ & b.members_);
  }
  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    return ElementSet(a.group_, a.members_ | b.members_);
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return same_group(a.group_, b.group_) && a.members_ == b.members_;
  }

  void check_same(const ElementSet& other) const {
    if (!same_group(group_, other.group_)) {
      throw Error(ErrorKind::GroupMismatch, "element sets belong to different groups");
    }
  }

 private:
  FiniteGroup group_;
  Bitset members_;
};

/// Closure of `seeds` inside an already enumerated group.
inline ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<elem_t>& seeds) {
  if (seeds.empty()) {
    throw Error(ErrorKind::BadParameter, "generated_subgroup needs at least one seed");
  }
  for (elem_t s : seeds) g.check_index(s);
  ElementSet result(g);
  std::vector<elem_t> queue{FiniteGroup::identity()};
  result.insert(FiniteGroup::identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (elem_t s : seeds) {
      elem_t next = g.mul(queue[head], s);
      if (!result.contains(next)) {
        result.insert(next);
        queue.push_back(next);
      }
    }
  }
  return result;
}

inline bool is_subgroup(const ElementSet& h) {
  const auto& g = h.group();
  if (!h.contains(FiniteGroup::identity())) return false;
  auto elems = h.to_vector();
  for (elem_t a : elems) {
    for (elem_t b : elems) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

inline void require_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!same_group(g, h.group())) {
    throw Error(ErrorKind::GroupMismatch, "subset belongs to a different group");
  }
  if (!is_subgroup(h)) {
    throw Error(ErrorKind::NotASubgroup, "element set is not closed under multiplication");
  }
}

inline std::size_t subgroup_index(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  return g.order() / h.size();
}

/// {a * b : a in A, b in B}
inline ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  a.check_same(b);
  const auto& g = a.group();
  ElementSet result(g);
  auto bs = b.to_vector();
  a.members().for_each([&](std::size_t x) {
    for (elem_t y : bs) result.insert(g.mul(static_cast<elem_t>(x), y));
  });
  return result;
}

/// x^-1 * H * x
inline ElementSet conjugate(const ElementSet& h, elem_t x) {
  const auto& g = h.group();
  ElementSet result(g);
  const elem_t xi = g.inv(x);
  h.members().for_each([&](std::size_t y) {
    result.insert(g.mul(g.mul(xi, static_cast<elem_t>(y)), x));
  });
  return result;
}

/// Intersection of all conjugates of H; the largest normal subgroup inside H.
inline ElementSet normal_core(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  ElementSet core = h;
  for (elem_t x = 0; x < g.order() && core.size() > 1; ++x) {
    core = core & conjugate(h, x);
  }
  return core;
}

inline bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  for (elem_t s : g.generators()) {
    if (!(conjugate(h, s) == h)) return false;
  }
  return true;
}

}  // namespace lhm
