#pragma once

/**
 * @file regular.hpp
 * @brief Regular linear hypermaps as a group plus an involution triple.
 *
 * For a triple (r0, r1, r2) generating G, let H = <r1,r2> (vertex stabilizer),
 * K = <r0,r2> (hyperedge stabilizer) and L = <r0,r1> (hyperface stabilizer).
 * The triple is a regular linear hypermap when H ∩ K = <r2> and
 * HK ∩ KH = H ∪ K. Flags are identified with the elements of G.
 */

#include <array>
#include <compare>
#include <string>
#include <tuple>

#include "lhm/automorphism.hpp"
#include "lhm/finite_group.hpp"
#include "lhm/hypermap.hpp"
#include "lhm/validation.hpp"

namespace lhm {

class InvolutionTriple {
 public:
  InvolutionTriple(FiniteGroup group, elem_t r0, elem_t r1, elem_t r2)
      : group_(std::move(group)), r_{r0, r1, r2} {
    for (int i = 0; i < 3; ++i) {
      group_.check_index(r_[i]);
      if (group_.element_order(r_[i]) != 2) {
        throw Error(ErrorKind::InvalidTriple,
                    "r" + std::to_string(i) + " = " + to_cycles(group_.element(r_[i])) +
                        " is not an involution");
      }
    }
    if (r0 == r1 || r0 == r2 || r1 == r2) {
      throw Error(ErrorKind::InvalidTriple, "triple entries must be pairwise distinct");
    }
  }

  const FiniteGroup& group() const noexcept { return group_; }
  elem_t r0() const noexcept { return r_[0]; }
  elem_t r1() const noexcept { return r_[1]; }
  elem_t r2() const noexcept { return r_[2]; }
  elem_t r(int i) const noexcept { return r_[i]; }
  std::array<elem_t, 3> indices() const noexcept { return {r_[0], r_[1], r_[2]}; }

  /// Componentwise image under an automorphism map.
  InvolutionTriple image(const std::vector<elem_t>& aut) const {
    return InvolutionTriple(group_, aut[r_[0]], aut[r_[1]], aut[r_[2]]);
  }

  std::string to_string() const {
    return to_cycles(group_.element(r_[0])) + ";" + to_cycles(group_.element(r_[1])) + ";" +
           to_cycles(group_.element(r_[2]));
  }

  friend bool operator==(const InvolutionTriple& a, const InvolutionTriple& b) {
    return same_group(a.group_, b.group_) && a.indices() == b.indices();
  }

 private:
  FiniteGroup group_;
  elem_t r_[3];
};

struct MSequence {
  long genus = 0;
  std::size_t k = 0, m = 0, n = 0;
  std::size_t vertices = 0, hyperedges = 0, hyperfaces = 0;
  std::size_t flags = 0;
  bool orientable = false;

  bool proper() const noexcept { return k > 2 && m > 2 && n > 2; }

  /// "[g;k,m,n;V,E,F;N]"
  std::string to_string() const {
    auto s = [](auto v) { return std::to_string(v); };
    return "[" + s(genus) + ";" + s(k) + "," + s(m) + "," + s(n) + ";" + s(vertices) + "," +
           s(hyperedges) + "," + s(hyperfaces) + ";" + s(flags) + "]";
  }

  friend bool operator==(const MSequence&, const MSequence&) = default;
  friend auto operator<=>(const MSequence&, const MSequence&) = default;
};

inline ElementSet dihedral_subgroup(const FiniteGroup& g, elem_t a, elem_t b) {
  return generated_subgroup(g, {a, b});
}

inline ValidationReport validate_regular(const InvolutionTriple& t) {
  const auto& g = t.group();
  ValidationReport report;
  const std::size_t generated = generated_subgroup(g, {t.r0(), t.r1(), t.r2()}).size();
  report.add(std::string(checks::kGenerates), generated == g.order(),
             "|<r0,r1,r2>| = " + std::to_string(generated) + " of " + std::to_string(g.order()));

  auto h = dihedral_subgroup(g, t.r1(), t.r2());
  auto k = dihedral_subgroup(g, t.r0(), t.r2());
  auto expected = ElementSet::of(g, {FiniteGroup::identity(), t.r2()});
  auto hk_meet = h & k;
  report.add(std::string(checks::kStabilizerIntersection), hk_meet == expected,
             "|H ∩ K| = " + std::to_string(hk_meet.size()));

  auto lhs = product_set(h, k) & product_set(k, h);
  report.add(std::string(checks::kLinearity), lhs == (h | k),
             "|HK ∩ KH| = " + std::to_string(lhs.size()) + ", |H ∪ K| = " +
                 std::to_string((h | k).size()));
  return report;
}

class RegularLinearHypermap {
 public:
  /// Validates the triple; throws InvalidHypermap if any condition fails.
  static RegularLinearHypermap make(const InvolutionTriple& t) {
    auto report = validate_regular(t);
    if (!report.ok()) {
      throw Error(ErrorKind::InvalidHypermap,
                  "triple " + t.to_string() + " is not a regular linear hypermap:\n" +
                      report.summary());
    }
    return RegularLinearHypermap(t);
  }

  const InvolutionTriple& triple() const noexcept { return triple_; }
  const FiniteGroup& group() const noexcept { return triple_.group(); }
  const ElementSet& vertex_stabilizer() const noexcept { return h_; }
  const ElementSet& hyperedge_stabilizer() const noexcept { return k_; }
  const ElementSet& hyperface_stabilizer() const noexcept { return l_; }

 private:
  explicit RegularLinearHypermap(const InvolutionTriple& t)
      : triple_(t),
        h_(dihedral_subgroup(t.group(), t.r1(), t.r2())),
        k_(dihedral_subgroup(t.group(), t.r0(), t.r2())),
        l_(dihedral_subgroup(t.group(), t.r0(), t.r1())) {}

  InvolutionTriple triple_;
  ElementSet h_, k_, l_;
};

inline MSequence m_sequence(const RegularLinearHypermap& hm) {
  const auto& g = hm.group();
  const auto& t = hm.triple();
  MSequence s;
  s.k = g.element_order(g.mul(t.r1(), t.r2()));
  s.m = g.element_order(g.mul(t.r0(), t.r2()));
  s.n = g.element_order(g.mul(t.r0(), t.r1()));
  s.flags = g.order();
  s.vertices = g.order() / hm.vertex_stabilizer().size();
  s.hyperedges = g.order() / hm.hyperedge_stabilizer().size();
  s.hyperfaces = g.order() / hm.hyperface_stabilizer().size();

  const std::size_t even =
      generated_subgroup(g, {g.mul(t.r0(), t.r2()), g.mul(t.r1(), t.r2())}).size();
  const std::size_t index = g.order() / even;
  if (index != 1 && index != 2) {
    throw Error(ErrorKind::Internal,
                "even-word subgroup has index " + std::to_string(index));
  }
  auto surface = surface_from_counts(s.vertices, s.hyperedges, s.hyperfaces, s.flags, index == 2);
  s.orientable = surface.orientable;
  s.genus = surface.genus;
  return s;
}

inline RegularLinearHypermap dual(const RegularLinearHypermap& hm) {
  const auto& t = hm.triple();
  return RegularLinearHypermap::make(InvolutionTriple(t.group(), t.r1(), t.r0(), t.r2()));
}

inline bool is_isomorphic(const InvolutionTriple& a, const InvolutionTriple& b) {
  if (!same_group(a.group(), b.group())) {
    throw Error(ErrorKind::GroupMismatch, "isomorphism test needs triples in the same group");
  }
  for (const auto& aut : automorphism_maps(a.group())) {
    if (aut[a.r0()] == b.r0() && aut[a.r1()] == b.r1() && aut[a.r2()] == b.r2()) return true;
  }
  return false;
}

enum class CoreKind { TrivialCore, CentralR2 };

inline std::string_view to_string(CoreKind kind) noexcept {
  return kind == CoreKind::TrivialCore ? "trivial" : "central-r2";
}

/// Core of the vertex stabilizer: either trivial or <r2>, never anything else.
inline CoreKind core_dichotomy(const RegularLinearHypermap& hm) {
  const auto& g = hm.group();
  auto core = normal_core(g, hm.vertex_stabilizer());
  if (core.size() == 1) return CoreKind::TrivialCore;
  if (core == ElementSet::of(g, {FiniteGroup::identity(), hm.triple().r2()})) {
    return CoreKind::CentralR2;
  }
  throw Error(ErrorKind::DichotomyViolated,
              "core of <r1,r2> has order " + std::to_string(core.size()) + " for triple " +
                  hm.triple().to_string());
}

/// Regular representation: flags are element indices, r_i acts by right
/// multiplication.
inline FlagHypermap to_flag_hypermap(const RegularLinearHypermap& hm) {
  const auto& g = hm.group();
  const auto& t = hm.triple();
  auto right_mult = [&](elem_t r) {
    std::vector<point_t> img(g.order());
    for (elem_t x = 0; x < g.order(); ++x) img[x] = g.mul(x, r);
    return Permutation(std::move(img));
  };
  return FlagHypermap(right_mult(t.r0()), right_mult(t.r1()), right_mult(t.r2()));
}

}  // namespace lhm
