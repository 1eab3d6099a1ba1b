#pragma once

/**
 * @file constructions.hpp
 * @brief Named groups, the dihedral families, Platonic maps and the medial and
 * digon hypermaps derived from them.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lhm/classify.hpp"
#include "lhm/regular.hpp"

namespace lhm {

/// Generators plus an optional central involution on two fresh points.
inline std::vector<Permutation> with_central_involution(std::vector<Permutation> gens) {
  const std::size_t d = gens.front().degree();
  for (auto& g : gens) g = g.extended(2);
  std::vector<point_t> swap(d + 2);
  for (point_t i = 0; i < d; ++i) swap[i] = i;
  swap[d] = static_cast<point_t>(d + 1);
  swap[d + 1] = static_cast<point_t>(d);
  gens.emplace_back(std::move(swap));
  return gens;
}

inline FiniteGroup symmetric_group_s4() {
  return FiniteGroup::closure({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
}

inline FiniteGroup s4_times_z2() {
  return FiniteGroup::closure(
      with_central_involution({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)}));
}

inline FiniteGroup a5_times_z2() {
  return FiniteGroup::closure(
      with_central_involution({parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)}));
}

/// Element index of a cycle word in `g`; InvalidTriple if it is not a member.
inline elem_t element_of(const FiniteGroup& g, std::string_view cycles) {
  auto idx = g.index_of(parse_cycles(cycles, g.degree()));
  if (!idx) {
    throw Error(ErrorKind::InvalidTriple, "\"" + std::string(cycles) + "\" is not in the group");
  }
  return *idx;
}

/// Parses "w0;w1;w2" into a triple of `g`.
inline InvolutionTriple parse_triple(const FiniteGroup& g, std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::ParseError, "a triple needs three ';'-separated cycle words, got " +
                                           std::to_string(parts.size()));
  }
  return InvolutionTriple(g, element_of(g, parts[0]), element_of(g, parts[1]),
                          element_of(g, parts[2]));
}

// Reflections i -> -i and i -> 1 - i (mod n) on points 0..n-1; their product
// is the rotation i -> i + 1.
inline std::pair<Permutation, Permutation> dihedral_reflections(std::size_t n) {
  std::vector<point_t> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<point_t>((n - i) % n);
    b[i] = static_cast<point_t>((n + 1 - i) % n);
  }
  return {Permutation(std::move(a)), Permutation(std::move(b))};
}

/// Z2 x D2n with r0, r1 reflections, (r0 r1)^n = 1 and r2 central. Accepts
/// n >= 2 so that degenerate members can be inspected; n = 2 is realized as
/// Z2^3 on six points.
inline InvolutionTriple dihedral_times_z2_triple(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "dihedral order parameter must be >= 2");
  std::vector<Permutation> gens;
  if (n == 2) {
    gens = {parse_cycles("(1 2)", 6), parse_cycles("(3 4)", 6), parse_cycles("(5 6)", 6)};
  } else {
    auto [a, b] = dihedral_reflections(n);
    gens = with_central_involution({a, b});
  }
  auto g = FiniteGroup::closure(gens);
  return InvolutionTriple(g, *g.index_of(gens[0]), *g.index_of(gens[1]), *g.index_of(gens[2]));
}

enum class DihedralVariant { M1, M2 };

/// M1 = (r0, r1, r2); M2 = (r0, r1 r2, r2), the latter for odd n only.
inline RegularLinearHypermap build_dihedral_family(std::size_t n, DihedralVariant variant) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "n must be at least 3, got " + std::to_string(n));
  if (variant == DihedralVariant::M2 && n % 2 == 0) {
    throw Error(ErrorKind::BadParameter, "variant M2 needs odd n, got " + std::to_string(n));
  }
  auto base = dihedral_times_z2_triple(n);
  if (variant == DihedralVariant::M1) return RegularLinearHypermap::make(base);
  const auto& g = base.group();
  return RegularLinearHypermap::make(
      InvolutionTriple(g, base.r0(), g.mul(base.r1(), base.r2()), base.r2()));
}

/// D2m on m points with r2 = (r0 r1)^(m/2). Only m divisible by 4 (and m >= 8
/// as a consequence) is accepted.
inline RegularLinearHypermap build_half_twist_family(std::size_t m) {
  if (m < 6 || m % 2 != 0) {
    throw Error(ErrorKind::BadParameter, "m must be even and at least 6, got " + std::to_string(m));
  }
  if (m % 4 != 0) {
    throw Error(ErrorKind::BadParameter,
                "m = " + std::to_string(m) + " is not divisible by 4");
  }
  auto [a, b] = dihedral_reflections(m);
  auto g = FiniteGroup::closure({a, b});
  const elem_t r0 = *g.index_of(a);
  const elem_t r1 = *g.index_of(b);
  const elem_t r2 = g.pow(g.mul(r0, r1), m / 2);
  return RegularLinearHypermap::make(InvolutionTriple(g, r0, r1, r2));
}

enum class Solid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline constexpr std::array<Solid, 5> kAllSolids{Solid::Tetrahedron, Solid::Cube,
                                                 Solid::Octahedron, Solid::Dodecahedron,
                                                 Solid::Icosahedron};

inline std::string_view to_string(Solid s) noexcept {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Cube: return "cube";
    case Solid::Octahedron: return "octahedron";
    case Solid::Dodecahedron: return "dodecahedron";
    case Solid::Icosahedron: return "icosahedron";
  }
  return "?";
}

inline Solid parse_solid(std::string_view name) {
  for (Solid s : kAllSolids) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::UnknownSolid, "unknown solid \"" + std::string(name) + "\"");
}

/// Schläfli type {p, q}: p-gonal faces, q faces at each vertex.
inline std::pair<std::size_t, std::size_t> schlafli(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return {3, 3};
    case Solid::Cube: return {4, 3};
    case Solid::Octahedron: return {3, 4};
    case Solid::Dodecahedron: return {5, 3};
    case Solid::Icosahedron: return {3, 5};
  }
  return {0, 0};
}

inline FiniteGroup platonic_group(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return symmetric_group_s4();
    case Solid::Cube:
    case Solid::Octahedron: return s4_times_z2();
    case Solid::Dodecahedron:
    case Solid::Icosahedron: return a5_times_z2();
  }
  return {};
}

/// A regular map: |r0 r1| = p (face size), |r1 r2| = q (vertex valency),
/// |r0 r2| = 2.
struct RegularMapTriple {
  InvolutionTriple triple;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// Certificate that the underlying graph is simple: |<r0,r2>| = 4,
/// H ∩ K = <r2> and H ∩ r0 H r0 = <r2>, with H = <r1,r2>, K = <r0,r2>.
inline bool simple_graph_check(const RegularMapTriple& map) {
  const auto& t = map.triple;
  const auto& g = t.group();
  auto h = dihedral_subgroup(g, t.r1(), t.r2());
  auto k = dihedral_subgroup(g, t.r0(), t.r2());
  if (k.size() != 4) return false;
  auto r2_only = ElementSet::of(g, {FiniteGroup::identity(), t.r2()});
  if (!((h & k) == r2_only)) return false;
  return (h & conjugate(h, t.r0())) == r2_only;
}

namespace detail {

inline bool matches_map_type(const InvolutionTriple& t, std::size_t p, std::size_t q) {
  const auto& g = t.group();
  return g.element_order(g.mul(t.r0(), t.r1())) == p &&
         g.element_order(g.mul(t.r1(), t.r2())) == q &&
         g.element_order(g.mul(t.r0(), t.r2())) == 2 &&
         generated_subgroup(g, {t.r0(), t.r1(), t.r2()}).size() == g.order();
}

// First triple in index order found by the search, kept so platonic_map does
// not have to search at run time.
inline constexpr std::array<std::array<std::string_view, 3>, 5> kFrozenPlatonicTriples{{
    {"(3 4)", "(2 3)", "(1 2)"},
    {"(1 2)(3 4)(5 6)", "(2 3)", "(3 4)"},
    {"(3 4)", "(2 3)", "(1 2)(3 4)(5 6)"},
    {"(2 3)(4 5)(6 7)", "(1 2)(3 4)(6 7)", "(2 5)(3 4)(6 7)"},
    {"(2 3)(4 5)(6 7)", "(1 2)(4 5)(6 7)", "(2 4)(3 5)(6 7)"},
}};

}  // namespace detail

/// Exhaustive search for the first involution triple (in index order) of the
/// solid's group with the right orders, generation and a simple graph.
inline RegularMapTriple search_platonic_map(Solid s) {
  auto g = platonic_group(s);
  auto [p, q] = schlafli(s);
  auto invols = involutions(g);
  for (elem_t r0 : invols) {
    for (elem_t r1 : invols) {
      for (elem_t r2 : invols) {
        if (r0 == r1 || r0 == r2 || r1 == r2) continue;
        InvolutionTriple t(g, r0, r1, r2);
        if (!detail::matches_map_type(t, p, q)) continue;
        RegularMapTriple map{t, p, q};
        if (simple_graph_check(map)) return map;
      }
    }
  }
  throw Error(ErrorKind::SearchFailed, "no map triple for " + std::string(to_string(s)));
}

inline RegularMapTriple platonic_map(Solid s) {
  auto g = platonic_group(s);
  auto [p, q] = schlafli(s);
  const auto& words = detail::kFrozenPlatonicTriples[static_cast<std::size_t>(s)];
  InvolutionTriple t(g, element_of(g, words[0]), element_of(g, words[1]),
                     element_of(g, words[2]));
  RegularMapTriple map{t, p, q};
  if (!detail::matches_map_type(t, p, q) || !simple_graph_check(map)) {
    throw Error(ErrorKind::SearchFailed,
                "stored triple for " + std::string(to_string(s)) + " does not check out");
  }
  return map;
}

inline RegularMapTriple platonic_map(std::string_view name) { return platonic_map(parse_solid(name)); }

/// Hyperedges are the map's vertices, hyperfaces its faces: (G; r1, r0, r2).
inline RegularLinearHypermap medial(const RegularMapTriple& map) {
  if (!simple_graph_check(map)) {
    throw Error(ErrorKind::NotSimple, "medial hypermap needs a simple underlying graph");
  }
  const auto& t = map.triple;
  return RegularLinearHypermap::make(InvolutionTriple(t.group(), t.r1(), t.r0(), t.r2()));
}

/// Every map edge becomes a 2-gon hyperedge: (G; r0, r1, r2).
inline RegularLinearHypermap digon(const RegularMapTriple& map) {
  if (!simple_graph_check(map)) {
    throw Error(ErrorKind::NotSimple, "digon hypermap needs a simple underlying graph");
  }
  return RegularLinearHypermap::make(map.triple);
}

}  // namespace lhm
