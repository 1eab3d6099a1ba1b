#pragma once

/**
 * @file hypermap.hpp
 * @brief Linear hypermaps given explicitly on a flag set.
 *
 * A FlagHypermap is three fixed-point-free involutions r0, r1, r2 on flags
 * {0..N-1}. Vertices, hyperedges and hyperfaces are the orbits of <r1,r2>,
 * <r0,r2> and <r0,r1>; two cells are incident when their orbits meet.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lhm/bitset.hpp"
#include "lhm/error.hpp"
#include "lhm/finite_group.hpp"
#include "lhm/permutation.hpp"
#include "lhm/validation.hpp"

namespace lhm {

namespace checks {
inline constexpr std::string_view kInvolutions = "involutions";
inline constexpr std::string_view kDistinct = "pairwise_distinct";
inline constexpr std::string_view kFixedPointFree = "fixed_point_free";
inline constexpr std::string_view kTransitive = "transitive";
inline constexpr std::string_view kGenerates = "generates_group";
inline constexpr std::string_view kStabilizerIntersection = "stabilizer_intersection";
inline constexpr std::string_view kLinearity = "linearity";
}  // namespace checks

class FlagHypermap {
 public:
  /// Rejects fewer than 4 flags, mismatched degrees and fixed points.
  FlagHypermap(Permutation r0, Permutation r1, Permutation r2)
      : r_{std::move(r0), std::move(r1), std::move(r2)} {
    const std::size_t n = r_[0].degree();
    if (r_[1].degree() != n || r_[2].degree() != n) {
      throw Error(ErrorKind::DegreeMismatch, "flag involutions act on different flag sets");
    }
    if (n < 4) {
      throw Error(ErrorKind::InvalidHypermap,
                  "a linear hypermap needs at least 4 flags, got " + std::to_string(n));
    }
    for (int i = 0; i < 3; ++i) {
      if (r_[i].has_fixed_point()) {
        throw Error(ErrorKind::InvalidHypermap, "r" + std::to_string(i) + " fixes a flag");
      }
    }
  }

  std::size_t flag_count() const noexcept { return r_[0].degree(); }
  const Permutation& r(int i) const { return r_[i]; }
  const Permutation& r0() const noexcept { return r_[0]; }
  const Permutation& r1() const noexcept { return r_[1]; }
  const Permutation& r2() const noexcept { return r_[2]; }

 private:
  Permutation r_[3];
};

struct CellStructure {
  std::vector<std::vector<point_t>> vertices;
  std::vector<std::vector<point_t>> hyperedges;
  std::vector<std::vector<point_t>> hyperfaces;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t hyperedge_count() const noexcept { return hyperedges.size(); }
  std::size_t hyperface_count() const noexcept { return hyperfaces.size(); }
};

/// Vertex ids are 0..vertex_count-1; each hyperedge is a sorted id list.
struct LinearHypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> hyperedges;
};

struct SurfaceInvariant {
  long euler_characteristic = 0;
  bool orientable = false;
  long genus = 0;
};

struct ConfigurationReport {
  bool linear = false;
  bool uniform_hyperedge_size = false;
  bool uniform_vertex_degree = false;
  bool is_configuration = false;
  std::size_t points = 0;          // v
  std::size_t lines_per_point = 0;  // r
  std::size_t lines = 0;           // b
  std::size_t points_per_line = 0;  // k
};

/// Orbit id of each point under the group generated by `gens`; ids are
/// numbered by smallest member.
inline std::vector<std::uint32_t> orbit_ids(std::size_t n,
                                            std::initializer_list<const Permutation*> gens,
                                            std::size_t* orbit_count = nullptr) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> id(n, kNone);
  std::uint32_t next = 0;
  std::vector<point_t> stack;
  for (point_t start = 0; start < n; ++start) {
    if (id[start] != kNone) continue;
    id[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      point_t x = stack.back();
      stack.pop_back();
      for (const Permutation* g : gens) {
        point_t y = (*g)(x);
        if (id[y] == kNone) {
          id[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (orbit_count) *orbit_count = next;
  return id;
}

inline std::vector<std::vector<point_t>> orbit_partition(
    std::size_t n, std::initializer_list<const Permutation*> gens) {
  std::size_t count = 0;
  auto ids = orbit_ids(n, gens, &count);
  std::vector<std::vector<point_t>> out(count);
  for (point_t x = 0; x < n; ++x) out[ids[x]].push_back(x);
  return out;
}

namespace detail {

// Each flag's orbit under the stabilizer as a bitset, indexed by orbit id.
struct OrbitSets {
  std::vector<std::uint32_t> id;
  std::vector<Bitset> sets;
};

inline OrbitSets orbit_sets(std::size_t n, const Permutation& a, const Permutation& b) {
  OrbitSets out;
  std::size_t count = 0;
  out.id = orbit_ids(n, {&a, &b}, &count);
  out.sets.assign(count, Bitset(n));
  for (point_t x = 0; x < n; ++x) out.sets[out.id[x]].set(x);
  return out;
}

}  // namespace detail

/// Checks phi^{HK} ∩ phi^{KH} = phi^{H ∪ K} at a single flag, where
/// H = <r1,r2> and K = <r0,r2>. phi^{HK} is the union of the K-orbits that
/// meet the H-orbit of phi.
inline bool linearity_holds_at(const FlagHypermap& h, point_t flag) {
  const std::size_t n = h.flag_count();
  auto vert = detail::orbit_sets(n, h.r1(), h.r2());
  auto edge = detail::orbit_sets(n, h.r0(), h.r2());
  const Bitset& hv = vert.sets[vert.id[flag]];
  const Bitset& ke = edge.sets[edge.id[flag]];
  Bitset hk(n), kh(n);
  hv.for_each([&](std::size_t p) { hk |= edge.sets[edge.id[p]]; });
  ke.for_each([&](std::size_t p) { kh |= vert.sets[vert.id[p]]; });
  return (hk & kh) == (hv | ke);
}

inline ValidationReport validate_hypermap(const FlagHypermap& h) {
  ValidationReport report;
  const std::size_t n = h.flag_count();

  bool involutions = true;
  std::string bad;
  for (int i = 0; i < 3; ++i) {
    if (!(h.r(i) * h.r(i)).is_identity()) {
      involutions = false;
      bad += " r" + std::to_string(i);
    }
  }
  report.add(std::string(checks::kInvolutions), involutions,
             involutions ? "" : "not involutions:" + bad);

  const bool distinct = h.r0() != h.r1() && h.r0() != h.r2() && h.r1() != h.r2();
  report.add(std::string(checks::kDistinct), distinct);
  // Construction already rejects fixed points.
  report.add(std::string(checks::kFixedPointFree), true);

  std::size_t orbits = 0;
  orbit_ids(n, {&h.r0(), &h.r1(), &h.r2()}, &orbits);
  report.add(std::string(checks::kTransitive), orbits == 1,
             std::to_string(orbits) + " orbit(s) on flags");

  if (!involutions) {
    report.add(std::string(checks::kStabilizerIntersection), false, "skipped");
    report.add(std::string(checks::kLinearity), false, "skipped");
    return report;
  }

  // <r1,r2> ∩ <r0,r2> = <r2> as permutation groups on the flags.
  auto vstab = FiniteGroup::closure({h.r1(), h.r2()});
  auto estab = FiniteGroup::closure({h.r0(), h.r2()});
  std::vector<Permutation> common;
  std::set_intersection(vstab.elements().begin(), vstab.elements().end(),
                        estab.elements().begin(), estab.elements().end(),
                        std::back_inserter(common));
  Permutation id(n);
  std::vector<Permutation> expected{id, h.r2()};
  std::sort(expected.begin(), expected.end());
  report.add(std::string(checks::kStabilizerIntersection), common == expected,
             "|<r1,r2> ∩ <r0,r2>| = " + std::to_string(common.size()));

  auto vert = detail::orbit_sets(n, h.r1(), h.r2());
  auto edge = detail::orbit_sets(n, h.r0(), h.r2());
  std::size_t failures = 0;
  point_t first_bad = 0;
  for (point_t flag = 0; flag < n; ++flag) {
    const Bitset& hv = vert.sets[vert.id[flag]];
    const Bitset& ke = edge.sets[edge.id[flag]];
    Bitset hk(n), kh(n);
    hv.for_each([&](std::size_t p) { hk |= edge.sets[edge.id[p]]; });
    ke.for_each([&](std::size_t p) { kh |= vert.sets[vert.id[p]]; });
    if (!((hk & kh) == (hv | ke))) {
      if (failures++ == 0) first_bad = flag;
    }
  }
  report.add(std::string(checks::kLinearity), failures == 0,
             failures == 0 ? ""
                           : std::to_string(failures) + " flag(s) fail, first " +
                                 std::to_string(first_bad + 1));
  return report;
}

inline void require_valid(const FlagHypermap& h) {
  auto report = validate_hypermap(h);
  if (!report.ok()) {
    throw Error(ErrorKind::InvalidHypermap, "flag hypermap fails validation:\n" + report.summary());
  }
}

inline CellStructure extract_cells(const FlagHypermap& h) {
  require_valid(h);
  const std::size_t n = h.flag_count();
  CellStructure cells;
  cells.vertices = orbit_partition(n, {&h.r1(), &h.r2()});
  cells.hyperedges = orbit_partition(n, {&h.r0(), &h.r2()});
  cells.hyperfaces = orbit_partition(n, {&h.r0(), &h.r1()});
  return cells;
}

/// Brute-force scan: every pair of distinct vertices in at most one hyperedge.
inline bool is_linear(const LinearHypergraph& hg) {
  const std::size_t v = hg.vertex_count;
  std::vector<std::uint32_t> shared(v * v, 0);
  for (const auto& e : hg.hyperedges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const auto lo = std::min(e[i], e[j]);
        const auto hi = std::max(e[i], e[j]);
        if (lo == hi) continue;
        if (++shared[lo * v + hi] > 1) return false;
      }
    }
  }
  return true;
}

inline LinearHypergraph underlying_hypergraph(const FlagHypermap& h) {
  require_valid(h);
  const std::size_t n = h.flag_count();
  std::size_t vcount = 0, ecount = 0;
  auto vid = orbit_ids(n, {&h.r1(), &h.r2()}, &vcount);
  auto eid = orbit_ids(n, {&h.r0(), &h.r2()}, &ecount);
  LinearHypergraph hg;
  hg.vertex_count = vcount;
  hg.hyperedges.resize(ecount);
  for (point_t x = 0; x < n; ++x) hg.hyperedges[eid[x]].push_back(vid[x]);
  for (auto& e : hg.hyperedges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  if (!is_linear(hg)) {
    throw Error(ErrorKind::LinearityViolation,
                "validated hypermap produced a non-linear hypergraph");
  }
  return hg;
}

/// Orientable iff the even-word subgroup <r0r1, r1r2, r0r2> has two orbits on
/// flags (it has one when the surface is non-orientable).
inline bool orientable(const FlagHypermap& h) {
  require_valid(h);
  const Permutation a = h.r0() * h.r1();
  const Permutation b = h.r1() * h.r2();
  const Permutation c = h.r0() * h.r2();
  std::size_t count = 0;
  orbit_ids(h.flag_count(), {&a, &b, &c}, &count);
  if (count == 2) return true;
  if (count == 1) return false;
  throw Error(ErrorKind::Internal,
              "even-word subgroup has " + std::to_string(count) + " orbits on a connected hypermap");
}

inline SurfaceInvariant surface_from_counts(std::size_t v, std::size_t e, std::size_t f,
                                            std::size_t flags, bool is_orientable) {
  SurfaceInvariant s;
  s.orientable = is_orientable;
  s.euler_characteristic = static_cast<long>(v + e + f) - static_cast<long>(flags / 2);
  const long deficit = 2 - s.euler_characteristic;
  if (flags % 2 != 0 || deficit < 0 || (is_orientable && deficit % 2 != 0)) {
    throw Error(ErrorKind::NonIntegralGenus,
                "Euler characteristic " + std::to_string(s.euler_characteristic) +
                    " does not give a valid genus");
  }
  s.genus = is_orientable ? deficit / 2 : deficit;
  if (!is_orientable && s.genus == 0) {
    throw Error(ErrorKind::NonIntegralGenus, "non-orientable surface with genus 0");
  }
  return s;
}

inline SurfaceInvariant surface_invariant(const FlagHypermap& h) {
  auto cells = extract_cells(h);
  return surface_from_counts(cells.vertex_count(), cells.hyperedge_count(),
                             cells.hyperface_count(), h.flag_count(), orientable(h));
}

inline ConfigurationReport configuration_check(const LinearHypergraph& hg) {
  ConfigurationReport r;
  r.linear = is_linear(hg);
  r.points = hg.vertex_count;
  r.lines = hg.hyperedges.size();

  std::vector<std::size_t> degree(hg.vertex_count, 0);
  r.uniform_hyperedge_size = !hg.hyperedges.empty();
  for (const auto& e : hg.hyperedges) {
    if (e.size() != hg.hyperedges.front().size()) r.uniform_hyperedge_size = false;
    for (auto x : e) ++degree[x];
  }
  r.uniform_vertex_degree = !degree.empty() &&
                            std::all_of(degree.begin(), degree.end(),
                                        [&](std::size_t d) { return d == degree.front(); });
  if (r.uniform_hyperedge_size) r.points_per_line = hg.hyperedges.front().size();
  if (r.uniform_vertex_degree) r.lines_per_point = degree.front();
  r.is_configuration = r.linear && r.uniform_hyperedge_size && r.uniform_vertex_degree;
  return r;
}

}  // namespace lhm
