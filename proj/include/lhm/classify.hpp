#pragma once

/**
 * @file classify.hpp
 * @brief All regular linear hypermaps on a group, up to isomorphism.
 *
 * Admissible triples are ordered triples of distinct involutions that generate
 * the group and satisfy both stabilizer conditions. Two triples are isomorphic
 * exactly when an automorphism of the group maps one onto the other
 * componentwise, so classes are Aut(G)-orbits. Each orbit is represented by its
 * lexicographically least member over element indices (its canonical key).
 */

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lhm/automorphism.hpp"
#include "lhm/regular.hpp"

namespace lhm {

using TripleKey = std::array<elem_t, 3>;

inline std::vector<elem_t> involutions(const FiniteGroup& g) {
  std::vector<elem_t> out;
  for (elem_t i = 0; i < g.order(); ++i) {
    if (g.element_order(i) == 2) out.push_back(i);
  }
  return out;
}

inline TripleKey canonical_key(const InvolutionTriple& t) {
  TripleKey best = t.indices();
  for (const auto& aut : automorphism_maps(t.group())) {
    TripleKey image{aut[t.r0()], aut[t.r1()], aut[t.r2()]};
    best = std::min(best, image);
  }
  return best;
}

/// Number of distinct images of the triple under Aut(G).
inline std::size_t orbit_size(const InvolutionTriple& t) {
  std::vector<TripleKey> images;
  for (const auto& aut : automorphism_maps(t.group())) {
    images.push_back({aut[t.r0()], aut[t.r1()], aut[t.r2()]});
  }
  std::sort(images.begin(), images.end());
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

namespace detail {

// Admissibility test with the stabilizers for a fixed r2 precomputed.
class TripleFilter {
 public:
  TripleFilter(const FiniteGroup& g, elem_t r2, const std::vector<elem_t>& invols)
      : g_(g), r2_(r2) {
    for (elem_t x : invols) {
      if (x != r2) with_r2_.emplace(x, dihedral_subgroup(g, x, r2));
    }
  }

  bool admissible(elem_t r0, elem_t r1) const {
    const ElementSet& h = with_r2_.at(r1);
    const ElementSet& k = with_r2_.at(r0);
    if ((h & k).size() != 2) return false;
    // Whichever check is cheaper goes first; both must pass.
    if (h.size() * k.size() < g_.order()) {
      return linear(h, k) && generates(r0, r1);
    }
    return generates(r0, r1) && linear(h, k);
  }

 private:
  bool linear(const ElementSet& h, const ElementSet& k) const {
    return (product_set(h, k) & product_set(k, h)) == (h | k);
  }
  bool generates(elem_t r0, elem_t r1) const {
    return generated_subgroup(g_, {r0, r1, r2_}).size() == g_.order();
  }

  const FiniteGroup& g_;
  elem_t r2_;
  std::map<elem_t, ElementSet> with_r2_;
};

}  // namespace detail

/// Streams admissible triples in lexicographic (r0, r1, r2) index order.
inline void for_each_admissible_triple(const FiniteGroup& g,
                                       const std::function<void(const InvolutionTriple&)>& visit) {
  auto invols = involutions(g);
  if (invols.size() < 3) return;
  std::map<elem_t, detail::TripleFilter> filters;
  for (elem_t r2 : invols) filters.emplace(r2, detail::TripleFilter(g, r2, invols));
  for (elem_t r0 : invols) {
    for (elem_t r1 : invols) {
      if (r1 == r0) continue;
      for (elem_t r2 : invols) {
        if (r2 == r0 || r2 == r1) continue;
        if (filters.at(r2).admissible(r0, r1)) visit(InvolutionTriple(g, r0, r1, r2));
      }
    }
  }
}

inline std::vector<InvolutionTriple> admissible_triples(const FiniteGroup& g) {
  std::vector<InvolutionTriple> out;
  for_each_admissible_triple(g, [&](const InvolutionTriple& t) { out.push_back(t); });
  return out;
}

struct ClassEntry {
  InvolutionTriple triple;
  TripleKey key;
  MSequence sequence;
  std::size_t orbit_size = 0;
  CoreKind core = CoreKind::TrivialCore;
};

struct ClassificationResult {
  std::string group_name;
  FiniteGroup group;
  std::vector<ClassEntry> classes;  // sorted by key
  std::size_t admissible_triple_count = 0;
  std::size_t aut_group_size = 0;

  std::size_t orientable_count() const {
    return static_cast<std::size_t>(std::count_if(
        classes.begin(), classes.end(), [](const auto& c) { return c.sequence.orientable; }));
  }
};

inline unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// One representative per Aut(G)-orbit of admissible triples. Work is split
/// over r0 by stride; the result does not depend on `jobs`.
inline ClassificationResult classify(const FiniteGroup& g, std::string name = {},
                                     unsigned jobs = 1) {
  const auto& auts = automorphism_maps(g);
  const auto invols = involutions(g);
  jobs = std::max(1U, jobs);

  struct Partial {
    std::size_t admissible = 0;
    std::vector<std::pair<TripleKey, std::size_t>> reps;  // key, orbit size
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](unsigned w) {
    if (invols.size() < 3) return;
    std::map<elem_t, detail::TripleFilter> filters;
    for (elem_t r2 : invols) filters.emplace(r2, detail::TripleFilter(g, r2, invols));
    auto& out = partials[w];
    for (std::size_t i = w; i < invols.size(); i += jobs) {
      const elem_t r0 = invols[i];
      for (elem_t r1 : invols) {
        if (r1 == r0) continue;
        for (elem_t r2 : invols) {
          if (r2 == r0 || r2 == r1 || !filters.at(r2).admissible(r0, r1)) continue;
          ++out.admissible;
          const TripleKey self{r0, r1, r2};
          bool minimal = true;
          for (const auto& aut : auts) {
            if (TripleKey{aut[r0], aut[r1], aut[r2]} < self) {
              minimal = false;
              break;
            }
          }
          if (minimal) out.reps.emplace_back(self, orbit_size(InvolutionTriple(g, r0, r1, r2)));
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  ClassificationResult result;
  result.group_name = std::move(name);
  result.group = g;
  result.aut_group_size = auts.size();
  std::vector<std::pair<TripleKey, std::size_t>> reps;
  for (auto& p : partials) {
    result.admissible_triple_count += p.admissible;
    reps.insert(reps.end(), p.reps.begin(), p.reps.end());
  }
  std::sort(reps.begin(), reps.end());
  for (const auto& [key, size] : reps) {
    InvolutionTriple t(g, key[0], key[1], key[2]);
    auto hm = RegularLinearHypermap::make(t);
    result.classes.push_back({t, key, m_sequence(hm), size, core_dichotomy(hm)});
  }
  return result;
}

struct CensusFilters {
  bool proper_only = false;
  bool orientable_only = false;
  std::optional<long> genus_min;
  std::optional<long> genus_max;

  bool accepts(const MSequence& s) const {
    if (proper_only && !s.proper()) return false;
    if (orientable_only && !s.orientable) return false;
    if (genus_min && s.genus < *genus_min) return false;
    if (genus_max && s.genus > *genus_max) return false;
    return true;
  }
};

struct CensusGroupStatus {
  std::string name;
  std::size_t order = 0;
  bool ok = false;
  std::string error;
  std::size_t classes = 0;
  std::size_t matching = 0;
  std::vector<ClassEntry> matched;
};

struct CensusReport {
  CensusFilters filters;
  std::map<long, std::size_t> per_genus_orientable;
  std::map<long, std::size_t> per_genus_non_orientable;
  std::vector<CensusGroupStatus> groups;
};

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Classifies each group and aggregates the filtered classes per genus. A
/// failing group is recorded in its status and does not stop the others.
inline CensusReport census(const std::vector<NamedGroup>& catalog, const CensusFilters& filters,
                           unsigned jobs = 1) {
  CensusReport report;
  report.filters = filters;
  for (const auto& entry : catalog) {
    CensusGroupStatus status;
    status.name = entry.name;
    status.order = entry.group.order();
    try {
      auto result = classify(entry.group, entry.name, jobs);
      status.ok = true;
      status.classes = result.classes.size();
      for (const auto& c : result.classes) {
        if (!filters.accepts(c.sequence)) continue;
        ++status.matching;
        status.matched.push_back(c);
        auto& bucket = c.sequence.orientable ? report.per_genus_orientable
                                             : report.per_genus_non_orientable;
        ++bucket[c.sequence.genus];
      }
    } catch (const Error& e) {
      status.ok = false;
      status.error = e.what();
    }
    report.groups.push_back(std::move(status));
  }
  return report;
}

/// Largest flag count a hypermap of the given genus can have (types restricted
/// to k,m,n >= 3 when `proper`). Empty when the genus leaves the order unbounded
/// (sphere, torus, projective plane, Klein bottle).
inline std::optional<std::size_t> max_flags_for_genus(long genus, bool orientable, bool proper) {
  // N = -2χ / (1 - 1/k - 1/m - 1/n); the denominator is at least 1/42, or 1/12
  // for proper types.
  const long chi = orientable ? 2 - 2 * genus : 2 - genus;
  if (chi >= 0) return std::nullopt;
  const long factor = proper ? 12 : 42;
  return static_cast<std::size_t>(-2 * chi * factor);
}

}  // namespace lhm
