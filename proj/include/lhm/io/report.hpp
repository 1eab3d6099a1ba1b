#pragma once

/**
 * @file report.hpp
 * @brief JSON and CSV output for classifications and censuses.
 *
 * JSON objects keep their keys sorted, classes keep canonical-key order, and
 * nothing run-dependent is written unless the caller puts it in the manifest,
 * so identical inputs give byte-identical files.
 */

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lhm/classify.hpp"
#include "lhm/constructions.hpp"
#include "lhm/io/catalog.hpp"
#include "lhm/regular.hpp"

namespace lhm::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.3.0";

inline json to_json(const MSequence& s) {
  return json{{"genus", s.genus},       {"k", s.k},
              {"m", s.m},               {"n", s.n},
              {"vertices", s.vertices}, {"hyperedges", s.hyperedges},
              {"hyperfaces", s.hyperfaces}, {"flags", s.flags},
              {"orientable", s.orientable}};
}

inline MSequence m_sequence_from_json(const json& j) {
  MSequence s;
  s.genus = j.at("genus").get<long>();
  s.k = j.at("k").get<std::size_t>();
  s.m = j.at("m").get<std::size_t>();
  s.n = j.at("n").get<std::size_t>();
  s.vertices = j.at("vertices").get<std::size_t>();
  s.hyperedges = j.at("hyperedges").get<std::size_t>();
  s.hyperfaces = j.at("hyperfaces").get<std::size_t>();
  s.flags = j.at("flags").get<std::size_t>();
  s.orientable = j.at("orientable").get<bool>();
  return s;
}

inline json triple_words(const InvolutionTriple& t) {
  const auto& g = t.group();
  return json::array({to_cycles(g.element(t.r0())), to_cycles(g.element(t.r1())),
                      to_cycles(g.element(t.r2()))});
}

inline json class_to_json(const std::string& group_name, const ClassEntry& c) {
  return json{{"group", group_name},
              {"triple", triple_words(c.triple)},
              {"m_sequence", to_json(c.sequence)},
              {"m_sequence_text", c.sequence.to_string()},
              {"orientable", c.sequence.orientable},
              {"proper", c.sequence.proper()},
              {"canonical_key", json::array({c.key[0], c.key[1], c.key[2]})},
              {"orbit_size", c.orbit_size},
              {"core", std::string(to_string(c.core))}};
}

inline json group_to_json(const std::string& name, const FiniteGroup& g) {
  json gens = json::array();
  for (elem_t i : g.generators()) gens.push_back(to_cycles(g.element(i)));
  return json{{"name", name}, {"order", g.order()}, {"degree", g.degree()}, {"generators", gens}};
}

inline json classification_to_json(const ClassificationResult& r, const json& manifest) {
  json classes = json::array();
  for (const auto& c : r.classes) classes.push_back(class_to_json(r.group_name, c));
  return json{{"group", group_to_json(r.group_name, r.group)},
              {"aut_group_order", r.aut_group_size},
              {"admissible_triples", r.admissible_triple_count},
              {"class_count", r.classes.size()},
              {"orientable_count", r.orientable_count()},
              {"classes", classes},
              {"manifest", manifest}};
}

inline std::string csv_header() {
  return "group,r0,r1,r2,genus,k,m,n,vertices,hyperedges,hyperfaces,flags,orientable,proper\n";
}

inline std::string class_to_csv(const std::string& group_name, const InvolutionTriple& t,
                                const MSequence& s) {
  const auto& g = t.group();
  std::ostringstream out;
  out << group_name << ',' << to_cycles(g.element(t.r0())) << ',' << to_cycles(g.element(t.r1()))
      << ',' << to_cycles(g.element(t.r2())) << ',' << s.genus << ',' << s.k << ',' << s.m << ','
      << s.n << ',' << s.vertices << ',' << s.hyperedges << ',' << s.hyperfaces << ',' << s.flags
      << ',' << (s.orientable ? "true" : "false") << ',' << (s.proper() ? "true" : "false")
      << '\n';
  return out.str();
}

inline std::string classification_to_csv(const ClassificationResult& r) {
  std::string out = csv_header();
  for (const auto& c : r.classes) out += class_to_csv(r.group_name, c.triple, c.sequence);
  return out;
}

struct StoredClass {
  InvolutionTriple triple;
  MSequence sequence;
};

/// Reads the classes of a classification JSON back as triples of `g`.
inline std::vector<StoredClass> read_classification(const json& doc, const FiniteGroup& g) {
  std::vector<StoredClass> out;
  for (const auto& c : doc.at("classes")) {
    const auto& words = c.at("triple");
    InvolutionTriple t(g, element_of(g, words.at(0).get<std::string>()),
                       element_of(g, words.at(1).get<std::string>()),
                       element_of(g, words.at(2).get<std::string>()));
    out.push_back({t, m_sequence_from_json(c.at("m_sequence"))});
  }
  return out;
}

inline json filters_to_json(const CensusFilters& f) {
  json j{{"proper_only", f.proper_only}, {"orientable_only", f.orientable_only}};
  j["genus_min"] = f.genus_min ? json(*f.genus_min) : json(nullptr);
  j["genus_max"] = f.genus_max ? json(*f.genus_max) : json(nullptr);
  return j;
}

inline constexpr const char* kCensusCoverageNote =
    "Counts cover only the groups in the supplied catalog. A complete count of "
    "regular linear hypermaps for a genus needs every group of each admissible "
    "order, which requires an external small-groups database; no completeness "
    "is claimed.";

inline json census_to_json(const CensusReport& r, const json& manifest) {
  auto genus_map = [](const std::map<long, std::size_t>& m) {
    json j = json::object();
    for (const auto& [g, n] : m) j[std::to_string(g)] = n;
    return j;
  };
  json groups = json::array();
  for (const auto& s : r.groups) {
    json matched = json::array();
    for (const auto& c : s.matched) matched.push_back(class_to_json(s.name, c));
    json g{{"name", s.name},        {"order", s.order},
           {"status", s.ok ? "ok" : "error"},
           {"classes", s.classes},  {"matching", s.matching},
           {"matched", matched}};
    if (!s.ok) g["error"] = s.error;
    groups.push_back(std::move(g));
  }
  return json{{"filters", filters_to_json(r.filters)},
              {"per_genus",
               {{"orientable", genus_map(r.per_genus_orientable)},
                {"non_orientable", genus_map(r.per_genus_non_orientable)}}},
              {"groups", groups},
              {"coverage", {{"complete", false}, {"catalog_groups", r.groups.size()},
                            {"note", kCensusCoverageNote}}},
              {"manifest", manifest}};
}

inline std::string census_to_csv(const CensusReport& r) {
  std::string out = "orientable,genus,count\n";
  for (const auto& [g, n] : r.per_genus_orientable) {
    out += "true," + std::to_string(g) + "," + std::to_string(n) + "\n";
  }
  for (const auto& [g, n] : r.per_genus_non_orientable) {
    out += "false," + std::to_string(g) + "," + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace lhm::io
