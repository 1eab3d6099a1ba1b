#pragma once

// Command-line front end. run_cli is kept separate from main so the test suite
// can drive it in-process.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lhm/lhm.hpp"
#include "lhm/io/catalog.hpp"
#include "lhm/io/report.hpp"

namespace lhm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;

using io::json;

namespace detail {

struct Common {
  std::string format = "table";
  std::string out;
  unsigned jobs = default_jobs();
  bool timing = false;
};

struct Manifest {
  json doc;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool timing = false;

  Manifest(std::string command, bool with_timing) : timing(with_timing) {
    doc = json{{"tool_version", io::kToolVersion},
               {"command", std::move(command)},
               {"inputs", json::array()}};
  }
  void input(const std::string& path) {
    doc["inputs"].push_back({{"path", path}, {"fnv1a64", io::fnv1a_hex(io::read_file(path))}});
  }
  json finish() const {
    json out = doc;
    if (timing) {
      out["timing_ms"] = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    return out;
  }
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
  f << text;
  if (!f) throw Error(ErrorKind::ParseError, path + ": write failed");
}

// Without --out the chosen format goes to stdout; with --out the file gets
// JSON (or CSV) and stdout gets the table.
inline void emit(const Common& c, std::ostream& out, const std::string& table, const json& doc,
                 const std::optional<std::string>& csv) {
  auto json_text = doc.dump(2) + "\n";
  if (c.out.empty()) {
    if (c.format == "json") {
      out << json_text;
    } else if (c.format == "csv" && csv) {
      out << *csv;
    } else {
      out << table;
    }
    return;
  }
  write_file(c.out, c.format == "csv" && csv ? *csv : json_text);
  out << table;
}

inline std::string class_table(const std::vector<ClassEntry>& classes) {
  std::ostringstream t;
  t << std::left << std::setw(4) << "#" << std::setw(30) << "M-sequence" << std::setw(11)
    << "orientable" << std::setw(7) << "proper" << std::setw(11) << "core"
    << "triple\n";
  std::size_t i = 0;
  for (const auto& c : classes) {
    t << std::left << std::setw(4) << ++i << std::setw(30) << c.sequence.to_string()
      << std::setw(11) << (c.sequence.orientable ? "yes" : "no") << std::setw(7)
      << (c.sequence.proper() ? "yes" : "no") << std::setw(11) << to_string(c.core)
      << c.triple.to_string() << "\n";
  }
  return t.str();
}

inline ClassEntry describe(const InvolutionTriple& t) {
  auto hm = RegularLinearHypermap::make(t);
  return {t, canonical_key(t), m_sequence(hm), orbit_size(t), core_dichotomy(hm)};
}

inline FiniteGroup load_group(const std::string& path, std::string& name) {
  auto entries = io::load_catalog({path});
  if (entries.size() != 1) {
    throw Error(ErrorKind::ParseError, path + ": expected exactly one group file");
  }
  name = entries.front().name;
  return entries.front().group;
}

inline void add_common(CLI::App* sub, Common& c, bool with_jobs) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--out", c.out, "Write the report to this file");
  if (with_jobs) {
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    sub->add_flag("--timing", c.timing, "Record wall-clock time in the manifest");
  }
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Regular linear hypermap engine", "lhm"};
  app.require_subcommand(1);

  Common common;
  std::string group_path, triple_text, flags_path;
  std::string family, variant = "m1", solid, derive;
  std::size_t n_param = 0, m_param = 0;
  std::vector<std::string> catalog;
  CensusFilters filters;
  std::optional<long> genus_min, genus_max;

  auto* classify_cmd = app.add_subcommand("classify", "Classify regular linear hypermaps on a group");
  classify_cmd->add_option("--group", group_path, "Group file (.grp)")->required();
  add_common(classify_cmd, common, true);

  auto* invariants_cmd = app.add_subcommand("invariants", "M-sequence of one triple");
  invariants_cmd->add_option("--group", group_path, "Group file (.grp)")->required();
  invariants_cmd->add_option("--triple", triple_text, "Triple \"w0;w1;w2\"")->required();
  add_common(invariants_cmd, common, false);

  auto* dual_cmd = app.add_subcommand("dual", "Dual of one triple");
  dual_cmd->add_option("--group", group_path, "Group file (.grp)")->required();
  dual_cmd->add_option("--triple", triple_text, "Triple \"w0;w1;w2\"")->required();
  add_common(dual_cmd, common, false);

  auto* validate_cmd = app.add_subcommand("validate-flags", "Validate a flag-hypermap file");
  validate_cmd->add_option("file", flags_path, "Flag file")->required();
  add_common(validate_cmd, common, false);

  auto* family_cmd = app.add_subcommand("family", "Build a member of a named family");
  family_cmd->add_option("--family", family, "z2xd2n, d2m or platonic")
      ->required()
      ->check(CLI::IsMember({"z2xd2n", "d2m", "platonic"}));
  family_cmd->add_option("--n", n_param, "n for z2xd2n");
  family_cmd->add_option("--variant", variant, "m1 or m2")->check(CLI::IsMember({"m1", "m2"}));
  family_cmd->add_option("--m", m_param, "m for d2m");
  family_cmd->add_option("--solid", solid, "Platonic solid");
  family_cmd->add_option("--derive", derive, "medial or digon")
      ->check(CLI::IsMember({"medial", "digon"}));
  add_common(family_cmd, common, false);

  auto* census_cmd = app.add_subcommand("census", "Per-genus counts over a group catalog");
  census_cmd->add_option("--catalog", catalog, "Group files or directories")->required();
  census_cmd->add_flag("--proper", filters.proper_only, "Only types with k, m, n > 2");
  census_cmd->add_flag("--orientable", filters.orientable_only, "Only orientable hypermaps");
  census_cmd->add_option("--genus-min", genus_min, "Smallest genus");
  census_cmd->add_option("--genus-max", genus_max, "Largest genus");
  add_common(census_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  auto usage = [&](const std::string& msg, CLI::App* sub) {
    err << "error: " << msg << "\n" << sub->help();
    return kExitUsage;
  };

  try {
    if (*classify_cmd) {
      Manifest manifest("classify", common.timing);
      std::string name;
      auto g = load_group(group_path, name);
      manifest.input(group_path);
      auto result = classify(g, name, common.jobs);
      std::ostringstream table;
      table << name << ": order " << g.order() << ", |Aut| " << result.aut_group_size << ", "
            << result.admissible_triple_count << " admissible triples, "
            << result.classes.size() << " classes (" << result.orientable_count()
            << " orientable)\n"
            << class_table(result.classes);
      emit(common, out, table.str(), io::classification_to_json(result, manifest.finish()),
           io::classification_to_csv(result));
      return kExitOk;
    }

    if (*invariants_cmd || *dual_cmd) {
      Manifest manifest(*dual_cmd ? "dual" : "invariants", false);
      std::string name;
      auto g = load_group(group_path, name);
      manifest.input(group_path);
      auto t = parse_triple(g, triple_text);
      if (*dual_cmd) {
        auto d = dual(RegularLinearHypermap::make(t)).triple();
        auto original = describe(t);
        auto dualized = describe(d);
        std::ostringstream table;
        table << "triple " << original.sequence.to_string() << "  " << t.to_string() << "\n"
              << "dual   " << dualized.sequence.to_string() << "  " << d.to_string() << "\n"
              << "self-dual: " << (is_isomorphic(t, d) ? "yes" : "no") << "\n";
        json doc{{"triple", io::class_to_json(name, original)},
                 {"dual", io::class_to_json(name, dualized)},
                 {"self_dual", is_isomorphic(t, d)},
                 {"manifest", manifest.finish()}};
        emit(common, out, table.str(), doc,
             io::csv_header() + io::class_to_csv(name, t, original.sequence) +
                 io::class_to_csv(name, d, dualized.sequence));
        return kExitOk;
      }
      auto entry = describe(t);
      json doc = io::class_to_json(name, entry);
      doc["manifest"] = manifest.finish();
      emit(common, out, entry.sequence.to_string() + "\n", doc,
           io::csv_header() + io::class_to_csv(name, t, entry.sequence));
      return kExitOk;
    }

    if (*validate_cmd) {
      Manifest manifest("validate-flags", false);
      auto h = io::load_flag_file(flags_path);
      manifest.input(flags_path);
      auto report = validate_hypermap(h);
      json checks = json::array();
      for (const auto& c : report.checks()) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      json doc{{"valid", report.ok()}, {"checks", checks}, {"flags", h.flag_count()}};
      std::ostringstream table;
      table << report.summary();
      if (report.ok()) {
        auto cells = extract_cells(h);
        auto surface = surface_invariant(h);
        table << "V=" << cells.vertex_count() << " E=" << cells.hyperedge_count()
              << " F=" << cells.hyperface_count() << " N=" << h.flag_count()
              << " chi=" << surface.euler_characteristic
              << (surface.orientable ? " orientable" : " non-orientable")
              << " genus=" << surface.genus << "\n";
        doc["cells"] = {{"vertices", cells.vertex_count()},
                        {"hyperedges", cells.hyperedge_count()},
                        {"hyperfaces", cells.hyperface_count()}};
        doc["surface"] = {{"euler_characteristic", surface.euler_characteristic},
                          {"orientable", surface.orientable},
                          {"genus", surface.genus}};
      }
      doc["manifest"] = manifest.finish();
      emit(common, out, table.str(), doc, std::nullopt);
      return report.ok() ? kExitOk : kExitInvalid;
    }

    if (*family_cmd) {
      Manifest manifest("family", false);
      std::optional<RegularLinearHypermap> hm;
      json params;
      if (family == "z2xd2n") {
        if (n_param == 0) return usage("--family z2xd2n needs --n", family_cmd);
        hm = build_dihedral_family(n_param, variant == "m1" ? DihedralVariant::M1
                                                            : DihedralVariant::M2);
        params = {{"n", n_param}, {"variant", variant}};
      } else if (family == "d2m") {
        if (m_param == 0) return usage("--family d2m needs --m", family_cmd);
        hm = build_half_twist_family(m_param);
        params = {{"m", m_param}};
      } else {
        if (solid.empty() || derive.empty()) {
          return usage("--family platonic needs --solid and --derive", family_cmd);
        }
        auto map = platonic_map(solid);
        hm = derive == "medial" ? medial(map) : digon(map);
        params = {{"solid", solid}, {"derive", derive}};
      }
      auto entry = describe(hm->triple());
      json doc = io::class_to_json(family, entry);
      doc["family"] = family;
      doc["parameters"] = params;
      doc["group_order"] = hm->group().order();
      doc["manifest"] = manifest.finish();
      emit(common, out, entry.sequence.to_string() + "  " + entry.triple.to_string() + "\n", doc,
           io::csv_header() + io::class_to_csv(family, entry.triple, entry.sequence));
      return kExitOk;
    }

    if (*census_cmd) {
      filters.genus_min = genus_min;
      filters.genus_max = genus_max;
      if (genus_min && genus_max && *genus_min > *genus_max) {
        return usage("--genus-min exceeds --genus-max", census_cmd);
      }
      Manifest manifest("census", common.timing);
      auto entries = io::load_catalog(catalog);
      std::vector<NamedGroup> groups;
      for (const auto& e : entries) {
        manifest.doc["inputs"].push_back({{"path", e.source_path}, {"fnv1a64", e.content_hash}});
        groups.push_back({e.name, e.group});
        if (!genus_max) continue;
        // Warn when no genus in the requested range admits this many flags.
        bool possible = false;
        for (long g = genus_min.value_or(0); g <= *genus_max && !possible; ++g) {
          for (bool orient : {true, false}) {
            if (filters.orientable_only && !orient) continue;
            auto bound = max_flags_for_genus(g, orient, filters.proper_only);
            if (!bound || e.group.order() <= *bound) possible = true;
          }
        }
        if (!possible) {
          err << "warning: " << e.name << " (order " << e.group.order()
              << ") exceeds the flag bound for every requested genus\n";
        }
      }
      auto report = census(groups, filters, common.jobs);
      json status = json::array();
      for (const auto& s : report.groups) {
        status.push_back({{"name", s.name}, {"status", s.ok ? "ok" : "error"}});
      }
      manifest.doc["filters"] = io::filters_to_json(filters);
      manifest.doc["per_group_status"] = status;
      manifest.doc["coverage_note"] = io::kCensusCoverageNote;

      std::ostringstream table;
      table << "genus  orientable  count\n";
      for (const auto& [g, c] : report.per_genus_orientable) {
        table << std::left << std::setw(7) << g << std::setw(12) << "yes" << c << "\n";
      }
      for (const auto& [g, c] : report.per_genus_non_orientable) {
        table << std::left << std::setw(7) << g << std::setw(12) << "no" << c << "\n";
      }
      for (const auto& s : report.groups) {
        table << "  " << s.name << ": "
              << (s.ok ? std::to_string(s.matching) + " of " + std::to_string(s.classes) +
                             " classes match"
                       : "error: " + s.error)
              << "\n";
      }
      table << "note: " << io::kCensusCoverageNote << "\n";
      bool all_ok = std::all_of(report.groups.begin(), report.groups.end(),
                                [](const auto& s) { return s.ok; });
      emit(common, out, table.str(), io::census_to_json(report, manifest.finish()),
           io::census_to_csv(report));
      return all_ok ? kExitOk : kExitInvalid;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_internal(e.kind()) ? kExitInternal : kExitInvalid;
  } catch (const json::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lhm::cli
