#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lhm/io/catalog.hpp"
#include "lhm/io/report.hpp"
#include "lhm/lhm.hpp"

using namespace lhm;
namespace fs = std::filesystem;
using io::json;

namespace {

const std::string kData = LHM_DATA_DIR;

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  try {
    io::parse_group_text(text, "t.grp");
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return ErrorKind::Internal;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("lhm-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
             std::to_string(++counter_));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    auto p = (path_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "lhm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bundled group files load with the expected orders", "[io]") {
  auto entries = io::load_catalog({kData + "/a5xz2.grp", kData + "/s4.grp", kData + "/s4xz2.grp"});
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "A5xZ2");
  CHECK(entries[0].group.order() == 120);
  CHECK(entries[0].spec.times_z2);
  CHECK(entries[1].group.order() == 24);
  CHECK(entries[2].group.order() == 48);
  CHECK(entries[0].content_hash.size() == 16);
}

TEST_CASE("a directory contributes its group files in name order", "[io]") {
  auto entries = io::load_catalog({kData});
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(fs::path(e.source_path).filename().string());
  CHECK(names == std::vector<std::string>{"a5xz2.grp", "d16.grp", "s4.grp", "s4xz2.grp",
                                          "z2xd10.grp"});
}

TEST_CASE("group file grammar", "[io]") {
  auto g = io::parse_group_text(
      "# comment\nname: Z6  # trailing\ndegree: 5\ngens: (1 2 3)\n  (4 5)\n\n");
  CHECK(g.name == "Z6");
  CHECK(g.spec.degree == 5);
  CHECK(g.spec.generators.size() == 2);
  CHECK(io::build_group(g.spec).order() == 6);

  std::string msg;
  CHECK(parse_kind("name: X\ndegree: 3\ngens:\n  (1 2\n", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("t.grp:4:3:") != std::string::npos);
  CHECK(msg.find("unclosed") != std::string::npos);
  CHECK(parse_kind("name: X\ndegree: 3\ngens:\n  (1 4)\n", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("t.grp:4:3:") != std::string::npos);
  CHECK(parse_kind("name: X\ndegree: 3\n") == ErrorKind::ParseError);
  CHECK(parse_kind("degree: 3\ngens: (1 2)\n") == ErrorKind::ParseError);
  CHECK(parse_kind("name: X\ngens: (1 2)\n") == ErrorKind::ParseError);
  CHECK(parse_kind("name: X\ndegree: zero\ngens: (1 2)\n") == ErrorKind::ParseError);
  CHECK(parse_kind("name: X\ndegree: 3\ncolor: red\ngens: (1 2)\n", &msg) ==
        ErrorKind::ParseError);
  CHECK(msg.find("t.grp:3:1:") != std::string::npos);
  CHECK(parse_kind("name: X\nname: Y\ndegree: 3\ngens: (1 2)\n") == ErrorKind::ParseError);
  CHECK(parse_kind("name: X\ndegree: 3\ntimes-z2: maybe\ngens: (1 2)\n") ==
        ErrorKind::ParseError);
  CHECK(parse_kind("(1 2)\nname: X\ndegree: 3\n") == ErrorKind::ParseError);
}

TEST_CASE("catalog names must be unique and groups must fit the cap", "[io]") {
  TempDir dir;
  auto a = dir.file("a.grp", "name: G\ndegree: 3\ngens: (1 2 3)\n");
  auto b = dir.file("b.grp", "name: G\ndegree: 2\ngens: (1 2)\n");
  auto big = dir.file("big.grp", "name: S6\ndegree: 6\ngens: (1 2 3 4 5 6)\n  (1 2)\n");
  try {
    io::load_catalog({a, b});
    FAIL("duplicate name accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateName);
  }
  try {
    io::load_catalog({big}, 100);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupTooLarge);
  }
}

TEST_CASE("flag files parse and print back", "[io]") {
  auto h = io::parse_flag_text(
      "flags: 4\nr0: (1 2)(3 4)\nr1: (1 3)(2 4)\nr2: (1 4)(2 3)\n", "t.flags");
  CHECK(h.flag_count() == 4);
  auto again = io::parse_flag_text(io::format_flag_text(h));
  CHECK(again.r0() == h.r0());
  CHECK(again.r2() == h.r2());
  CHECK_THROWS_AS(io::parse_flag_text("flags: 4\nr0: (1 2)(3 4)\nr1: (1 3)(2 4)\n"), Error);
  CHECK_THROWS_AS(io::parse_flag_text("flags: 4\nr0: (1 2)(3 4)\nr1: (1 3)(2 4)\nr2: (1 5)\n"),
                  Error);
  CHECK_THROWS_AS(io::parse_flag_text("r0: (1 2)\n"), Error);
}

TEST_CASE("classification JSON is deterministic and round-trips", "[io]") {
  auto g = a5_times_z2();
  json manifest{{"tool_version", io::kToolVersion}};
  auto first = io::classification_to_json(classify(g, "A5xZ2", 1), manifest).dump(2);
  auto second = io::classification_to_json(classify(g, "A5xZ2", 4), manifest).dump(2);
  CHECK(first == second);

  auto doc = json::parse(first);
  CHECK(doc.at("class_count") == 19);
  // Re-read into a freshly built copy of the group.
  auto stored = io::read_classification(doc, a5_times_z2());
  REQUIRE(stored.size() == 19);
  for (const auto& s : stored) {
    CHECK(validate_regular(s.triple).ok());
    CHECK(m_sequence(RegularLinearHypermap::make(s.triple)) == s.sequence);
  }
}

TEST_CASE("CSV has one row per class and no canonical key", "[io]") {
  auto csv = io::classification_to_csv(classify(symmetric_group_s4(), "S4"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.rfind(io::csv_header(), 0) == 0);
  CHECK(csv.find("canonical") == std::string::npos);
}

TEST_CASE("fnv1a fingerprints", "[io]") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cli: classify writes a report with the manifest", "[io][cli]") {
  TempDir dir;
  auto out = dir.path("r.json");
  auto r = run({"classify", "--group", kData + "/a5xz2.grp", "--out", out, "--jobs", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("19 classes (7 orientable)") != std::string::npos);
  auto doc = json::parse(io::read_file(out));
  CHECK(doc.at("classes").size() == 19);
  CHECK(doc.at("manifest").at("inputs").size() == 1);
  CHECK_FALSE(doc.at("manifest").contains("timing_ms"));

  auto again = dir.path("r2.json");
  REQUIRE(run({"classify", "--group", kData + "/a5xz2.grp", "--out", again, "--jobs", "1"}).code ==
          0);
  CHECK(io::read_file(out) == io::read_file(again));

  auto timed = dir.path("t.json");
  REQUIRE(run({"classify", "--group", kData + "/s4.grp", "--out", timed, "--timing"}).code == 0);
  CHECK(json::parse(io::read_file(timed)).at("manifest").contains("timing_ms"));

  auto csv = run({"classify", "--group", kData + "/s4.grp", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind(io::csv_header(), 0) == 0);
}

TEST_CASE("cli: invariants and dual", "[io][cli]") {
  auto r = run({"invariants", "--group", kData + "/a5xz2.grp", "--triple",
                "(1 2)(3 5);(1 2)(3 4)(6 7);(1 4)(2 3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "[10;2,5,6;30,12,10;120]\n");

  auto d = run({"dual", "--group", kData + "/a5xz2.grp", "--triple",
                "(1 3)(2 4)(6 7);(1 2)(4 5)(6 7);(1 3)(4 5)(6 7)", "--format", "json"});
  CHECK(d.code == 0);
  CHECK(json::parse(d.out).at("self_dual") == true);

  auto bad = run({"invariants", "--group", kData + "/s4.grp", "--triple", "(1 2);(3 4);(1 2)(3 4)"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("InvalidHypermap") != std::string::npos);
}

TEST_CASE("cli: validate-flags", "[io][cli]") {
  TempDir dir;
  auto good = dir.file("g.flags", io::format_flag_text(to_flag_hypermap(
                                      build_dihedral_family(3, DihedralVariant::M1))));
  auto r = run({"validate-flags", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus=0") != std::string::npos);
  auto theta = dir.file("t.flags", "flags: 4\nr0: (1 2)(3 4)\nr1: (1 3)(2 4)\nr2: (1 4)(2 3)\n");
  CHECK(run({"validate-flags", theta}).code == 1);
  auto broken =
      dir.file("b.flags", "flags: 4\nr0: (1 2\nr1: (1 3)(2 4)\nr2: (1 4)(2 3)\n");
  auto b = run({"validate-flags", broken});
  CHECK(b.code == 1);
  CHECK(b.err.find("b.flags:2:5:") != std::string::npos);
}

TEST_CASE("cli: families", "[io][cli]") {
  CHECK(run({"family", "--family", "z2xd2n", "--n", "5", "--variant", "m2"}).out.rfind(
            "[1;2,2,10;5,5,1;20]", 0) == 0);
  CHECK(run({"family", "--family", "d2m", "--m", "8"}).out.rfind("[1;2,2,8;4,4,1;16]", 0) == 0);
  CHECK(run({"family", "--family", "platonic", "--solid", "cube", "--derive", "digon"})
            .out.rfind("[0;3,2,4;8,12,6;48]", 0) == 0);
  CHECK(run({"family", "--family", "d2m", "--m", "6"}).code == 1);
  CHECK(run({"family", "--family", "platonic", "--solid", "torus", "--derive", "digon"}).code == 1);
  CHECK(run({"family", "--family", "d2m"}).code == 64);
}

TEST_CASE("cli: census reports catalog coverage only", "[io][cli]") {
  auto r = run({"census", "--catalog", kData, "--proper", "--orientable", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc.at("per_genus").at("orientable") == json{{"5", 1}});
  CHECK(doc.at("per_genus").at("non_orientable").empty());
  CHECK(doc.at("coverage").at("complete") == false);
  CHECK(doc.at("manifest").at("coverage_note").get<std::string>().find("external") !=
        std::string::npos);
  CHECK(doc.at("manifest").at("per_group_status").size() == 5);
  CHECK(doc.at("manifest").at("inputs").size() == 5);

  auto warn = run({"census", "--catalog", kData + "/a5xz2.grp", "--proper", "--orientable",
                   "--genus-min", "2", "--genus-max", "2"});
  CHECK(warn.code == 0);
  CHECK(warn.err.find("warning: A5xZ2") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 64", "[io][cli]") {
  CHECK(run({}).code == 64);
  CHECK(run({"classify"}).code == 64);
  CHECK(run({"classify", "--group", kData + "/s4.grp", "--format", "xml"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("census") != std::string::npos);
  CHECK(run({"classify", "--group", kData + "/missing.grp"}).code == 1);
}
