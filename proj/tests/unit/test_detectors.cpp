#include "doctest.h"

#include <algorithm>

#include "matcha/detectors.hpp"
#include "matcha/java_parser.hpp"
#include "support/test_util.hpp"

using namespace matcha;
using matcha_testing::test_taxonomy;

namespace {

ApiList small_api_list() {
  std::string json = R"({
    "version": 1,
    "apis": [
      {"pattern": "android.location.LocationManager.getLastKnownLocation",
       "kind": "ACCESS",
       "data_types": ["location.approximate_location", "location.precise_location"]},
      {"pattern": "com.google.firebase.storage.StorageReference.putFile",
       "kind": "TRANSMISSION",
       "hints": {"transmitted_off_device": true, "stored": true}},
      {"pattern": "com.google.firebase.storage.", "kind": "TRANSMISSION",
       "hints": {"transmitted_off_device": true, "stored": true}}
    ]})";
  std::string error;
  auto list = ApiList::load_text(json, test_taxonomy(), &error);
  REQUIRE_MESSAGE(list.has_value(), error);
  return *list;
}

KeywordList small_keyword_list() {
  std::string json = R"({
    "version": 1,
    "keywords": [
      {"phrase": "search", "data_types": ["app_activity.in_app_search_history"]},
      {"phrase": "latitude", "data_types": ["location.precise_location"]},
      {"phrase": "access_fine_location", "identifier_form": "access fine location",
       "origin": "PERMISSION", "data_types": ["location.precise_location"]},
      {"phrase": "user id", "data_types": ["personal_info.user_id"]}
    ]})";
  std::string error;
  auto list = KeywordList::load_text(json, test_taxonomy(), &error);
  REQUIRE_MESSAGE(list.has_value(), error);
  return *list;
}

std::vector<java::CompilationUnit> parse_all(const std::vector<std::string>& sources) {
  std::vector<java::CompilationUnit> units;
  for (size_t i = 0; i < sources.size(); ++i) {
    units.push_back(java::parse_unit(sources[i], "F" + std::to_string(i) + ".java"));
  }
  return units;
}

}  // namespace

TEST_CASE("import-resolved access call is detected at high confidence, uncovered") {
  std::vector<std::string> sources = {
      "import android.location.LocationManager;\n"
      "class A {\n"
      "  void m(LocationManager lm, String p) {\n"
      "    Location l = lm.getLastKnownLocation(p);\n"
      "  }\n"
      "}\n"};
  auto units = parse_all(sources);
  ApiList apis = small_api_list();
  AnnotationGraph graph;
  auto detected = detect_api_calls(units, graph, apis);
  REQUIRE(detected.size() == 1);
  CHECK(detected[0].spec->kind == ApiKind::Access);
  CHECK(detected[0].confidence == Confidence::High);
  CHECK(detected[0].coverage == Coverage::Uncovered);
  REQUIRE(detected[0].spec->candidate_data_types.size() == 2);
  CHECK(detected[0].spec->candidate_data_types[0] ==
        DataTypeRef{"location", "approximate_location"});
  CHECK(detected[0].spec->candidate_data_types[1] ==
        DataTypeRef{"location", "precise_location"});
}

TEST_CASE("marker on the covering declaration makes the call covered") {
  std::vector<std::string> sources = {
      "import android.location.LocationManager;\n"
      "class A {\n"
      "  void m(LocationManager lm, String p) {\n"
      "    @NotPersonalDataAccess\n"
      "    Location l = lm.getLastKnownLocation(p);\n"
      "  }\n"
      "}\n"};
  auto units = parse_all(sources);
  AnnotationGraph graph;
  ApiList apis = small_api_list();
  auto detected = detect_api_calls(units, graph, apis);
  REQUIRE(detected.size() == 1);
  CHECK(detected[0].coverage == Coverage::Covered);
  CHECK_FALSE(detected[0].covering_annotation.empty());
}

TEST_CASE("transmission spec carries preset hints") {
  std::vector<std::string> sources = {
      "import com.google.firebase.storage.StorageReference;\n"
      "class A {\n"
      "  void up(StorageReference ref, Uri photoUri) {\n"
      "    ref.putFile(photoUri);\n"
      "  }\n"
      "}\n"};
  auto units = parse_all(sources);
  AnnotationGraph graph;
  ApiList apis = small_api_list();
  auto detected = detect_api_calls(units, graph, apis);
  REQUIRE(detected.size() == 1);
  CHECK(detected[0].spec->kind == ApiKind::Transmission);
  CHECK(detected[0].spec->preset_hints.transmitted_off_device == true);
  CHECK(detected[0].spec->preset_hints.stored == true);
  // Exact pattern wins over the package-prefix entry.
  CHECK(detected[0].spec->qualified_pattern ==
        "com.google.firebase.storage.StorageReference.putFile");
}

TEST_CASE("package-prefix specs match resolved candidates under the package") {
  std::vector<std::string> sources = {
      "import com.google.firebase.storage.UploadTask;\n"
      "class A {\n"
      "  void go(UploadTask task) { task.resume(); }\n"
      "}\n"};
  auto units = parse_all(sources);
  AnnotationGraph graph;
  ApiList apis = small_api_list();
  auto detected = detect_api_calls(units, graph, apis);
  REQUIRE(detected.size() == 1);
  CHECK(detected[0].spec->is_prefix());
  CHECK(detected[0].confidence == Confidence::High);
}

TEST_CASE("unresolved receiver falls back to name matching at low confidence") {
  std::vector<std::string> sources = {
      "class A { void m() { helper.getLastKnownLocation(p); } }\n"};
  auto units = parse_all(sources);
  AnnotationGraph graph;
  ApiList apis = small_api_list();
  auto detected = detect_api_calls(units, graph, apis);
  REQUIRE(detected.size() == 1);
  CHECK(detected[0].confidence == Confidence::Low);
}

TEST_CASE("detection output is sorted and stable across unit order") {
  std::vector<std::string> sources = {
      "import android.location.LocationManager;\n"
      "class B { void m(LocationManager lm) { lm.getLastKnownLocation(null); } }\n",
      "import android.location.LocationManager;\n"
      "class A { void m(LocationManager lm) { lm.getLastKnownLocation(null); } }\n"};
  auto units = parse_all(sources);
  AnnotationGraph graph;
  ApiList apis = small_api_list();
  auto d1 = detect_api_calls(units, graph, apis);
  std::vector<java::CompilationUnit> reversed;
  reversed.push_back(java::parse_unit(sources[1], "F1.java"));
  reversed.push_back(java::parse_unit(sources[0], "F0.java"));
  auto d2 = detect_api_calls(reversed, graph, apis);
  REQUIRE(d1.size() == 2);
  REQUIRE(d2.size() == 2);
  CHECK(d1[0].unit->file_path == "F0.java");
  CHECK(d2[0].unit->file_path == "F0.java");
}

TEST_CASE("keyword search maps identifiers, literals, and comments") {
  std::vector<std::string> sources = {
      "class A {\n"
      "  SearchHistoryAdapter searchHistoryAdapter;\n"
      "  double lat = loc.getLatitude();\n"
      "  String perm = \"ACCESS_FINE_LOCATION\";\n"
      "  // remember the user id here\n"
      "}\n"};
  auto units = parse_all(sources);
  KeywordList kws = small_keyword_list();
  auto hits = detect_keywords(units, sources, kws);

  bool search_ident = false, latitude_ident = false, perm_string = false,
       userid_comment = false;
  for (const auto& h : hits) {
    if (h.spec->phrase == "search" && h.context == KeywordContext::Identifier)
      search_ident = true;
    if (h.spec->phrase == "latitude" && h.surface_form == "getLatitude")
      latitude_ident = true;
    if (h.spec->phrase == "access_fine_location" &&
        h.context == KeywordContext::StringLiteral)
      perm_string = true;
    if (h.spec->phrase == "user id" && h.context == KeywordContext::Comment)
      userid_comment = true;
  }
  CHECK(search_ident);
  CHECK(latitude_ident);
  CHECK(perm_string);
  CHECK(userid_comment);
}

TEST_CASE("keyword hits are deduplicated per (spec, location)") {
  std::vector<std::string> sources = {
      "class A { int searchSearch; }\n"};  // normalized: "search search"
  auto units = parse_all(sources);
  KeywordList kws = small_keyword_list();
  auto hits = detect_keywords(units, sources, kws);
  int search_hits = 0;
  for (const auto& h : hits)
    if (h.spec->phrase == "search") ++search_hits;
  CHECK(search_hits == 1);  // one identifier occurrence, one hit
}

TEST_CASE("case-insensitivity: uppercasing the corpus preserves the hit set") {
  std::string src =
      "class A {\n"
      "  String searchBox = \"latitude\";\n"
      "  // user id\n"
      "}\n";
  std::string upper = src;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::vector<std::string> lo{src}, hi{upper};
  KeywordList kws = small_keyword_list();
  auto units_lo = parse_all(lo);
  auto units_hi = parse_all(hi);
  auto hits_lo = detect_keywords(units_lo, lo, kws);
  auto hits_hi = detect_keywords(units_hi, hi, kws);
  auto key_set = [](const std::vector<KeywordHit>& hits) {
    std::vector<std::pair<std::string, uint32_t>> keys;
    for (const auto& h : hits) keys.emplace_back(h.spec->phrase, h.span.begin);
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  CHECK(key_set(hits_lo) == key_set(hits_hi));
}

TEST_CASE("gradle dependency extraction") {
  std::string gradle =
      "plugins { id 'com.android.application' }\n"
      "dependencies {\n"
      "    implementation 'com.google.firebase:firebase-auth:21.0.0'\n"
      "    api \"com.google.android.gms:play-services-ads:22.0.0\"\n"
      "    compileOnly('org.projectlombok:lombok:1.18.24')\n"
      "    runtimeOnly \"io.grpc:grpc-okhttp:1.52.0\"\n"
      "    compile 'legacy:dep:1.0'\n"
      "    testImplementation 'junit:junit:4.13'\n"
      "    androidTestImplementation 'androidx.test:runner:1.4.0'\n"
      "    implementation project(':shared')\n"
      "    implementation deps.retrofit\n"
      "    implementation 'com.google.firebase:firebase-auth:21.0.0'\n"
      "}\n";
  GradleScan scan = parse_gradle_dependencies(gradle);
  std::vector<std::string> expected = {
      "com.google.firebase:firebase-auth:21.0.0",
      "com.google.android.gms:play-services-ads:22.0.0",
      "org.projectlombok:lombok:1.18.24",
      "io.grpc:grpc-okhttp:1.52.0",
      "legacy:dep:1.0",
  };
  CHECK(scan.coordinates == expected);
  // junit (test config), androidx runner (test config), project(...), deps.*
  CHECK(scan.ignored_dependency_lines == 4);
}

TEST_CASE("gradle extraction ignores non-dependency files gracefully") {
  GradleScan scan = parse_gradle_dependencies("android { compileSdk 34 }\n");
  CHECK(scan.coordinates.empty());
  CHECK(scan.ignored_dependency_lines == 0);
}
