#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "matcha/annotation_model.hpp"
#include "matcha/java_parser.hpp"
#include "support/test_util.hpp"

using namespace matcha;
using matcha_testing::Rng;
using matcha_testing::test_taxonomy;

namespace {

LowerResult lower_text(const std::string& text) {
  auto raw = java::parse_annotation_text(text);
  REQUIRE(raw.has_value());
  SourceLoc loc{"T.java", 1, 1, ""};
  return lower_annotation(*raw, loc, test_taxonomy());
}

std::string full_transmission_text(const std::string& extra_collection = "",
                                   const std::string& extra_sharing = "") {
  return "@DataTransmission(accessId = {\"q\"}, collectionAttribute = {"
         "CollectionAttribute.TRANSMITTED_OFF_DEVICE_TRUE, "
         "CollectionAttribute.NOT_STORED_IN_BACKEND_FALSE, "
         "CollectionAttribute.ENCRYPTED_IN_TRANSIT_TRUE, "
         "CollectionAttribute.OPTIONAL_COLLECTION_FALSE, "
         "CollectionAttribute.USER_TO_USER_ENCRYPTION_FALSE" +
         extra_collection +
         "}, sharingAttribute = {"
         "SharingAttribute.SHARED_WITH_THIRD_PARTY_FALSE, "
         "SharingAttribute.ONLY_SHARED_WITH_SERVICE_PROVIDERS_FALSE, "
         "SharingAttribute.ONLY_SHARED_FOR_LEGAL_PURPOSES_FALSE, "
         "SharingAttribute.ONLY_INITIATED_BY_USER_FALSE, "
         "SharingAttribute.ONLY_AFTER_GETTING_USER_CONSENT_FALSE, "
         "SharingAttribute.ONLY_TRANSFERRING_ANONYMOUS_DATA_FALSE" +
         extra_sharing + "})";
}

AccessAnn make_access(const std::string& id, std::vector<DataTypeRef> types) {
  AccessAnn a;
  a.id = id;
  a.data_types = std::move(types);
  std::sort(a.data_types.begin(), a.data_types.end());
  return a;
}

}  // namespace

TEST_CASE("lowering a DataAccess annotation") {
  auto res = lower_text("@DataAccess(id = \"q\", dataType = {DataType.InAppSearchHistory})");
  REQUIRE(res.ok());
  const auto& access = std::get<AccessAnn>(*res.value);
  CHECK_FALSE(access.marker);
  CHECK(access.id == "q");
  REQUIRE(access.data_types.size() == 1);
  CHECK(access.data_types[0] == DataTypeRef{"app_activity", "in_app_search_history"});
}

TEST_CASE("markers lower with no fields; fields on markers are errors") {
  auto res = lower_text("@NotPersonalDataTransmission");
  REQUIRE(res.ok());
  CHECK(std::get<TransmissionAnn>(*res.value).marker);

  auto bad = lower_text("@NotPersonalDataAccess(id = \"x\")");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.diagnostics.front().code == codes::UnknownField);
}

TEST_CASE("conflicting boolean group is rejected") {
  auto res = lower_text(
      "@DataTransmission(accessId = {\"q\"}, collectionAttribute = {"
      "CollectionAttribute.TRANSMITTED_OFF_DEVICE_TRUE, "
      "CollectionAttribute.TRANSMITTED_OFF_DEVICE_FALSE, "
      "CollectionAttribute.NOT_STORED_IN_BACKEND_FALSE, "
      "CollectionAttribute.ENCRYPTED_IN_TRANSIT_TRUE, "
      "CollectionAttribute.OPTIONAL_COLLECTION_FALSE, "
      "CollectionAttribute.USER_TO_USER_ENCRYPTION_FALSE"
      "}, sharingAttribute = {"
      "SharingAttribute.SHARED_WITH_THIRD_PARTY_FALSE, "
      "SharingAttribute.ONLY_SHARED_WITH_SERVICE_PROVIDERS_FALSE, "
      "SharingAttribute.ONLY_SHARED_FOR_LEGAL_PURPOSES_FALSE, "
      "SharingAttribute.ONLY_INITIATED_BY_USER_FALSE, "
      "SharingAttribute.ONLY_AFTER_GETTING_USER_CONSENT_FALSE, "
      "SharingAttribute.ONLY_TRANSFERRING_ANONYMOUS_DATA_FALSE})");
  REQUIRE_FALSE(res.ok());
  bool found = false;
  for (const auto& d : res.diagnostics)
    if (d.code == codes::ConflictingBooleanGroup) found = true;
  CHECK(found);
}

TEST_CASE("missing boolean group names the group") {
  auto res = lower_text(
      "@DataTransmission(accessId = {\"q\"}, collectionAttribute = {"
      "CollectionAttribute.TRANSMITTED_OFF_DEVICE_TRUE"
      "}, sharingAttribute = {"
      "SharingAttribute.SHARED_WITH_THIRD_PARTY_FALSE, "
      "SharingAttribute.ONLY_SHARED_WITH_SERVICE_PROVIDERS_FALSE, "
      "SharingAttribute.ONLY_SHARED_FOR_LEGAL_PURPOSES_FALSE, "
      "SharingAttribute.ONLY_INITIATED_BY_USER_FALSE, "
      "SharingAttribute.ONLY_AFTER_GETTING_USER_CONSENT_FALSE, "
      "SharingAttribute.ONLY_TRANSFERRING_ANONYMOUS_DATA_FALSE})");
  REQUIRE_FALSE(res.ok());
  bool found = false;
  for (const auto& d : res.diagnostics) {
    if (d.code == codes::MissingBooleanGroup &&
        d.message.find("NOT_STORED_IN_BACKEND") != std::string::npos)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("unknown fields and unknown constants are flagged") {
  auto res = lower_text("@DataAccess(id = \"q\", dataType = {DataType.Nope}, extra = \"x\")");
  REQUIRE_FALSE(res.ok());
  bool unknown_field = false, unknown_constant = false;
  for (const auto& d : res.diagnostics) {
    if (d.code == codes::UnknownField) unknown_field = true;
    if (d.code == codes::UnknownEnumConstant) unknown_constant = true;
  }
  CHECK(unknown_field);
  CHECK(unknown_constant);
}

TEST_CASE("purposes are collected from COLLECTED_FOR / SHARED_FOR constants") {
  auto res = lower_text(full_transmission_text(
      ", CollectionAttribute.COLLECTED_FOR_ANALYTICS, "
      "CollectionAttribute.COLLECTED_FOR_APP_FUNCTIONALITY",
      ", SharingAttribute.SHARED_FOR_PERSONALIZATION"));
  REQUIRE(res.ok());
  const auto& t = std::get<TransmissionAnn>(*res.value);
  CHECK(t.collection.collected_for ==
        PurposeSet{Purpose::AppFunctionality, Purpose::Analytics});
  CHECK(t.sharing.shared_for == PurposeSet{Purpose::Personalization});
  CHECK(t.collection.transmitted_off_device);
  CHECK_FALSE(t.sharing.shared_with_third_party);
}

TEST_CASE("render then lower is the identity on random annotations") {
  const Taxonomy& tax = test_taxonomy();
  std::vector<DataTypeRef> all_types = tax.all_types();
  Rng rng(20240817);
  for (int iter = 0; iter < 200; ++iter) {
    LoweredAnn original;
    if (rng.flip()) {
      AccessAnn a;
      a.marker = rng.below(5) == 0;
      if (!a.marker) {
        a.id = "id" + std::to_string(rng.below(1000));
        std::set<DataTypeRef> types;
        uint32_t n = 1 + rng.below(3);
        for (uint32_t i = 0; i < n; ++i)
          types.insert(all_types[rng.below(static_cast<uint32_t>(all_types.size()))]);
        a.data_types.assign(types.begin(), types.end());
      }
      original = a;
    } else {
      TransmissionAnn t;
      t.marker = rng.below(5) == 0;
      if (!t.marker) {
        uint32_t ids = 1 + rng.below(2);
        for (uint32_t i = 0; i < ids; ++i)
          t.access_ids.push_back("a" + std::to_string(rng.below(50)));
        t.collection.transmitted_off_device = rng.flip();
        t.collection.not_stored_in_backend = rng.flip();
        t.collection.encrypted_in_transit = rng.flip();
        t.collection.optional_collection = rng.flip();
        t.collection.user_to_user_encryption = rng.flip();
        t.sharing.shared_with_third_party = rng.flip();
        t.sharing.only_shared_with_service_providers = rng.flip();
        t.sharing.only_shared_for_legal_purposes = rng.flip();
        t.sharing.only_initiated_by_user = rng.flip();
        t.sharing.only_after_getting_user_consent = rng.flip();
        t.sharing.only_transferring_anonymous_data = rng.flip();
        for (int p = 0; p < kPurposeCount; ++p) {
          if (rng.below(4) == 0) t.collection.collected_for.insert(static_cast<Purpose>(p));
          if (rng.below(4) == 0) t.sharing.shared_for.insert(static_cast<Purpose>(p));
        }
      }
      original = t;
    }
    std::string text = render_annotation(original, tax);
    auto raw = java::parse_annotation_text(text);
    REQUIRE(raw.has_value());
    SourceLoc loc{"T.java", 1, 1, ""};
    LowerResult res = lower_annotation(*raw, loc, tax);
    REQUIRE_MESSAGE(res.ok(), "failed to re-lower: " << text);
    CHECK(*res.value == original);
  }
}

TEST_CASE("build_graph links transmissions to accesses") {
  const Taxonomy& tax = test_taxonomy();
  auto q = make_access("q", {*tax.type_by_constant("InAppSearchHistory")});
  TransmissionAnn t;
  t.access_ids = {"q"};
  GraphResult res = build_graph({LoweredAnn{q}, LoweredAnn{t}});
  CHECK(res.diagnostics.empty());
  CHECK(res.graph.accesses.count("q") == 1);
  CHECK(res.graph.transmissions.size() == 1);
}

TEST_CASE("duplicate and dangling access ids are reported") {
  const Taxonomy& tax = test_taxonomy();
  auto a1 = make_access("loc", {*tax.type_by_constant("PreciseLocation")});
  auto a2 = make_access("loc", {*tax.type_by_constant("ApproximateLocation")});
  GraphResult dup = build_graph({LoweredAnn{a1}, LoweredAnn{a2}});
  REQUIRE(dup.diagnostics.size() == 1);
  CHECK(dup.diagnostics[0].code == codes::DuplicateAccessId);

  TransmissionAnn t;
  t.access_ids = {"nope"};
  GraphResult dangling = build_graph({LoweredAnn{t}});
  REQUIRE(dangling.diagnostics.size() == 1);
  CHECK(dangling.diagnostics[0].code == codes::DanglingAccessId);
}

TEST_CASE("build_graph is order-insensitive") {
  const Taxonomy& tax = test_taxonomy();
  std::vector<LoweredAnn> anns;
  anns.push_back(make_access("a", {*tax.type_by_constant("Name")}));
  anns.push_back(make_access("b", {*tax.type_by_constant("Photos")}));
  TransmissionAnn t1;
  t1.access_ids = {"a"};
  anns.push_back(t1);
  TransmissionAnn t2;
  t2.access_ids = {"missing"};
  anns.push_back(t2);

  std::vector<LoweredAnn> shuffled = anns;
  std::reverse(shuffled.begin(), shuffled.end());
  GraphResult r1 = build_graph(anns);
  GraphResult r2 = build_graph(shuffled);
  CHECK(r1.graph.accesses.size() == r2.graph.accesses.size());
  CHECK(r1.graph.transmissions.size() == r2.graph.transmissions.size());
  REQUIRE(r1.diagnostics.size() == r2.diagnostics.size());
  for (size_t i = 0; i < r1.diagnostics.size(); ++i)
    CHECK(r1.diagnostics[i].code == r2.diagnostics[i].code);
}

TEST_CASE("validate_graph rules") {
  const Taxonomy& tax = test_taxonomy();

  SUBCASE("off-device transmission without purposes is an error") {
    auto a = make_access("q", {*tax.type_by_constant("InAppSearchHistory")});
    TransmissionAnn t;
    t.access_ids = {"q"};
    t.collection.transmitted_off_device = true;
    GraphResult g = build_graph({LoweredAnn{a}, LoweredAnn{t}});
    auto diags = validate_graph(g.graph);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == codes::MissingCollectionPurposes);
    CHECK(diags[0].severity == Severity::Error);
  }

  SUBCASE("unreferenced access is a warning") {
    auto a = make_access("q", {*tax.type_by_constant("Name")});
    GraphResult g = build_graph({LoweredAnn{a}});
    auto diags = validate_graph(g.graph);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == codes::UnreferencedAccess);
    CHECK(diags[0].severity == Severity::Warning);
  }

  SUBCASE("unexempted sharing without purposes is an error") {
    auto a = make_access("q", {*tax.type_by_constant("Name")});
    TransmissionAnn t;
    t.access_ids = {"q"};
    t.sharing.shared_with_third_party = true;
    GraphResult g = build_graph({LoweredAnn{a}, LoweredAnn{t}});
    auto diags = validate_graph(g.graph);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == codes::MissingSharingPurposes);
  }

  SUBCASE("fully specified flow validates cleanly") {
    auto a = make_access("q", {*tax.type_by_constant("InAppSearchHistory")});
    TransmissionAnn t;
    t.access_ids = {"q"};
    t.collection.transmitted_off_device = true;
    t.collection.encrypted_in_transit = true;
    t.collection.collected_for = {Purpose::AppFunctionality};
    GraphResult g = build_graph({LoweredAnn{a}, LoweredAnn{t}});
    CHECK(validate_graph(g.graph).empty());
  }

  SUBCASE("purposes on excluded flows warn") {
    auto a = make_access("q", {*tax.type_by_constant("Name")});
    TransmissionAnn t;
    t.access_ids = {"q"};
    t.collection.transmitted_off_device = false;
    t.collection.collected_for = {Purpose::Analytics};
    GraphResult g = build_graph({LoweredAnn{a}, LoweredAnn{t}});
    auto diags = validate_graph(g.graph);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == codes::UnusedPurposes);
    CHECK(diags[0].severity == Severity::Warning);
  }
}

TEST_CASE("every data type belongs to exactly one category") {
  const Taxonomy& tax = test_taxonomy();
  std::map<std::string, int> seen;
  for (const auto& cat : tax.categories()) {
    for (const auto& t : cat.data_types) seen[t.constant]++;
  }
  for (const auto& [constant, count] : seen) {
    CAPTURE(constant);
    CHECK(count == 1);
  }
  CHECK(tax.purposes().size() == 7);
}
