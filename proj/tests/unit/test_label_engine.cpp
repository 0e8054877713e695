#include "doctest.h"

#include <algorithm>
#include <functional>

#include "matcha/label_engine.hpp"
#include "support/test_util.hpp"

using namespace matcha;
using matcha_testing::Rng;
using matcha_testing::test_taxonomy;

namespace {

// ----------------------------------------------------------------- oracles
// Independent transcriptions of the label-form questions, one predicate per
// exemption row. These deliberately do not reuse the production helpers.

bool oracle_collected(bool transmitted_off_device, bool user_to_user_encryption) {
  // "Is this data collected?" — data transmitted off the device counts;
  // data unreadable by anyone but sender and recipient (end-to-end
  // encryption) does not need to be disclosed.
  if (!transmitted_off_device) return false;
  if (user_to_user_encryption) return false;
  return true;
}

bool oracle_shared(const SharingAttributes& s) {
  if (!s.shared_with_third_party) return false;
  const std::function<bool(const SharingAttributes&)> exemption_rows[] = {
      // service provider processing on behalf of the developer
      [](const SharingAttributes& x) { return x.only_shared_with_service_providers; },
      // specific legal purposes such as a legal obligation
      [](const SharingAttributes& x) { return x.only_shared_for_legal_purposes; },
      // user-initiated action where the user expects the data to be shared
      [](const SharingAttributes& x) { return x.only_initiated_by_user; },
      // prominent in-app disclosure and consent
      [](const SharingAttributes& x) { return x.only_after_getting_user_consent; },
      // fully anonymized so it can no longer be associated with a user
      [](const SharingAttributes& x) { return x.only_transferring_anonymous_data; },
  };
  for (const auto& row : exemption_rows) {
    if (row(s)) return false;
  }
  return true;
}

PracticeFact app_fact(const DataTypeRef& type, bool collected, bool shared) {
  PracticeFact f;
  f.data_type = type;
  f.collected = collected;
  f.shared = shared;
  f.inert = !collected && !shared;
  f.source.kind = FactSource::Kind::App;
  f.provenance.kind = Provenance::Kind::AnnotationSpan;
  f.provenance.file = "App.java";
  f.provenance.line = 10;
  f.encrypted_in_transit = true;
  return f;
}

AnnotationGraph graph_with(const TransmissionAnn& t, const std::vector<DataTypeRef>& types) {
  AnnotationGraph g;
  AccessAnn a;
  a.id = "q";
  a.data_types = types;
  g.accesses["q"] = a;
  TransmissionAnn tt = t;
  tt.access_ids = {"q"};
  g.transmissions.push_back(tt);
  return g;
}

}  // namespace

TEST_CASE("collection truth table matches the oracle over all combinations") {
  const DataTypeRef type{"location", "precise_location"};
  for (int bits = 0; bits < 4; ++bits) {
    TransmissionAnn t;
    t.collection.transmitted_off_device = bits & 1;
    t.collection.user_to_user_encryption = bits & 2;
    t.collection.collected_for = {Purpose::AppFunctionality};
    AnnotationGraph g = graph_with(t, {type});
    auto facts = facts_from_annotations(g);
    REQUIRE(facts.size() == 1);
    CAPTURE(bits);
    CHECK(facts[0].collected ==
          oracle_collected(t.collection.transmitted_off_device,
                           t.collection.user_to_user_encryption));
  }
}

TEST_CASE("sharing truth table matches the oracle over all 64 combinations") {
  const DataTypeRef type{"personal_info", "name"};
  for (int bits = 0; bits < 64; ++bits) {
    TransmissionAnn t;
    t.sharing.shared_with_third_party = bits & 1;
    t.sharing.only_shared_with_service_providers = bits & 2;
    t.sharing.only_shared_for_legal_purposes = bits & 4;
    t.sharing.only_initiated_by_user = bits & 8;
    t.sharing.only_after_getting_user_consent = bits & 16;
    t.sharing.only_transferring_anonymous_data = bits & 32;
    t.sharing.shared_for = {Purpose::AppFunctionality};
    AnnotationGraph g = graph_with(t, {type});
    auto facts = facts_from_annotations(g);
    REQUIRE(facts.size() == 1);
    CAPTURE(bits);
    CHECK(facts[0].shared == oracle_shared(t.sharing));
  }
}

TEST_CASE("spec exemption examples") {
  const DataTypeRef type{"app_activity", "in_app_search_history"};

  SUBCASE("on-device only flow is inert") {
    TransmissionAnn t;  // everything false
    AnnotationGraph g = graph_with(t, {type});
    auto facts = facts_from_annotations(g);
    REQUIRE(facts.size() == 1);
    CHECK(facts[0].inert);
    CHECK_FALSE(facts[0].collected);
    CHECK_FALSE(facts[0].shared);
  }

  SUBCASE("end-to-end user encryption exempts collection") {
    TransmissionAnn t;
    t.collection.transmitted_off_device = true;
    t.collection.user_to_user_encryption = true;
    AnnotationGraph g = graph_with(t, {type});
    auto facts = facts_from_annotations(g);
    CHECK_FALSE(facts[0].collected);
  }

  SUBCASE("service-provider sharing is exempt") {
    TransmissionAnn t;
    t.sharing.shared_with_third_party = true;
    t.sharing.only_shared_with_service_providers = true;
    AnnotationGraph g = graph_with(t, {type});
    auto facts = facts_from_annotations(g);
    CHECK_FALSE(facts[0].shared);
  }
}

TEST_CASE("one fact per transmission, access, data type") {
  AnnotationGraph g;
  AccessAnn a1;
  a1.id = "a";
  a1.data_types = {{"personal_info", "name"}, {"personal_info", "email_address"}};
  AccessAnn a2;
  a2.id = "b";
  a2.data_types = {{"location", "precise_location"}};
  g.accesses["a"] = a1;
  g.accesses["b"] = a2;
  TransmissionAnn t;
  t.access_ids = {"a", "b"};
  t.collection.transmitted_off_device = true;
  g.transmissions.push_back(t);
  auto facts = facts_from_annotations(g);
  CHECK(facts.size() == 3);
}

TEST_CASE("merge_label unions purposes and sources") {
  const DataTypeRef search{"app_activity", "in_app_search_history"};
  PracticeFact f1 = app_fact(search, true, false);
  f1.collection_purposes = {Purpose::AppFunctionality};
  PracticeFact f2 = app_fact(search, true, false);
  f2.collection_purposes = {Purpose::Analytics};
  SafetyLabel label = merge_label({f1, f2});
  REQUIRE(label.rows.count(search));
  CHECK(label.rows[search].collection_purposes ==
        PurposeSet{Purpose::AppFunctionality, Purpose::Analytics});
  CHECK(label.rows[search].source_note() == "by app");
}

TEST_CASE("app collects and sdk shares the same type: one row, both flags") {
  const DataTypeRef ids{"device_or_other_ids", "device_or_other_ids"};
  PracticeFact app = app_fact(ids, true, false);
  PracticeFact sdk = app_fact(ids, false, true);
  sdk.source.kind = FactSource::Kind::Sdk;
  sdk.source.sdk_id = "admob";
  sdk.provenance.kind = Provenance::Kind::KbPractice;
  sdk.provenance.detail = "admob/device-ids-share";
  SafetyLabel label = merge_label({app, sdk});
  REQUIRE(label.rows.size() == 1);
  const LabelRow& row = label.rows[ids];
  CHECK(row.collected);
  CHECK(row.shared);
  CHECK(row.source_note() == "by app and library");

  SafetyLabel sdk_only = merge_label({sdk});
  CHECK(sdk_only.rows[ids].source_note() == "by library");
}

TEST_CASE("ephemeral is an AND over collecting facts") {
  const DataTypeRef type{"app_info_and_performance", "crash_logs"};
  PracticeFact f1 = app_fact(type, true, false);
  f1.ephemeral = true;
  PracticeFact f2 = app_fact(type, true, false);
  f2.ephemeral = false;
  SafetyLabel label = merge_label({f1, f2});
  CHECK_FALSE(label.rows[type].ephemeral);
  SafetyLabel label2 = merge_label({f1});
  CHECK(label2.rows[type].ephemeral);
}

TEST_CASE("required when any collecting fact is non-optional") {
  const DataTypeRef type{"personal_info", "name"};
  PracticeFact opt = app_fact(type, true, false);
  opt.optional = true;
  PracticeFact req = app_fact(type, true, false);
  req.optional = false;
  CHECK(merge_label({opt}).rows[type].required == false);
  CHECK(merge_label({opt, req}).rows[type].required == true);
}

TEST_CASE("inert facts never materialize a row") {
  const DataTypeRef type{"personal_info", "name"};
  PracticeFact inert = app_fact(type, false, false);
  SafetyLabel label = merge_label({inert});
  CHECK(label.rows.empty());
}

TEST_CASE("all_encrypted_in_transit aggregates only collecting app facts") {
  const DataTypeRef type{"personal_info", "name"};
  PracticeFact app = app_fact(type, true, false);
  app.encrypted_in_transit = false;
  PracticeFact sdk = app_fact(type, true, false);
  sdk.source.kind = FactSource::Kind::Sdk;
  sdk.source.sdk_id = "x";
  sdk.encrypted_in_transit = false;
  CHECK(merge_label({sdk}).all_encrypted_in_transit);        // sdk facts don't count
  CHECK_FALSE(merge_label({app}).all_encrypted_in_transit);  // app fact does
}

TEST_CASE("merge_label is invariant under fact permutation") {
  Rng rng(7);
  std::vector<DataTypeRef> types = {{"personal_info", "name"},
                                    {"location", "precise_location"},
                                    {"app_activity", "app_interactions"}};
  std::vector<PracticeFact> facts;
  for (int i = 0; i < 12; ++i) {
    PracticeFact f = app_fact(types[rng.below(3)], rng.flip(), rng.flip());
    f.ephemeral = rng.flip();
    f.optional = rng.flip();
    if (rng.flip()) f.collection_purposes.insert(static_cast<Purpose>(rng.below(7)));
    if (rng.flip()) f.sharing_purposes.insert(static_cast<Purpose>(rng.below(7)));
    f.provenance.line = i;
    facts.push_back(f);
  }
  SafetyLabel l1 = merge_label(facts);
  std::reverse(facts.begin(), facts.end());
  SafetyLabel l2 = merge_label(facts);
  CHECK(diff_labels(l1, l2).empty());
  REQUIRE(l1.rows.size() == l2.rows.size());
  for (const auto& [type, row] : l1.rows) {
    CHECK(l2.rows.at(type).provenance == row.provenance);
  }
}

TEST_CASE("monotonicity: adding a non-inert fact never removes rows or purposes") {
  Rng rng(99);
  std::vector<DataTypeRef> types = {{"personal_info", "name"},
                                    {"messages", "emails"},
                                    {"calendar", "calendar_events"}};
  std::vector<PracticeFact> facts;
  SafetyLabel prev = merge_label(facts);
  for (int i = 0; i < 30; ++i) {
    bool collected = rng.flip();
    bool shared = !collected || rng.flip();
    PracticeFact f = app_fact(types[rng.below(3)], collected, shared);
    if (rng.flip()) f.collection_purposes.insert(static_cast<Purpose>(rng.below(7)));
    if (rng.flip()) f.sharing_purposes.insert(static_cast<Purpose>(rng.below(7)));
    facts.push_back(f);
    SafetyLabel next = merge_label(facts);
    for (const auto& [type, row] : prev.rows) {
      REQUIRE(next.rows.count(type));
      const LabelRow& nrow = next.rows.at(type);
      CHECK(std::includes(nrow.collection_purposes.begin(), nrow.collection_purposes.end(),
                          row.collection_purposes.begin(), row.collection_purposes.end()));
      CHECK(std::includes(nrow.sharing_purposes.begin(), nrow.sharing_purposes.end(),
                          row.sharing_purposes.begin(), row.sharing_purposes.end()));
    }
    prev = std::move(next);
  }
}

TEST_CASE("facts_from_sdks honors verification state") {
  const Taxonomy& tax = test_taxonomy();
  KbLoadResult kbres = load_kb(std::string(MATCHA_TEST_DATA_DIR) + "/sdk_kb.json", "",
                               true, tax);
  REQUIRE(kbres.kb.has_value());
  const SdkKb& kb = *kbres.kb;
  auto matched = match_sdks({"com.google.firebase:firebase-auth:21.0.0",
                             "com.google.android.gms:play-services-ads:22.0.0",
                             "com.ironsource.sdk:mediationsdk:7.0.0"},
                            kb);
  REQUIRE(matched.size() == 3);

  SUBCASE("no overlay: always facts plus UnverifiedLibrary and ConsultGuideline") {
    SdkFactsResult res = facts_from_sdks(matched, std::nullopt);
    bool admob_fact = false;
    for (const PracticeFact& f : res.facts) {
      CHECK(f.source.kind == FactSource::Kind::Sdk);
      if (f.source.sdk_id == "admob" &&
          f.data_type == DataTypeRef{"device_or_other_ids", "device_or_other_ids"})
        admob_fact = true;
      // No optional facts without verification.
      CHECK(f.provenance.kind == Provenance::Kind::KbPractice);
    }
    CHECK(admob_fact);
    int unverified = 0, consult = 0;
    for (const auto& d : res.diagnostics) {
      if (d.code == codes::UnverifiedLibrary) ++unverified;
      if (d.code == codes::ConsultGuideline) ++consult;
    }
    CHECK(unverified == 2);  // admob + firebase-auth both have optional practices
    CHECK(consult == 1);     // ironsource practices are not bundled
  }

  SUBCASE("verified overlay with a removed data element") {
    SyncResult gen = sync_custom_usage_xml(matched, std::nullopt, kb, "f.xml");
    std::string edited = gen.xml;
    size_t begin = edited.find("    <data key=\"display-name-collect\"");
    REQUIRE(begin != std::string::npos);
    size_t end = edited.find("/>\n", begin);
    edited.erase(begin, end + 3 - begin);
    while (true) {
      size_t v = edited.find("verified=\"false\"");
      if (v == std::string::npos) break;
      edited.replace(v, 16, "verified=\"true\"");
    }
    XmlParseResult parsed = parse_custom_usage_xml(edited, kb, "f.xml");
    REQUIRE(parsed.doc.has_value());
    SdkFactsResult res = facts_from_sdks(matched, parsed.doc);
    bool display_name = false, phone = false;
    for (const PracticeFact& f : res.facts) {
      if (f.source.sdk_id == "firebase-auth" &&
          f.data_type == DataTypeRef{"personal_info", "name"})
        display_name = true;
      if (f.source.sdk_id == "firebase-auth" &&
          f.data_type == DataTypeRef{"personal_info", "phone_number"})
        phone = true;
    }
    CHECK_FALSE(display_name);  // removed <data> stays removed
    CHECK(phone);               // retained optional practice produces a fact
    for (const auto& d : res.diagnostics) CHECK(d.code != codes::UnverifiedLibrary);
  }
}

TEST_CASE("no output fact carries provenance from an unverified library") {
  const Taxonomy& tax = test_taxonomy();
  KbLoadResult kbres = load_kb(std::string(MATCHA_TEST_DATA_DIR) + "/sdk_kb.json", "",
                               true, tax);
  REQUIRE(kbres.kb.has_value());
  auto matched = match_sdks({"com.google.firebase:firebase-auth:21.0.0"}, *kbres.kb);
  SdkFactsResult res = facts_from_sdks(matched, std::nullopt);
  for (const PracticeFact& f : res.facts) {
    CHECK(f.provenance.kind != Provenance::Kind::XmlElement);
  }
}

TEST_CASE("diff_labels") {
  const DataTypeRef name{"personal_info", "name"};
  const DataTypeRef loc{"location", "precise_location"};

  SUBCASE("identical labels diff empty") {
    SafetyLabel a = merge_label({app_fact(name, true, false)});
    SafetyLabel b = merge_label({app_fact(name, true, false)});
    CHECK(diff_labels(a, b).empty());
  }

  SUBCASE("provenance differences are ignored") {
    PracticeFact f1 = app_fact(name, true, false);
    PracticeFact f2 = app_fact(name, true, false);
    f2.provenance.line = 999;
    CHECK(diff_labels(merge_label({f1}), merge_label({f2})).empty());
  }

  SUBCASE("single field delta is reported and mirrored") {
    PracticeFact f1 = app_fact(name, true, false);
    PracticeFact f2 = app_fact(name, true, true);
    f2.sharing_purposes = {};
    SafetyLabel a = merge_label({f1});
    SafetyLabel b = merge_label({f2});
    LabelDiff ab = diff_labels(a, b);
    REQUIRE(ab.changed.count(name));
    bool shared_change = false;
    for (const auto& c : ab.changed[name])
      if (c.field == "shared" && c.before == "false" && c.after == "true")
        shared_change = true;
    CHECK(shared_change);
    LabelDiff ba = diff_labels(b, a);
    REQUIRE(ba.changed.count(name));
    bool mirrored = false;
    for (const auto& c : ba.changed[name])
      if (c.field == "shared" && c.before == "true" && c.after == "false") mirrored = true;
    CHECK(mirrored);
  }

  SUBCASE("added and removed rows mirror") {
    SafetyLabel empty;
    SafetyLabel one = merge_label({app_fact(loc, true, false)});
    LabelDiff ab = diff_labels(empty, one);
    REQUIRE(ab.added.size() == 1);
    CHECK(ab.added[0] == loc);
    LabelDiff ba = diff_labels(one, empty);
    REQUIRE(ba.removed.size() == 1);
    CHECK(ba.removed[0] == loc);
  }
}
