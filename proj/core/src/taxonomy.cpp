#include "matcha/taxonomy.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace matcha {

using nlohmann::json;

std::optional<Taxonomy> Taxonomy::load_file(const std::string& path, std::string* error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (error) *error = "cannot open " + path;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), error);
}

std::optional<Taxonomy> Taxonomy::load_text(const std::string& json_text, std::string* error) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    if (error) *error = "taxonomy: invalid JSON";
    return std::nullopt;
  }
  Taxonomy tax;
  try {
    tax.version_ = doc.at("version").get<int>();
    for (const auto& p : doc.at("purposes")) {
      tax.purposes_.push_back({p.at("id").get<std::string>(),
                               p.at("display").get<std::string>(),
                               p.at("constant").get<std::string>()});
    }
    for (const auto& c : doc.at("categories")) {
      CategoryInfo cat;
      cat.id = c.at("id").get<std::string>();
      cat.display = c.at("display").get<std::string>();
      cat.constant = c.at("constant").get<std::string>();
      for (const auto& t : c.at("data_types")) {
        cat.data_types.push_back({t.at("id").get<std::string>(),
                                  t.at("display").get<std::string>(),
                                  t.at("constant").get<std::string>()});
      }
      tax.categories_.push_back(std::move(cat));
    }
  } catch (const json::exception& e) {
    if (error) *error = std::string("taxonomy: ") + e.what();
    return std::nullopt;
  }
  if (tax.purposes_.size() != kPurposeCount) {
    if (error) *error = "taxonomy: expected exactly 7 purposes";
    return std::nullopt;
  }
  return tax;
}

std::optional<DataTypeRef> Taxonomy::type_by_constant(const std::string& constant) const {
  for (const auto& cat : categories_) {
    for (const auto& t : cat.data_types) {
      if (t.constant == constant) return DataTypeRef{cat.id, t.id};
    }
  }
  return std::nullopt;
}

std::optional<DataTypeRef> Taxonomy::type_by_qualified_id(const std::string& qualified) const {
  auto dot = qualified.find('.');
  if (dot == std::string::npos) return std::nullopt;
  DataTypeRef ref{qualified.substr(0, dot), qualified.substr(dot + 1)};
  if (has_type(ref)) return ref;
  return std::nullopt;
}

bool Taxonomy::has_type(const DataTypeRef& ref) const {
  return type_info(ref) != nullptr;
}

const CategoryInfo* Taxonomy::category(const std::string& id) const {
  for (const auto& cat : categories_) {
    if (cat.id == id) return &cat;
  }
  return nullptr;
}

const DataTypeInfo* Taxonomy::type_info(const DataTypeRef& ref) const {
  const CategoryInfo* cat = category(ref.category_id);
  if (!cat) return nullptr;
  for (const auto& t : cat->data_types) {
    if (t.id == ref.type_id) return &t;
  }
  return nullptr;
}

std::string Taxonomy::type_constant(const DataTypeRef& ref) const {
  const DataTypeInfo* t = type_info(ref);
  return t ? t->constant : "";
}

std::string Taxonomy::type_display(const DataTypeRef& ref) const {
  const DataTypeInfo* t = type_info(ref);
  return t ? t->display : ref.qualified();
}

std::string Taxonomy::category_display(const std::string& category_id) const {
  const CategoryInfo* cat = category(category_id);
  return cat ? cat->display : category_id;
}

std::optional<Purpose> Taxonomy::purpose_by_constant(const std::string& constant) const {
  for (size_t i = 0; i < purposes_.size(); ++i) {
    if (purposes_[i].constant == constant) return static_cast<Purpose>(i);
  }
  return std::nullopt;
}

std::optional<Purpose> Taxonomy::purpose_by_id(const std::string& id) const {
  for (size_t i = 0; i < purposes_.size(); ++i) {
    if (purposes_[i].id == id) return static_cast<Purpose>(i);
  }
  return std::nullopt;
}

const PurposeInfo& Taxonomy::purpose_info(Purpose p) const {
  return purposes_[static_cast<size_t>(p)];
}

std::vector<DataTypeRef> Taxonomy::all_types() const {
  std::vector<DataTypeRef> out;
  for (const auto& cat : categories_) {
    for (const auto& t : cat.data_types) out.push_back({cat.id, t.id});
  }
  return out;
}

std::string purpose_constant(const Taxonomy& tax, Purpose p) {
  return tax.purpose_info(p).constant;
}

std::string render_purpose_set(const Taxonomy& tax, const PurposeSet& purposes,
                               const std::string& sep, bool display_names) {
  std::string out;
  for (Purpose p : purposes) {
    if (!out.empty()) out += sep;
    out += display_names ? tax.purpose_info(p).display : tax.purpose_info(p).id;
  }
  return out;
}

}  // namespace matcha
