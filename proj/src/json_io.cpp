#include "iterlab/json_io.hpp"

namespace iterlab {

namespace {

FinObj obj_from(const json& j, const char* size_key, const char* labels_key) {
  if (!j.contains(size_key) || !j[size_key].is_number_integer()) {
    throw FormatError(std::string("missing integer field \"") + size_key + "\"");
  }
  const int n = j[size_key].get<int>();
  if (j.contains(labels_key)) {
    auto labels = j[labels_key].get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n) {
      throw FormatError(std::string("\"") + labels_key + "\" has " + std::to_string(labels.size()) +
                        " entries for an object of size " + std::to_string(n));
    }
    return FinObj(std::move(labels));
  }
  return FinObj(n);
}

MatObj matobj_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw FormatError(std::string("missing array field \"") + key + "\"");
  MatObj out;
  for (const auto& n : j[key]) {
    if (!n.is_number_integer()) throw FormatError(std::string("\"") + key + "\" must list object sizes");
    out.emplace_back(n.get<int>());
  }
  return out;
}

}  // namespace

json map_to_json(const PartialMap& f) {
  json t = json::array();
  for (int y : f.table()) {
    if (y == kUndef) {
      t.push_back(nullptr);
    } else {
      t.push_back(y);
    }
  }
  json j = {{"dom", f.dom().size()}, {"cod", f.cod().size()}, {"table", t}};
  if (f.dom().labeled()) j["dom_labels"] = f.dom().labels();
  if (f.cod().labeled()) j["cod_labels"] = f.cod().labels();
  return j;
}

PartialMap map_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("a map must be a JSON object");
  FinObj dom = obj_from(j, "dom", "dom_labels");
  FinObj cod = obj_from(j, "cod", "cod_labels");
  if (!j.contains("table") || !j["table"].is_array()) throw FormatError("missing array field \"table\"");
  std::vector<int> t;
  for (const auto& e : j["table"]) {
    if (e.is_null()) {
      t.push_back(kUndef);
    } else if (e.is_number_integer()) {
      t.push_back(e.get<int>());
    } else {
      throw FormatError("table entries must be null or integers");
    }
  }
  return PartialMap(std::move(dom), std::move(cod), std::move(t));
}

json matrix_to_json(const Matrix& m) {
  json dom = json::array(), cod = json::array(), rows = json::array();
  for (const auto& o : m.dom()) dom.push_back(o.size());
  for (const auto& o : m.cod()) cod.push_back(o.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(map_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"dom", dom}, {"cod", cod}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("a matrix must be a JSON object");
  MatObj dom = matobj_from(j, "dom");
  MatObj cod = matobj_from(j, "cod");
  if (!j.contains("entries") || !j["entries"].is_array()) throw FormatError("missing array field \"entries\"");
  const auto& rows = j["entries"];
  if (rows.size() != dom.size()) throw FormatError("\"entries\" must have one row per domain part");
  std::vector<PartialMap> e;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cod.size()) {
      throw FormatError("each row of \"entries\" must have one map per codomain part");
    }
    for (const auto& m : row) e.push_back(map_from_json(m));
  }
  return Matrix(std::move(dom), std::move(cod), std::move(e));
}

json dj_to_json(const DjMap& s) {
  json gens = json::array();
  for (const auto& g : s.gens()) gens.push_back(map_to_json(g));
  return {{"dom", s.dom().size()}, {"cod", s.cod().size()}, {"gens", gens}};
}

DjMap dj_from_json(const json& j, const InterferenceRel& rel) {
  if (!j.is_object()) throw FormatError("a DJ map must be a JSON object");
  FinObj dom = obj_from(j, "dom", "dom_labels");
  FinObj cod = obj_from(j, "cod", "cod_labels");
  if (!j.contains("gens") || !j["gens"].is_array()) throw FormatError("missing array field \"gens\"");
  std::vector<PartialMap> gens;
  for (const auto& g : j["gens"]) gens.push_back(map_from_json(g));
  return DjMap(std::move(dom), std::move(cod), std::move(gens), rel);
}

InterferenceRel relation_from_json(const json& j) {
  std::map<int, InterferenceRel::PairList> by_size;
  auto one = [&](const json& o) {
    if (!o.is_object() || !o.contains("object_size") || !o.contains("pairs")) {
      throw FormatError("a custom relation needs \"object_size\" and \"pairs\"");
    }
    auto& list = by_size[o["object_size"].get<int>()];
    for (const auto& p : o["pairs"]) {
      if (!p.is_array() || p.size() != 2) throw FormatError("each pair must be [maskA, maskB]");
      list.emplace_back(p[0].get<InterferenceRel::Mask>(), p[1].get<InterferenceRel::Mask>());
    }
  };
  if (j.is_array()) {
    for (const auto& o : j) one(o);
  } else {
    one(j);
  }
  return InterferenceRel::custom(by_size);
}

json relation_to_json(const InterferenceRel& rel) {
  if (rel.kind() != RelKind::custom) return rel.name();
  json out = json::array();
  for (int n : rel.custom_sizes()) {
    json pairs = json::array();
    for (auto [a, b] : rel.pairs(n)) pairs.push_back({a, b});
    out.push_back({{"object_size", n}, {"pairs", pairs}});
  }
  return out;
}

}  // namespace iterlab
