#pragma once

// JSON files. Ideal: {"field":"QQ","nvars":2,"gens":["x1*x2 - 1"]}.
// Slice dataset: {"field":"fp:13","nvars":2,"mode":"sectional",
//                 "slices":[{"alpha":"6","g":"x1 + 9"}]}
// with "mode":"full" records carrying "gens":[...] instead of "g". Record
// polynomials live in the nvars - 1 reindexed variables. Scalars are strings.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "xsect/slicing.hpp"
#include "xsect/text.hpp"

namespace xsect {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string get_string(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) fail(ErrorKind::InvalidArgument, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

inline std::size_t get_count(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned()) fail(ErrorKind::InvalidArgument, std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

inline std::vector<std::string> get_strings(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) fail(ErrorKind::InvalidArgument, std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) fail(ErrorKind::InvalidArgument, std::string("entries of \"") + key + "\" must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

template <Field K>
std::vector<MultiPoly<K>> parse_all(const std::vector<std::string>& texts, std::size_t nvars, const K& field) {
  std::vector<MultiPoly<K>> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, nvars, field));
  return out;
}

template <Field K>
Json strings_of(const std::vector<MultiPoly<K>>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_string(p));
  return arr;
}

}  // namespace detail

inline FieldSpec read_field(const Json& j) { return FieldSpec::parse(detail::get_string(j, "field")); }

template <Field K>
Ideal<K> ideal_from_json(const K& field, const Json& j) {
  if (!(read_field(j) == field.spec())) fail(ErrorKind::FieldMismatch, "file is over " + read_field(j).to_string());
  const std::size_t n = detail::get_count(j, "nvars");
  auto gens = detail::get_strings(j, "gens");
  return Ideal<K>(field, n, detail::parse_all(gens, n, field));
}

template <Field K>
Json ideal_to_json(const K& field, std::size_t nvars, const std::vector<MultiPoly<K>>& gens) {
  Json j;
  j["field"] = field.spec().to_string();
  j["nvars"] = nvars;
  j["gens"] = detail::strings_of(gens);
  return j;
}

template <Field K>
Json ideal_to_json(const Ideal<K>& I) {
  return ideal_to_json(I.field(), I.nvars(), I.gens());
}

template <Field K>
SliceDataset<K> dataset_from_json(const K& field, const Json& j) {
  if (!(read_field(j) == field.spec())) fail(ErrorKind::FieldMismatch, "file is over " + read_field(j).to_string());
  const std::size_t n = detail::get_count(j, "nvars");
  if (n < 2) fail(ErrorKind::InvalidArgument, "datasets need nvars >= 2");
  const std::string mode = detail::get_string(j, "mode");
  SliceDataset<K> ds{field, n, SliceMode::FullSlices, {}};
  if (mode == "sectional") {
    ds.mode = SliceMode::SectionalGenerators;
  } else if (mode != "full") {
    fail(ErrorKind::InvalidArgument, "mode must be \"full\" or \"sectional\"");
  }
  const Json& slices = detail::member(j, "slices");
  if (!slices.is_array()) fail(ErrorKind::InvalidArgument, "\"slices\" must be an array");
  std::vector<typename K::Element> alphas;
  for (const auto& rec : slices) {
    auto alpha = field.parse(detail::get_string(rec, "alpha"));
    std::vector<MultiPoly<K>> gens;
    if (ds.mode == SliceMode::SectionalGenerators) {
      gens.push_back(parse_poly(detail::get_string(rec, "g"), n - 1, field));
    } else {
      gens = detail::parse_all(detail::get_strings(rec, "gens"), n - 1, field);
      if (gens.empty()) fail(ErrorKind::InvalidArgument, "a full slice needs at least one generator");
    }
    alphas.push_back(alpha);
    ds.slices.push_back({alpha, std::move(gens)});
  }
  require_distinct<K>(alphas, ErrorKind::DuplicatePoints);
  return ds;
}

template <Field K>
Json dataset_to_json(const SliceDataset<K>& ds) {
  Json j;
  j["field"] = ds.field.spec().to_string();
  j["nvars"] = ds.nvars;
  j["mode"] = ds.mode == SliceMode::SectionalGenerators ? "sectional" : "full";
  Json arr = Json::array();
  for (const auto& rec : ds.slices) {
    Json r;
    r["alpha"] = rec.alpha.to_string();
    if (ds.mode == SliceMode::SectionalGenerators) {
      r["g"] = to_string(rec.gens.front());
    } else {
      r["gens"] = detail::strings_of(rec.gens);
    }
    arr.push_back(std::move(r));
  }
  j["slices"] = std::move(arr);
  return j;
}

}  // namespace xsect
