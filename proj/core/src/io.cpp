#include "fhollow/io.hpp"

#include <json.hpp>

namespace fhollow {

using nlohmann::json;

namespace {

Rational coordinate(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad coordinate: ") + e.what());
    }
  }
  throw ParseError("coordinate must be an integer or a \"p/q\" string");
}

json coordinate_json(const Rational& r) {
  if (r.is_integer() && r.num().is_small()) return r.num().small();
  return r.str();
}

json integer_json(const Integer& v) {
  if (v.is_small()) return v.small();
  return v.str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<int64_t>());
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  throw ParseError("expected an integer");
}

}  // namespace

PolytopeFile parse_polytope_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices"))
    throw ParseError("polytope file needs \"dim\" and \"vertices\"");
  if (!doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const int64_t dim = doc["dim"].get<int64_t>();
  if (dim < 1 || dim > static_cast<int64_t>(kMaxAmbientDim))
    throw DimensionError("dimension " + std::to_string(dim) + " outside [1, 5]");
  const json& rows = doc["vertices"];
  if (!rows.is_array() || rows.empty()) throw ParseError("\"vertices\" must be a nonempty array");

  PolytopeFile file;
  file.dim = static_cast<size_t>(dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != file.dim)
      throw ParseError("vertex row of length other than " + std::to_string(dim));
    RatVector v;
    for (const auto& c : row) v.push_back(coordinate(c));
    file.vertices.push_back(std::move(v));
  }
  return file;
}

std::string serialize_polytope_file(const PolytopeFile& file) {
  json rows = json::array();
  for (const auto& v : file.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(coordinate_json(x));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dim"] = file.dim;
  doc["vertices"] = std::move(rows);
  return doc.dump();
}

std::string result_header(const std::string& target) {
  json h;
  h["schema"] = "fhollow-result";
  h["version"] = kResultSchemaVersion;
  h["target"] = target;
  return h.dump();
}

std::string serialize_result_line(const ResultLine& r) {
  json j;
  j["digest"] = r.digest;
  json rows = json::array();
  for (const auto& v : r.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(integer_json(x));
    rows.push_back(std::move(row));
  }
  j["vertices"] = std::move(rows);
  j["width"] = integer_json(r.width);
  j["mu"] = r.mu.str();
  j["dim_F_at_mu"] = r.dim_fine_at_mu;
  j["flags"] = {{"F_hollow", r.f_hollow},
                {"weakly_sporadic", r.weakly_sporadic},
                {"sporadic", r.sporadic},
                {"canonically_closed_at_mu", r.canonically_closed_at_mu}};
  j["gorenstein_index"] = r.gorenstein_index ? integer_json(*r.gorenstein_index) : json(nullptr);
  j["provenance"] = r.provenance;
  return j.dump();
}

ResultLine parse_result_line(const std::string& line) {
  try {
    json j = json::parse(line);
    ResultLine r;
    r.digest = j.at("digest").get<std::string>();
    for (const auto& row : j.at("vertices")) {
      IntVector v;
      for (const auto& x : row) v.push_back(integer_from(x));
      r.vertices.push_back(std::move(v));
    }
    r.width = integer_from(j.at("width"));
    r.mu = Rational::parse(j.at("mu").get<std::string>());
    r.dim_fine_at_mu = j.at("dim_F_at_mu").get<int>();
    const json& f = j.at("flags");
    r.f_hollow = f.at("F_hollow").get<bool>();
    r.weakly_sporadic = f.at("weakly_sporadic").get<bool>();
    r.sporadic = f.at("sporadic").get<bool>();
    r.canonically_closed_at_mu = f.at("canonically_closed_at_mu").get<bool>();
    if (!j.at("gorenstein_index").is_null()) r.gorenstein_index = integer_from(j.at("gorenstein_index"));
    r.provenance = j.at("provenance").get<std::string>();
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad result line: ") + e.what());
  }
}

}  // namespace fhollow
