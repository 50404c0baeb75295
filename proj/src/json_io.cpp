#include "tamaripop/json_io.hpp"

#include <stdexcept>

namespace tamaripop {

Json to_json(const LatticePath& path) { return path.to_string(); }

Json to_json(const BracketVector& vec) {
  Json j;
  j["nu"] = vec.context().nu().to_string();
  j["entries"] = vec.to_ints();
  return j;
}

Json to_json(const Permutation& p) { return p.word(); }

Json to_json(const PopTrajectory& traj) {
  Json j = Json::array();
  for (const auto& s : traj.states) j.push_back(to_json(s));
  return j;
}

Json to_json(const PopPolynomial& poly) {
  Json j = Json::object();
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

Json to_json(const IntSeries& series) { return to_decimal_strings(series); }

LatticePath path_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("path JSON must be a string");
  return parse_path(j.get<std::string>());
}

BracketVector vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nu") || !j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("vector JSON must be an object with \"nu\" and \"entries\"");
  std::vector<int> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_number_integer()) throw std::invalid_argument("vector JSON entries must be integers");
    entries.push_back(e.get<int>());
  }
  return BracketVector::from_entries(NuContext::make(path_from_json(j["nu"])), entries);
}

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
  std::vector<int> word;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("permutation JSON entries must be integers");
    word.push_back(e.get<int>());
  }
  return Permutation(std::move(word));
}

}  // namespace tamaripop
