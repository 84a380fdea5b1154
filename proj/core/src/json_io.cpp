#include "tsys/json_io.hpp"

namespace tsys {

nlohmann::json system_to_json(const TransferSystem& sys) {
  nlohmann::json j;
  j["n"] = sys.size();
  j["relations"] = nlohmann::json::array();
  for (const auto& [i, k] : sys.relations()) j["relations"].push_back({i, k});
  return j;
}

TransferSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("relations"))
    throw Error("transfer system JSON needs an object with \"n\" and \"relations\"");
  if (!j["n"].is_number_integer())
    throw Error("transfer system JSON: \"n\" must be an integer");
  if (!j["relations"].is_array())
    throw Error("transfer system JSON: \"relations\" must be an array of pairs");
  std::vector<Relation> relations;
  for (const auto& entry : j["relations"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw Error("transfer system JSON: each relation must be a pair of integers");
    relations.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return make_transfer_system(j["n"].get<int>(), relations);
}

nlohmann::json tuple_to_json(const CatalanTuple& tuple) {
  nlohmann::json j;
  j["entries"] = tuple.entries();
  return j;
}

CatalanTuple tuple_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw Error("tuple JSON needs an object with an \"entries\" array");
  std::vector<int> entries;
  for (const auto& entry : j["entries"]) {
    if (!entry.is_number_integer()) throw Error("tuple JSON: entries must be integers");
    entries.push_back(entry.get<int>());
  }
  return make_catalan_tuple(std::move(entries));
}

}  // namespace tsys
