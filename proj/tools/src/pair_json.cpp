#include "vortex/cli/cli.hpp"

namespace vortex::cli {

namespace {

int exact_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidInput(std::string("pair JSON: '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

bool optional_bool(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw InvalidInput(std::string("pair JSON: '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

}  // namespace

FormalObject parse_formal_object(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw InvalidInput("pair JSON: expected an object with exactly one of block, sum, ext");
  }
  if (j.contains("block")) {
    const auto& b = j.at("block");
    return FormalObject::block(exact_int(b, "rank"), exact_int(b, "degree"), optional_bool(b, "phi"));
  }
  if (j.contains("sum")) {
    const auto& arr = j.at("sum");
    if (!arr.is_array()) throw InvalidInput("pair JSON: 'sum' must be an array");
    std::vector<FormalObject> parts;
    for (const auto& item : arr) parts.push_back(parse_formal_object(item));
    return FormalObject::sum(std::move(parts));
  }
  if (j.contains("ext")) {
    const auto& e = j.at("ext");
    if (!e.is_object() || !e.contains("sub") || !e.contains("quot")) {
      throw InvalidInput("pair JSON: 'ext' needs 'sub' and 'quot'");
    }
    return FormalObject::ext(parse_formal_object(e.at("sub")), parse_formal_object(e.at("quot")),
                             optional_bool(e, "split"));
  }
  throw InvalidInput("pair JSON: unknown node '" + j.begin().key() + "'");
}

nlohmann::json formal_object_to_json(const FormalObject& obj) {
  switch (obj.kind()) {
    case FormalObject::Kind::block: {
      const auto& b = obj.as_block();
      return {{"block", {{"rank", b.rank}, {"degree", b.degree}, {"phi", b.carries_phi}}}};
    }
    case FormalObject::Kind::sum: {
      auto arr = nlohmann::json::array();
      for (const auto& s : obj.summands()) arr.push_back(formal_object_to_json(s));
      return {{"sum", arr}};
    }
    case FormalObject::Kind::ext:
      return {{"ext", {{"sub", formal_object_to_json(obj.sub())},
                       {"quot", formal_object_to_json(obj.quot())},
                       {"split", false}}}};
  }
  return nullptr;
}

}  // namespace vortex::cli
