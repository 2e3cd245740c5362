#include "planeguard/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace planeguard {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& path) {
  if (!j.is_number())
    fail(ErrorCode::ParseError, path + ": expected a number");
  return j.get<double>();
}

Point3 point_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3)
    fail(ErrorCode::ParseError, path + ": expected 3 numbers");
  return Point3{number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]"),
                number_at(j[2], path + "[2]")};
}

}  // namespace

LoadedConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object())
    fail(ErrorCode::ParseError, "config root must be an object");

  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "K" && key != "b" && key != "pursuers" && key != "evader")
      fail(ErrorCode::ParseError, "unknown field \"" + key + "\"");
  }
  if (!root.contains("K")) fail(ErrorCode::ParseError, "missing field \"K\"");
  if (!root.contains("b")) fail(ErrorCode::ParseError, "missing field \"b\"");
  if (!root.contains("pursuers"))
    fail(ErrorCode::ParseError, "missing field \"pursuers\"");

  LoadedConfig out;
  out.plane.normal = point_at(root["K"], "K");
  out.plane.offset = number_at(root["b"], "b");
  out.frame = canonical_frame(out.plane);

  const json& pursuers = root["pursuers"];
  if (!pursuers.is_array() || pursuers.empty())
    fail(ErrorCode::ParseError, "pursuers: expected a non-empty array");

  std::vector<Point3> canonical;
  canonical.reserve(pursuers.size());
  for (std::size_t i = 0; i < pursuers.size(); ++i)
    canonical.push_back(to_canonical(
        out.frame, point_at(pursuers[i], "pursuers[" + std::to_string(i) + "]")));

  std::optional<Point3> evader;
  if (root.contains("evader")) {
    const Point3 raw = point_at(root["evader"], "evader");
    const Point3 mapped = to_canonical(out.frame, raw);
    if (!(mapped.z > 0.0))
      fail(ErrorCode::EvaderNotInPlay,
           "evader: position does not satisfy K.e > b");
    evader = mapped;
  }

  out.config = make_game_config(std::move(canonical), evader);
  return out;
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace planeguard
