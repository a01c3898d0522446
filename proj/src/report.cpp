#include <gsf/report.hpp>

namespace gsf {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = to_string(status);
  j["witness"] = witness ? *witness : nlohmann::json(nullptr);
  if (!details.empty()) j["details"] = details;
  j["millis"] = with_timing ? millis : 0.0;
  return j;
}

}  // namespace gsf
