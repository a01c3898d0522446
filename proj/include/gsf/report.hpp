#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace gsf {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Outcome of one verification check. A failing report carries the first
/// witness recorded; passing and skipped reports carry none.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  std::optional<nlohmann::json> witness;
  /// Extra non-witness information (computed ranks, char-2 path, ...).
  nlohmann::json details = nlohmann::json::object();
  double millis = 0.0;

  explicit Report(std::string name, nlohmann::json p = nlohmann::json::object())
      : check(std::move(name)), params(std::move(p)) {}

  bool passed() const { return status != Status::fail; }

  /// Marks the report failed; keeps the first witness if already failed.
  void fail(nlohmann::json w) {
    if (status == Status::fail) return;
    status = Status::fail;
    witness = std::move(w);
  }

  void skip(std::string reason) {
    if (status == Status::fail) return;
    status = Status::skipped;
    details["skip_reason"] = std::move(reason);
  }

  nlohmann::json to_json(bool with_timing = true) const;
};

}  // namespace gsf
