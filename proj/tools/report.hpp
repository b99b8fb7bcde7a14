#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgct/isaacs.hpp"

namespace fgct::tools {

using json = nlohmann::json;

inline constexpr const char* kSchema = "fgct/1";
inline constexpr const char* kVersion = "0.1.0";

json to_json(const Cyclotomic& x);
json to_json(const NumberFieldDescriptor& f);
json to_json(const Subgroup& h);
json to_json(const ClassFunction& chi);
json to_json(const CharacterPairs& pairs);
json to_json(const CorrespondenceTrace& trace);

/// The report envelope. `verification` maps check names to booleans;
/// `timing` is kept apart so that the rest is reproducible byte for byte.
struct Report {
  std::string command;
  json args = json::object();
  json result = json::object();
  json verification = json::object();
  json notes = json::array();
  std::optional<json> timing;

  bool verified() const;
  json to_json() const;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace fgct::tools
