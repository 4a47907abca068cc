#pragma once

#include "vitali/generators.hpp"
#include "vitali/geometry.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace vitali {

/// Malformed instance or selection file.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance file:
//   {"dim": 2,
//    "cubes": [{"center": ["1/2", "3"], "radius": "1/2"}, ...],
//    "meta": {...}}                       (optional)
// Every scalar is a string holding "p/q", an integer or a finite decimal.

nlohmann::json instance_to_json(const Collection& c, const nlohmann::json& meta = nullptr);
Collection instance_from_json(const nlohmann::json& j);

nlohmann::json gen_spec_to_json(const GenSpec& spec);

/// A selection together with the algorithm and parameters that produced it.
struct SelectionRecord {
  Selection selection;
  std::string algo;
  nlohmann::json params = nlohmann::json::object();
};

// Selection file:
//   {"algo": "pipeline", "indices": [0, 4], "achieved_ratio": "p/q",
//    "certified_bound": "p/q", "params": {...}}
nlohmann::json selection_to_json(const SelectionRecord& rec);
SelectionRecord selection_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace vitali
