#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lcslab/records.hpp"

namespace lcslab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Written next to every command's outputs as <command>.manifest.json.
struct RunManifest {
  std::string command;
  /// Fully resolved settings that determine the outputs (worker count and
  /// output directory excluded).
  std::map<std::string, std::string> config;
  std::vector<std::string> outputs;
  std::string started;
  std::string finished;
  std::vector<std::string> warnings;
  /// Timings and other run-specific extras.
  Json details = Json::object();
};

/// FNV-1a 64 of "key=value\n" lines in key order, as 16 hex digits.
std::string config_digest(const std::map<std::string, std::string>& config);

std::string utc_timestamp();

Json to_json(const RunManifest& m);
void write_manifest(const std::filesystem::path& dir, const RunManifest& m);

}  // namespace lcslab::cli
