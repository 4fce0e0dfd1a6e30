#include "lcslab/cli/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace lcslab::cli {

std::string config_digest(const std::map<std::string, std::string>& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, v] : config) feed(k + "=" + v + "\n");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["tool_version"] = kToolVersion;
  j["config_digest"] = config_digest(m.config);
  j["config"] = m.config;
  j["outputs"] = m.outputs;
  j["warnings"] = m.warnings;
  j["started"] = m.started;
  j["finished"] = m.finished;
  j["details"] = m.details;
  return j;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  std::ofstream out(dir / (m.command + ".manifest.json"));
  out << to_json(m).dump(2) << '\n';
}

}  // namespace lcslab::cli
