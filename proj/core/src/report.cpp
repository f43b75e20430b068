#include "wittcv/report.hpp"

#include <json.hpp>

#include "wittcv/error.hpp"

#ifndef WITTCV_VERSION_STRING
#define WITTCV_VERSION_STRING "0.0.0"
#endif

namespace wittcv {

using json = nlohmann::ordered_json;

std::string_view version() { return WITTCV_VERSION_STRING; }

void VerificationReport::add_failure(Failure f) {
  counts["failures"] += 1;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
}

void VerificationReport::merge(const VerificationReport& later) {
  for (const auto& [key, value] : later.counts) counts[key] += value;
  for (const auto& f : later.failures) {
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  }
  witnesses.insert(witnesses.end(), later.witnesses.begin(), later.witnesses.end());
  for (const auto& [key, value] : later.details) details[key] = value;
  duration_ms += later.duration_ms;
}

std::string serialize(const VerificationReport& r, bool timing) {
  json doc;
  doc["version"] = r.tool_version;
  doc["task"] = r.task;
  doc["p"] = r.p;
  doc["m"] = r.m;
  doc["q"] = r.q;
  json mode;
  if (r.sampling) {
    mode["kind"] = "sampled";
    mode["seed"] = r.sampling->seed;
    mode["samples"] = r.sampling->samples;
  } else {
    mode["kind"] = "exhaustive";
  }
  doc["mode"] = mode;
  doc["verified"] = r.verified();
  json counts = json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  doc["counts"] = counts;
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"label", f.label}, {"x", f.x}, {"y", f.y}});
  doc["failures"] = failures;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"index", w.index}, {"x", w.x}, {"y", w.y}});
  doc["witnesses"] = witnesses;
  json details = json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  doc["details"] = details;
  doc["duration_ms"] = timing ? r.duration_ms : 0;
  return doc.dump(2) + "\n";
}

VerificationReport parse_report(std::string_view text) {
  try {
    const json doc = json::parse(text);
    VerificationReport r;
    r.tool_version = doc.at("version").get<std::string>();
    r.task = doc.at("task").get<std::string>();
    r.p = doc.at("p").get<std::uint32_t>();
    r.m = doc.at("m").get<int>();
    r.q = doc.at("q").get<std::uint64_t>();
    const auto& mode = doc.at("mode");
    const auto kind = mode.at("kind").get<std::string>();
    if (kind == "sampled") {
      r.sampling = SamplingInfo{mode.at("seed").get<std::uint64_t>(), mode.at("samples").get<std::uint64_t>()};
    } else if (kind != "exhaustive") {
      throw Error(ErrorCode::ParseError, "unknown mode kind '" + kind + "'");
    }
    for (const auto& [key, value] : doc.at("counts").items()) r.counts[key] = value.get<std::uint64_t>();
    for (const auto& f : doc.at("failures")) {
      r.failures.push_back({f.at("label").get<std::string>(), f.at("x").get<std::string>(),
                            f.at("y").get<std::string>()});
    }
    for (const auto& w : doc.at("witnesses")) {
      r.witnesses.push_back({w.at("index").get<int>(), w.at("x").get<std::string>(), w.at("y").get<std::string>()});
    }
    for (const auto& [key, value] : doc.at("details").items()) r.details[key] = value.get<std::string>();
    r.duration_ms = doc.at("duration_ms").get<std::uint64_t>();
    if (doc.at("verified").get<bool>() != r.verified()) {
      throw Error(ErrorCode::ParseError, "verified flag disagrees with the failure list");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

VerificationReport with_prefix(VerificationReport r, const std::string& prefix) {
  std::map<std::string, std::uint64_t> counts;
  for (auto& [key, value] : r.counts) counts[prefix + "/" + key] = value;
  r.counts = std::move(counts);
  std::map<std::string, std::string> details;
  for (auto& [key, value] : r.details) details[prefix + "/" + key] = value;
  r.details = std::move(details);
  for (auto& f : r.failures) f.label = prefix + "/" + f.label;
  return r;
}

}  // namespace wittcv
