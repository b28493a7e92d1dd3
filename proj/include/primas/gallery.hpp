#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace primas {

// Tunables every scenario understands; each scenario documents which ones
// it reads. Defaults reproduce all claims well inside the time budget.
struct GalleryParams {
  int truncation = 4;    // n for truncated infinite families
  int samples = 50;      // randomized checks per claim
  std::uint64_t seed = 42;
  int degree_bound = 4;  // degree cap for sampled polynomials
  int power_bound = 64;  // exponent cap for non-nilpotence sweeps
};

// One named check: `mode` is "exact" when the verdict certifies the claim
// outright, "witness" when a finite computation certifies instances of a
// claim about an infinite object.
struct ClaimReport {
  std::string name;
  std::string anchor;  // the mathematical statement being checked
  bool pass = false;
  std::string mode = "exact";
  nlohmann::json witness;
};

struct ExampleReport {
  std::string id;
  GalleryParams params;
  std::vector<ClaimReport> claims;
  long long elapsed_ms = 0;

  bool pass() const;
  nlohmann::json to_json() const;
};

struct ClaimInfo {
  std::string name;
  std::string anchor;
};

struct ScenarioInfo {
  std::string id;
  std::string title;
  std::vector<ClaimInfo> claims;
  GalleryParams defaults;
};

// The fixed catalog (11 scenarios).
const std::vector<ScenarioInfo>& list_examples();

// Runs one scenario; param override optional. Reports are reproducible
// bit-for-bit from (id, params, seed). Throws UnsupportedInput for an
// unknown id.
ExampleReport run_example(const std::string& id,
                          const std::optional<GalleryParams>& params = std::nullopt);

}  // namespace primas
