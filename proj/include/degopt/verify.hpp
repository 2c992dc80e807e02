#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace degopt {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int threads = 1;
};

struct VerifyCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // First failing case, instance file included verbatim.
  nlohmann::ordered_json counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

// small-multi, small-colored, ip-equivalence, treedepth, gadgets
const std::vector<std::string>& verify_suite_names();

// Throws InputError for an unknown suite.
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace degopt
