#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecc {

struct Violation {
  std::string slice;
  std::string graph6;
  std::string observed;
  std::string bound;
};

// Outcome of checking one bound id over every enumerated graph in its class.
// Achiever sets are compared per parameter slice against the characterized
// extremal families where the bound states an equality case.
struct VerificationRun {
  std::string bound_id;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // capped sample
  std::uint64_t sharp_count = 0;
  std::vector<std::string> sharp_witnesses;  // canonical graph6, capped sample
  bool uniqueness_checked = false;
  bool uniqueness_ok = true;
  std::vector<std::string> uniqueness_mismatches;
  bool attainment_checked = false;
  bool attained_ok = true;
  std::vector<std::string> unattained;  // slices where no graph met the bound
  double wall_time_ms = 0.0;
};

struct VerifyOptions {
  int jobs = 1;
  bool iso_reduce = false;
  std::optional<int> n_min;
};

VerificationRun verify_bound(const std::string& bound_id, int n_max, VerifyOptions opts = {});

// Everything verify_bound accepts: the bound ids plus the verify-only lemmas.
std::vector<std::string> known_verifications();

}  // namespace ecc
