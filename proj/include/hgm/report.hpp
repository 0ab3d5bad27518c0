#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgm/datum.hpp"

namespace hgm {

struct MethodResult {
  std::string name;  // zigzag | genfun | cone
  std::vector<long long> hodge;
  double ms = 0.0;
};

struct ComputeReport {
  std::string gamma;
  std::string alpha;
  std::string beta;
  long long L = 0;
  std::string M;
  int n = 0;
  std::vector<long long> hodge;  // first requested method
  std::vector<MethodResult> methods;
  std::optional<bool> agree;  // present only with more than one method
};

/// Runs the requested methods ("zigzag", "genfun", "cone", or "all").
ComputeReport compute_report(const GammaVector& g, const std::vector<std::string>& methods);

std::string report_json(const ComputeReport& r);
std::string report_human(const ComputeReport& r);

}  // namespace hgm
