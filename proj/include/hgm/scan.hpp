#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgm/datum.hpp"

namespace hgm {

/// Every canonical gamma vector with natural length <= L_max, in scan order
/// (L, then lexicographic). Canonical: positives and negatives disjoint with
/// 1 among the negatives, plus the trivial vector [1,-1].
std::vector<GammaVector> enumerate_canonical_gammas(long long L_max);

struct ScanRecord {
  std::string gamma;
  long long L = 0;
  int n = 0;
  std::vector<long long> hodge;
  bool primitive = false;  // alpha and beta disjoint as multisets
  std::optional<std::vector<long long>> reduced_hodge;
};

/// Computes one record, cross-checking the zig-zag Hodge vector against the
/// generating-function one. Throws MethodDisagreement on mismatch.
ScanRecord scan_record(const GammaVector& g);

std::string record_json(const ScanRecord& rec);
std::string record_csv(const ScanRecord& rec, int n_max);
std::string csv_header(int n_max);

struct ScanOutcome {
  size_t written = 0;
  size_t skipped = 0;
  size_t total = 0;
};

/// Writes one line per canonical gamma vector to `path` (JSONL by default,
/// CSV with csv = true). Re-running against a current file appends nothing;
/// a truncated trailing line is rewritten. Records are computed by a worker
/// pool and written in canonical order.
ScanOutcome run_scan(long long L_max, const std::string& path, int jobs, bool csv);

}  // namespace hgm
