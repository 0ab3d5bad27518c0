#include "hgm/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hgm/genfun.hpp"
#include "hgm/zigzag.hpp"

namespace hgm {

namespace {

/// Partitions of `total` into parts >= min_part, descending, with parts
/// filtered by `allowed`.
void partitions_rec(long long total, long long max_part, long long min_part,
                    const std::function<bool(long long)>& allowed,
                    std::vector<long long>& current,
                    std::vector<std::vector<long long>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (long long part = std::min(total, max_part); part >= min_part; --part) {
    if (!allowed(part)) continue;
    current.push_back(part);
    partitions_rec(total - part, part, min_part, allowed, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<long long>> partitions(long long total, long long min_part,
                                               const std::function<bool(long long)>& allowed) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> current;
  partitions_rec(total, total, min_part, allowed, current, out);
  return out;
}

/// The gamma text of an already-written scan line, for resume matching.
std::string line_gamma(const std::string& line, bool csv) {
  if (csv) {
    if (line.size() < 2 || line[0] != '"') return {};
    size_t close = line.find('"', 1);
    if (close == std::string::npos) return {};
    return line.substr(1, close - 1);
  }
  auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.contains("gamma") || !j["gamma"].is_string()) return {};
  return j["gamma"].get<std::string>();
}

}  // namespace

std::vector<GammaVector> enumerate_canonical_gammas(long long L_max) {
  if (L_max < 1) fail(errc::bad_range, "L_max must be at least 1");
  std::vector<GammaVector> out;
  out.push_back(GammaVector::from_entries({1, -1}));
  for (long long L = 2; L <= L_max; ++L) {
    auto positives = partitions(L, 2, [](long long) { return true; });
    for (const auto& pos : positives) {
      std::set<long long> support(pos.begin(), pos.end());
      auto negatives =
          partitions(L, 1, [&support](long long part) { return !support.count(part); });
      for (const auto& neg : negatives) {
        if (std::find(neg.begin(), neg.end(), 1LL) == neg.end()) continue;
        std::vector<long long> entries = pos;
        for (long long q : neg) entries.push_back(-q);
        out.push_back(GammaVector::from_entries(entries));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanRecord scan_record(const GammaVector& g) {
  HodgeVector zz = hodge_vector_zigzag(g);
  HodgeVector gf = hodge_vector_genfun(g);
  if (!(zz == gf))
    fail(errc::method_disagreement,
         "zigzag and genfun disagree on gamma " + g.str() + ": " + zz.str() + " vs " + gf.str());
  ScanRecord rec;
  rec.gamma = g.str();
  rec.L = g.L;
  rec.n = g.n();
  rec.hodge = zz.h;

  HypergeometricDatum hd = gamma_to_datum(g);
  std::vector<Rational> common;
  std::set_intersection(hd.alpha.begin(), hd.alpha.end(), hd.beta.begin(), hd.beta.end(),
                        std::back_inserter(common));
  rec.primitive = common.empty();
  if (!rec.primitive) {
    try {
      ReducedDatum red = reduce_datum(hd);
      ZigzagProfile prof = zigzag_profile(merged_from(red.alpha, red.beta), g.r());
      std::vector<long long> ht = hodge_tate_multiset(prof);
      long long top = 0;
      for (long long& w : ht) {
        w += red.offset;
        top = std::max(top, w);
      }
      std::vector<long long> counts(top + 1, 0);
      for (long long w : ht) counts[w] += 1;
      rec.reduced_hodge = counts;
    } catch (const Error& e) {
      if (e.code() != errc::empty_reduction) throw;
    }
  }
  return rec;
}

std::string record_json(const ScanRecord& rec) {
  nlohmann::ordered_json j;
  j["gamma"] = rec.gamma;
  j["L"] = rec.L;
  j["n"] = rec.n;
  j["hodge"] = rec.hodge;
  j["primitive"] = rec.primitive;
  if (rec.reduced_hodge.has_value()) j["reduced_hodge"] = *rec.reduced_hodge;
  return j.dump();
}

std::string csv_header(int n_max) {
  std::ostringstream os;
  os << "gamma,L,n";
  for (int k = 0; k <= n_max; ++k) os << ",h" << k;
  return os.str();
}

std::string record_csv(const ScanRecord& rec, int n_max) {
  std::ostringstream os;
  os << '"' << rec.gamma << '"' << "," << rec.L << "," << rec.n;
  for (int k = 0; k <= n_max; ++k)
    os << "," << (k < static_cast<int>(rec.hodge.size()) ? rec.hodge[k] : 0);
  return os.str();
}

ScanOutcome run_scan(long long L_max, const std::string& path, int jobs, bool csv) {
  std::vector<GammaVector> gammas = enumerate_canonical_gammas(L_max);
  int n_max = 0;
  for (const auto& g : gammas) n_max = std::max(n_max, g.n());
  size_t header_lines = csv ? 1 : 0;
  size_t total = gammas.size() + header_lines;

  // Resume: count the complete leading lines that match this scan, keyed by
  // the gamma text (records are deterministic functions of it).
  size_t keep = 0;
  size_t keep_bytes = 0;
  size_t existing_bytes = 0;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::string existing((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      existing_bytes = existing.size();
      size_t pos = 0;
      while (true) {
        size_t nl = existing.find('\n', pos);
        if (nl == std::string::npos) break;  // trailing partial line is rewritten
        std::string line = existing.substr(pos, nl - pos);
        bool matches;
        if (keep >= total) {
          matches = false;
        } else if (csv && keep == 0) {
          matches = line == csv_header(n_max);
        } else {
          matches = line_gamma(line, csv) == gammas[keep - header_lines].str();
        }
        if (!matches)
          fail(errc::io_error, "existing output does not belong to this scan: " + path);
        pos = nl + 1;
        keep_bytes = pos;
        ++keep;
      }
    }
  }

  ScanOutcome outcome;
  outcome.total = total;
  outcome.skipped = keep;
  if (keep == total) {
    if (existing_bytes > keep_bytes) {
      // Complete file with a dangling partial tail: drop the tail.
      std::ifstream in(path, std::ios::binary);
      std::string prefix(keep_bytes, '\0');
      in.read(prefix.data(), static_cast<std::streamsize>(keep_bytes));
      in.close();
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out.write(prefix.data(), static_cast<std::streamsize>(keep_bytes));
    }
    return outcome;
  }

  // Compute the missing records with a bounded worker pool; write in
  // canonical order afterwards, so the output is identical for any pool size.
  size_t first_gamma = keep > header_lines ? keep - header_lines : 0;
  std::vector<std::string> lines(gammas.size() - first_gamma);
  std::atomic<size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::mutex err_mutex;
  int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= lines.size()) return;
        try {
          ScanRecord rec = scan_record(gammas[first_gamma + i]);
          lines[i] = csv ? record_csv(rec, n_max) : record_json(rec);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::string prefix;
  if (keep_bytes > 0) {
    std::ifstream in(path, std::ios::binary);
    prefix.resize(keep_bytes);
    in.read(prefix.data(), static_cast<std::streamsize>(keep_bytes));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open " + path);
  out.write(prefix.data(), static_cast<std::streamsize>(prefix.size()));
  if (csv && keep == 0) {
    out << csv_header(n_max) << "\n";
    ++outcome.written;
  }
  for (const auto& line : lines) {
    out << line << "\n";
    ++outcome.written;
  }
  out.flush();
  if (!out) fail(errc::io_error, "write failed: " + path);
  return outcome;
}

}  // namespace hgm
