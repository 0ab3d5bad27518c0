#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hgm/cone.hpp"
#include "hgm/genfun.hpp"
#include "hgm/numbers.hpp"
#include "hgm/padic.hpp"
#include "hgm/report.hpp"
#include "hgm/scan.hpp"
#include "hgm/zigzag.hpp"

namespace {

using namespace hgm;

// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 verification
// failure, 5 scan disagreement.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::unsupported_format:
      return 2;
    case errc::invalid_gamma:
    case errc::not_over_q:
    case errc::no_unit_denominator:
    case errc::length_mismatch:
    case errc::empty_reduction:
    case errc::not_datum_element:
    case errc::improper_subset:
    case errc::bad_denominator:
    case errc::bad_range:
    case errc::enumeration_range:
    case errc::insufficient_census:
      return 3;
    case errc::method_disagreement:
      return 5;
    default:
      return 1;
  }
}

GammaVector parse_input(const std::string& text) {
  if (text.find(';') != std::string::npos) return datum_to_gamma(HypergeometricDatum::parse(text));
  return GammaVector::parse(text);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path);
  out << content;
  if (!out.flush()) fail(errc::io_error, "write failed: " + path);
}

int cmd_hodge(const std::string& input, const std::string& method, bool json) {
  GammaVector g = parse_input(input);
  ComputeReport rep = compute_report(g, {method});
  std::cout << (json ? report_json(rep) + "\n" : report_human(rep));
  if (rep.agree.has_value() && !*rep.agree) {
    std::cerr << "method disagreement on gamma " << rep.gamma << "\n";
    return 5;
  }
  return 0;
}

int cmd_convert(const std::string& input) {
  if (input.find(';') != std::string::npos) {
    std::cout << datum_to_gamma(HypergeometricDatum::parse(input)).str() << "\n";
  } else {
    HypergeometricDatum hd = gamma_to_datum(GammaVector::parse(input));
    std::cout << hd.alpha_str() << ";" << hd.beta_str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& input, long long k_max, unsigned long long prime) {
  GammaVector g = parse_input(input);
  HypergeometricDatum hd = gamma_to_datum(g);
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  };

  HodgeVector zz = hodge_vector_zigzag(g);
  IntPolynomial plus = hodge_polynomial_ie(g, IeSide::Plus);
  IntPolynomial minus = hodge_polynomial_ie(g, IeSide::Minus);
  IntPolynomial simp = hodge_polynomial_simplified(g);
  ConeBasis basis = cone_basis(g);
  HodgeVector cone = hodge_from_census(weight_census(basis, g.n()), g.n());
  HodgeVector gf = hodge_vector_from_polynomial(plus, g.n());
  check("zigzag = genfun(+) = genfun(-) = simplified = cone census",
        zz == gf && plus == minus && plus == simp && zz == cone,
        "zigzag " + zz.str() + ", cone " + cone.str());
  check("sum H(k) = L", zz.sum() == g.L);
  check("normalized volume = L", normalized_volume(g) == Int(static_cast<long>(g.L)));

  {
    // e_n + sum q_j e_{r-1+j} = p_r e_0 + sum p_i e_i, coordinatewise.
    int n = g.n(), r = g.r(), s = g.s();
    LatticeVector lhs(n, 0), rhs(n, 0);
    for (int m = 0; m < n; ++m) lhs[m] = basis.e[n][m];
    for (int j = 1; j <= s - 1; ++j)
      for (int m = 0; m < n; ++m) lhs[m] += g.negatives[j - 1] * basis.e[r - 1 + j][m];
    for (int m = 0; m < n; ++m) rhs[m] = g.positives.back() * basis.e[0][m];
    for (int i = 1; i <= r - 1; ++i)
      for (int m = 0; m < n; ++m) rhs[m] += g.positives[i - 1] * basis.e[i][m];
    check("basis relation", lhs == rhs);
  }

  {
    ApexSequence seq = apex_sequence(g);
    std::vector<long long> apex_weights;
    for (const auto& w : seq.apexes) apex_weights.push_back(weight(w));
    std::sort(apex_weights.begin(), apex_weights.end());
    std::vector<long long> ht = hodge_tate_multiset(zigzag_profile(hd, g.r()));
    std::sort(ht.begin(), ht.end());
    bool depths_ok = true;
    for (size_t i = 0; i < seq.apexes.size(); ++i)
      depths_ok = depths_ok && depth(seq.apexes[i]) == -static_cast<long long>(i);
    check("apex weights match zig-zag weights, depth(w_i) = -i",
          apex_weights == ht && depths_ok);
  }

  check("partition covers each point exactly once (weight <= " + std::to_string(k_max) + ")",
        verify_partition(g, k_max));

  {
    unsigned long long p = prime;
    if (p == 0) p = primes_one_mod(level_modulus(hd), 1).at(0);
    PadicContext ctx = PadicContext::create(p, hd);  // validates p = 1 mod M
    (void)ctx;
    check("p-adic order profile matches zig-zag (p = " + std::to_string(p) + ")",
          verify_phi_bridge(g, p));
    check("fractional-part valuation identity (p = " + std::to_string(p) + ")",
          verify_lemma_fractional(g, p));
  }

  {
    bool ok = true;
    for (const Rational& b : hd.beta) {
      long long direct = beta_multiplicity(hd, b);
      long long via_q = 0;
      for (long long q : g.negatives)
        if ((b * Rational(q)).is_integer()) ++via_q;
      ok = ok && direct == via_q;
    }
    check("beta multiplicities match divisibility counts", ok);
  }

  if (!all_ok) {
    std::cerr << "verification failed for gamma " << g.str() << "\n";
    return 4;
  }
  return 0;
}

int cmd_scan(long long l_max, std::string path, int jobs, bool csv) {
  if (path.empty()) {
    const char* dir = std::getenv("HGM_OUTPUT_DIR");
    std::string base = "hgm-scan-L" + std::to_string(l_max) + (csv ? ".csv" : ".jsonl");
    path = dir ? std::string(dir) + "/" + base : base;
  }
  ScanOutcome outcome = run_scan(l_max, path, jobs, csv);
  std::cout << outcome.written << " records written, " << outcome.skipped << " already present ("
            << path << ")\n";
  return 0;
}

int cmd_padic(const std::string& input, unsigned long long prime, bool json) {
  GammaVector g = parse_input(input);
  HypergeometricDatum hd = gamma_to_datum(g);
  Int m = level(hd);
  unsigned long long p = prime ? prime : primes_one_mod(level_modulus(hd), 1).at(0);
  PadicContext ctx = PadicContext::create(p, hd);
  ValuationProfile prof = valuation_profile(ctx);
  MergedList ml = merged_list(hd);
  bool bridge = verify_phi_bridge(g, p);
  bool lemma = verify_lemma_fractional(g, p);

  if (json) {
    std::cout << "{\"gamma\":\"" << g.str() << "\",\"M\":" << m.get_str() << ",\"p\":" << p
              << ",\"orders\":[";
    for (size_t k = 0; k < prof.orders.size(); ++k)
      std::cout << (k ? "," : "") << prof.orders[k];
    std::cout << "],\"phi_bridge\":" << (bridge ? "true" : "false")
              << ",\"fractional_identity\":" << (lemma ? "true" : "false") << "}\n";
  } else {
    std::cout << "gamma  " << g.str() << "\nM      " << m.get_str() << "\np      " << p << "\n";
    std::cout << "digits ";
    for (size_t i = 0; i < ml.size(); ++i)
      std::cout << (i ? "," : "") << first_digit(-ml.entries[i].value, p);
    std::cout << "\n";
    // Run-length display of the step function ord_p A(k).
    std::cout << "ord_p A(k):\n";
    size_t k = 0;
    while (k < prof.orders.size()) {
      size_t j = k;
      while (j + 1 < prof.orders.size() && prof.orders[j + 1] == prof.orders[k]) ++j;
      std::cout << "  k=" << k << ".." << j << ": " << prof.orders[k] << "\n";
      k = j + 1;
    }
    std::cout << "phi bridge          " << (bridge ? "ok" : "FAIL") << "\n";
    std::cout << "fractional identity " << (lemma ? "ok" : "FAIL") << "\n";
  }
  return (bridge && lemma) ? 0 : 4;
}

int cmd_plot(const std::string& input, const std::string& format, const std::string& out_path,
             bool reduced) {
  GammaVector g = parse_input(input);
  HypergeometricDatum hd = gamma_to_datum(g);
  ZigzagProfile profile;
  if (reduced) {
    ReducedDatum red = reduce_datum(hd);
    profile = zigzag_profile(merged_from(red.alpha, red.beta), g.r());
    for (auto& v : profile.phi) v += red.offset;
  } else {
    profile = zigzag_profile(hd, g.r());
  }
  write_output(out_path, render_zigzag(profile, format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge number multiplicities of hypergeometric data over Q"};
  app.require_subcommand(1);

  std::string input, method = "zigzag", format = "ascii", out_path;
  bool json = false, csv = false, reduced = false;
  long long l_max = 4, k_max = -1;
  unsigned long long prime = 0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* hodge = app.add_subcommand("hodge", "Hodge vector of a gamma vector or datum");
  hodge->add_option("input", input, "gamma \"3,-1,-1,-1\" or datum \"1/3,2/3,1;1,1,1\"")
      ->required();
  hodge->add_option("--method", method, "zigzag | genfun | cone | all")
      ->check(CLI::IsMember({"zigzag", "genfun", "cone", "all"}));
  hodge->add_flag("--json", json, "single-object JSON report");

  auto* convert = app.add_subcommand("convert", "convert between gamma and datum text forms");
  convert->add_option("input", input)->required();

  auto* verify = app.add_subcommand("verify", "cross-method and lattice verification");
  verify->add_option("input", input)->required();
  verify->add_option("--kmax", k_max, "partition check depth (default n)");
  verify->add_option("--padic-prime", prime, "prime = 1 mod M to use");

  auto* scan = app.add_subcommand("scan", "enumerate gamma vectors up to a natural length");
  scan->add_option("--lmax", l_max, "maximum natural length")->required();
  scan->add_option("-o,--output", out_path, "output path (default from HGM_OUTPUT_DIR)");
  scan->add_option("--jobs", jobs, "worker count");
  scan->add_flag("--csv", csv, "CSV instead of JSONL");

  auto* padic = app.add_subcommand("padic", "p-adic valuation profile and bridges");
  padic->add_option("input", input)->required();
  padic->add_option("--prime", prime, "prime = 1 mod M (default: smallest)");
  padic->add_flag("--json", json);

  auto* plot = app.add_subcommand("plot", "zig-zag diagram rendering");
  plot->add_option("input", input)->required();
  plot->add_option("--format", format, "ascii | svg");
  plot->add_option("-o,--output", out_path, "output file (default stdout)");
  plot->add_flag("--reduced", reduced, "plot the derived primitive datum, normalized");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hodge->parsed()) return cmd_hodge(input, method, json);
    if (convert->parsed()) return cmd_convert(input);
    if (verify->parsed()) {
      GammaVector g = parse_input(input);
      return cmd_verify(input, k_max < 0 ? g.n() : k_max, prime);
    }
    if (scan->parsed()) return cmd_scan(l_max, out_path, jobs, csv);
    if (padic->parsed()) return cmd_padic(input, prime, json);
    if (plot->parsed()) return cmd_plot(input, format, out_path, reduced);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
