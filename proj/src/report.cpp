#include "hgm/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "hgm/cone.hpp"
#include "hgm/genfun.hpp"

namespace hgm {

namespace {

std::vector<long long> run_method(const GammaVector& g, const std::string& name) {
  if (name == "zigzag") return hodge_vector_zigzag(g).h;
  if (name == "genfun") return hodge_vector_genfun(g).h;
  if (name == "cone") {
    ConeBasis basis = cone_basis(g);
    return hodge_from_census(weight_census(basis, g.n()), g.n()).h;
  }
  fail(errc::parse_error, "unknown method '" + name + "'");
}

}  // namespace

ComputeReport compute_report(const GammaVector& g, const std::vector<std::string>& methods) {
  std::vector<std::string> wanted = methods;
  if (wanted.empty()) wanted = {"zigzag"};
  if (wanted.size() == 1 && wanted[0] == "all") wanted = {"zigzag", "genfun", "cone"};

  HypergeometricDatum hd = gamma_to_datum(g);
  ComputeReport rep;
  rep.gamma = g.str();
  rep.alpha = hd.alpha_str();
  rep.beta = hd.beta_str();
  rep.L = g.L;
  rep.M = level(hd).get_str();
  rep.n = g.n();

  for (const auto& name : wanted) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<long long> h = run_method(g, name);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.methods.push_back({name, std::move(h), ms});
  }
  rep.hodge = rep.methods.front().hodge;
  if (rep.methods.size() > 1) {
    bool same = true;
    for (const auto& m : rep.methods) same = same && m.hodge == rep.hodge;
    rep.agree = same;
  }
  return rep;
}

std::string report_json(const ComputeReport& r) {
  nlohmann::ordered_json j;
  j["gamma"] = r.gamma;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["L"] = r.L;
  try {
    j["M"] = std::stoll(r.M);
  } catch (const std::exception&) {
    j["M"] = r.M;
  }
  j["n"] = r.n;
  j["hodge"] = r.hodge;
  nlohmann::ordered_json methods = nlohmann::ordered_json::object();
  for (const auto& m : r.methods) {
    methods[m.name] = {{"hodge", m.hodge}, {"ms", m.ms}};
  }
  j["methods"] = methods;
  if (r.agree.has_value()) j["agree"] = *r.agree;
  return j.dump();
}

std::string report_human(const ComputeReport& r) {
  std::ostringstream os;
  auto vec = [](const std::vector<long long>& v) {
    std::ostringstream s;
    s << "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s << ",";
      s << v[i];
    }
    s << "]";
    return s.str();
  };
  os << "gamma  " << r.gamma << "\n";
  os << "alpha  " << r.alpha << "\n";
  os << "beta   " << r.beta << "\n";
  os << "L      " << r.L << "\n";
  os << "M      " << r.M << "\n";
  os << "n      " << r.n << "\n";
  os << "hodge  " << vec(r.hodge) << "\n";
  for (const auto& m : r.methods) {
    std::ostringstream line;
    line << "method " << m.name;
    os << line.str() << std::string(line.str().size() < 16 ? 16 - line.str().size() : 1, ' ')
       << vec(m.hodge) << "  (" << m.ms << " ms)\n";
  }
  if (r.agree.has_value()) os << "agree  " << (*r.agree ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace hgm
