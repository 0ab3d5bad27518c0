#include "hgm/zigzag.hpp"

#include <algorithm>
#include <sstream>

namespace hgm {

ZigzagProfile zigzag_profile(const MergedList& merged, long long phi0) {
  ZigzagProfile p;
  p.merged = merged;
  p.phi.reserve(merged.size() + 1);
  p.phi.push_back(phi0);
  long long cur = phi0;
  for (const auto& e : merged.entries) {
    cur += (e.side == Side::Alpha) ? 1 : -1;
    p.phi.push_back(cur);
  }
  return p;
}

std::vector<long long> hodge_tate_multiset(const ZigzagProfile& profile) {
  std::vector<long long> ht;
  for (size_t i = 0; i < profile.merged.size(); ++i)
    if (profile.merged.entries[i].side == Side::Beta) ht.push_back(profile.phi[i + 1]);
  std::sort(ht.begin(), ht.end());
  return ht;
}

long long HodgeVector::sum() const {
  long long s = 0;
  for (long long v : h) s += v;
  return s;
}

std::string HodgeVector::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) os << ",";
    os << h[i];
  }
  os << "]";
  return os.str();
}

HodgeVector hodge_vector_zigzag(const GammaVector& g) {
  HypergeometricDatum hd = gamma_to_datum(g);
  ZigzagProfile p = zigzag_profile(hd, g.r());
  HodgeVector hv;
  hv.h.assign(g.n() + 1, 0);
  for (long long w : hodge_tate_multiset(p)) {
    if (w < 0 || w > g.n())
      fail(errc::internal_error,
           "Hodge-Tate weight " + std::to_string(w) + " outside [0,n] for gamma " + g.str());
    hv.h[w] += 1;
  }
  return hv;
}

HodgePolygon hodge_polygon(const HodgeVector& h) {
  HodgePolygon poly;
  poly.vertices.emplace_back(0, 0);
  long long x = 0, y = 0;
  for (size_t k = 0; k < h.h.size(); ++k) {
    if (h.h[k] == 0) continue;
    x += h.h[k];
    y += h.h[k] * static_cast<long long>(k);
    poly.vertices.emplace_back(x, y);
  }
  return poly;
}

namespace {

std::string render_ascii(const ZigzagProfile& p) {
  long long lo = p.phi[0], hi = p.phi[0];
  for (long long v : p.phi) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  size_t cols = p.phi.size();
  std::ostringstream os;
  for (long long level = hi; level >= lo; --level) {
    std::ostringstream row;
    row << level << " | ";
    std::string cells(cols, ' ');
    for (size_t i = 0; i < cols; ++i) {
      if (p.phi[i] != level) continue;
      if (i == 0)
        cells[i] = '*';
      else
        cells[i] = (p.merged.entries[i - 1].side == Side::Alpha) ? '^' : 'v';
    }
    os << row.str() << cells << "\n";
  }
  return os.str();
}

std::string render_svg(const ZigzagProfile& p) {
  const long long margin = 40;
  const long long plot_h = 100;
  const long long step = 40;
  size_t cols = p.phi.size();
  long long width = static_cast<long long>(cols - 1) * step + 2 * margin;
  long long height = plot_h + 2 * margin;
  long long lo = p.phi[0], hi = p.phi[0];
  for (long long v : p.phi) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  long long range = std::max<long long>(1, hi - lo);
  auto xc = [&](size_t i) { return margin + static_cast<long long>(i) * step; };
  auto yc = [&](long long phi) { return margin + (hi - phi) * plot_h / range; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
     << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < cols; ++i) {
    if (i) os << " ";
    os << xc(i) << "," << yc(p.phi[i]);
  }
  os << "\"/>\n";
  for (size_t i = 1; i < cols; ++i) {
    if (p.merged.entries[i - 1].side == Side::Beta)
      os << "<circle cx=\"" << xc(i) << "\" cy=\"" << yc(p.phi[i]) << "\" r=\"4\"/>\n";
  }
  for (size_t i = 1; i < cols; ++i) {
    os << "<text x=\"" << xc(i) << "\" y=\"" << height - margin / 4 << "\" font-size=\"12\" "
       << "text-anchor=\"middle\">" << p.merged.entries[i - 1].value.str() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_zigzag(const ZigzagProfile& profile, std::string_view format) {
  if (format == "ascii") return render_ascii(profile);
  if (format == "svg") return render_svg(profile);
  fail(errc::unsupported_format, "format '" + std::string(format) + "' (expected ascii or svg)");
}

}  // namespace hgm
