#include <doctest.h>

#include <algorithm>

#include "hgm/scan.hpp"
#include "hgm/zigzag.hpp"

using namespace hgm;

TEST_CASE("zig-zag profiles") {
  auto phi_of = [](const char* gamma) {
    GammaVector g = GammaVector::parse(gamma);
    return zigzag_profile(gamma_to_datum(g), g.r()).phi;
  };
  CHECK(phi_of("3,-1,-1,-1") == std::vector<long long>{1, 2, 3, 2, 1, 0, 1});
  CHECK(phi_of("1,-1") == std::vector<long long>{1, 0, 1});
  CHECK(phi_of("5,-2,-2,-1") == std::vector<long long>{1, 2, 3, 2, 1, 2, 3, 2, 1, 0, 1});
}

TEST_CASE("Hodge-Tate multisets") {
  auto ht_of = [](const char* gamma) {
    GammaVector g = GammaVector::parse(gamma);
    return hodge_tate_multiset(zigzag_profile(gamma_to_datum(g), g.r()));
  };
  CHECK(ht_of("3,-1,-1,-1") == std::vector<long long>{0, 1, 2});
  CHECK(ht_of("6,-3,-2,-1") == std::vector<long long>{0, 1, 1, 1, 1, 2});
  CHECK(ht_of("5,2,-6,-1") == std::vector<long long>{0, 1, 1, 1, 1, 2, 2});
}

TEST_CASE("Hodge vectors by the zig-zag method") {
  CHECK(hodge_vector_zigzag(GammaVector::parse("3,-1,-1,-1")).h ==
        std::vector<long long>{1, 1, 1, 0});
  CHECK(hodge_vector_zigzag(GammaVector::parse("4,4,2,-3,-6,-1")).h ==
        std::vector<long long>{1, 2, 4, 3, 0, 0});
  CHECK(hodge_vector_zigzag(GammaVector::parse("4,-1,-1,-1,-1")).h ==
        std::vector<long long>{1, 1, 1, 1, 0});
}

TEST_CASE("profile bounds and sizes over small gammas") {
  for (const auto& g : enumerate_canonical_gammas(10)) {
    ZigzagProfile p = zigzag_profile(gamma_to_datum(g), g.r());
    CHECK(p.phi.front() == g.r());
    CHECK(p.phi.back() == g.r());
    for (long long v : p.phi) {
      CHECK(v >= 0);
      CHECK(v <= g.n());
    }
    auto ht = hodge_tate_multiset(p);
    CHECK(static_cast<long long>(ht.size()) == g.L);
    HodgeVector h = hodge_vector_zigzag(g);
    CHECK(h.sum() == g.L);
    CHECK(static_cast<int>(h.h.size()) == g.n() + 1);
  }
}

TEST_CASE("reduction concatenates the V ditches") {
  GammaVector g = GammaVector::parse("3,-1,-1,-1");
  ReducedDatum red = reduce_datum(gamma_to_datum(g));
  ZigzagProfile p = zigzag_profile(merged_from(red.alpha, red.beta), g.r());
  std::vector<long long> ht = hodge_tate_multiset(p);
  for (auto& w : ht) w += red.offset;
  std::sort(ht.begin(), ht.end());
  CHECK(ht == std::vector<long long>{0, 1});  // reduced Hodge vector [1,1]
}

TEST_CASE("hodge polygon") {
  CHECK(hodge_polygon(HodgeVector{{1, 1, 1}}).vertices ==
        std::vector<std::pair<long long, long long>>{{0, 0}, {1, 0}, {2, 1}, {3, 3}});
  CHECK(hodge_polygon(HodgeVector{{1, 4, 1}}).vertices ==
        std::vector<std::pair<long long, long long>>{{0, 0}, {1, 0}, {5, 4}, {6, 6}});
  CHECK(hodge_polygon(HodgeVector{{5}}).vertices ==
        std::vector<std::pair<long long, long long>>{{0, 0}, {5, 0}});
}

TEST_CASE("ascii rendering") {
  GammaVector g = GammaVector::parse("1,-1");
  std::string art = render_zigzag(zigzag_profile(gamma_to_datum(g), g.r()), "ascii");
  // Two levels: "* ^" over " v ".
  CHECK(art == "1 | * ^\n0 |  v \n");

  GammaVector g3 = GammaVector::parse("3,-1,-1,-1");
  std::string art3 = render_zigzag(zigzag_profile(gamma_to_datum(g3), g3.r()), "ascii");
  CHECK(art3.find('*') != std::string::npos);
  CHECK(std::count(art3.begin(), art3.end(), '\n') == 4);  // levels 0..3
  for (char c : art3) {
    bool allowed = std::isdigit(static_cast<unsigned char>(c)) ||
                   std::string(".-^v|* \n").find(c) != std::string::npos;
    CHECK(allowed);
  }
}

TEST_CASE("svg rendering structure") {
  GammaVector g = GammaVector::parse("3,-1,-1,-1");
  ZigzagProfile p = zigzag_profile(gamma_to_datum(g), g.r());
  std::string svg = render_zigzag(p, "svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 ") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  // L circles at the beta steps, 2L labels.
  CHECK(std::count(svg.begin(), svg.end(), '\n') >= 3);
  size_t circles = 0, texts = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) ++circles, ++pos;
  pos = 0;
  while ((pos = svg.find("<text", pos)) != std::string::npos) ++texts, ++pos;
  CHECK(circles == 3);
  CHECK(texts == 6);
  // Rendering is deterministic.
  CHECK(svg == render_zigzag(p, "svg"));
}

TEST_CASE("unsupported format") {
  GammaVector g = GammaVector::parse("1,-1");
  CHECK_THROWS_WITH_AS(render_zigzag(zigzag_profile(gamma_to_datum(g), g.r()), "png"),
                       doctest::Contains("UnsupportedFormat"), Error);
}
