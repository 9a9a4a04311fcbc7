#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "tabij/bijection.hpp"
#include "tabij/verify.hpp"
#include "util.hpp"

using namespace tabij;

static const std::vector<std::pair<int, int>> kSizes = {
    {1, 1}, {1, 4}, {4, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2},
    {3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 3}, {3, 5}};

TEST_CASE("full cross-check suite per size") {
  for (auto [m, n] : kSizes) {
    std::ostringstream report;
    bool ok = verify_size(m, n, Guard{}, report);
    INFO(report.str());
    CHECK(ok);
  }
}

TEST_CASE("mask routes agree on random tableaux up to 7x13") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = std::uniform_int_distribution<int>(1, 7)(rng);
    int n = std::uniform_int_distribution<int>(1, 13)(rng);
    EWTableau t = validate_ew(rand_ew(m, n, rng));
    CHECK(cornersupport_mask(t) == cornersupport_mask_bruteforce(t.grid()));
    for (int e : eta(t)) CHECK(e >= 1);
  }
}

TEST_CASE("cornersupport is invariant under line permutations") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    int m = std::uniform_int_distribution<int>(2, 5)(rng);
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    Grid01 g = rand_ew(m, n, rng);
    // permute the rows below the top and all columns; the family is closed under both
    std::vector<int> pr(m), pc(n);
    for (int i = 0; i < m; ++i) pr[i] = i + 1;
    for (int j = 0; j < n; ++j) pc[j] = j + 1;
    std::shuffle(pr.begin() + 1, pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    Grid01 h(m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) h.set(i, j, g.at(pr[i - 1], pc[j - 1]));
    Mask kg = cornersupport_mask_bruteforce(g);
    Mask kh = cornersupport_mask(validate_ew(h));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) CHECK(kh.at(i, j) == kg.at(pr[i - 1], pc[j - 1]));
  }
}

TEST_CASE("serialization round trips on every 3x3 object") {
  for (const MarkedEWTableau& t : all_mew(3, 3)) {
    GridDoc d{t.tableau().grid(), {}, t.decoration()};
    CHECK(parse_text(to_text(d)) == d);
    CHECK(parse_json(to_json(d)) == d);
  }
  for (const LabelledPara& p : all_lpara(3, 3)) {
    GridDoc d{p.grid(), p.labels(), {}};
    CHECK(parse_text(to_text(d)) == d);
    CHECK(parse_json(to_json(d)) == d);
  }
}

TEST_CASE("decompose output always re-expands, with surplus bounded by eta") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}}) {
    for (const LabelledPara& d : all_lpara(m, n)) {
      Decomposition dec = decompose(d);
      CHECK(int(dec.surplus.size()) == m + n - 1);
      std::vector<int> et = eta(psi(dec.ribbon));
      for (std::size_t k = 0; k < dec.surplus.size(); ++k) {
        CHECK(dec.surplus[k] >= 0);
        CHECK(dec.surplus[k] < et[k]);
      }
      CHECK(expand(dec.ribbon, dec.surplus) == d);
    }
  }
}

TEST_CASE("phi image is exactly the labelled ribbon family") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}}) {
    std::set<std::string> image, family;
    for (const EWTableau& t : all_ew(m, n)) {
      LabelledRibbon r = phi(t);
      image.insert(to_text(GridDoc{r.grid(), r.labels(), {}}));
    }
    for (const LabelledRibbon& r : all_lrib(m, n))
      family.insert(to_text(GridDoc{r.grid(), r.labels(), {}}));
    CHECK(image == family);
  }
}
