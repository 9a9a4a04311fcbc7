#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tabij/polyomino.hpp"
#include "util.hpp"

using namespace tabij;

static const char* B6 = "1100/1100/0110/0111/0011/0011";

TEST_CASE("run endpoints") {
  Grid01 g = G("0110/0000");
  CHECK(row_leftmost(g, 1) == 2);
  CHECK(row_rightmost(g, 1) == 3);
  CHECK(row_leftmost(g, 2) == 0);
  CHECK(row_rightmost(g, 2) == 0);
  CHECK(col_topmost(g, 2) == 1);
  CHECK(col_bottommost(g, 2) == 1);
  CHECK(col_topmost(g, 1) == 0);
  CHECK(col_bottommost(g, 4) == 0);
}

TEST_CASE("polyomino validation") {
  CHECK(validate_para(G(B6)).grid() == G(B6));
  CHECK(validate_para(G("1")).rows() == 1);
  CHECK(kind_of([] { validate_para(G("01/11")); }) == ErrKind::Corner);
  CHECK(at_of([] { validate_para(G("01/11")); }) == std::array<int, 4>{1, 1, 0, 0});
  CHECK(kind_of([] { validate_para(G("11/10")); }) == ErrKind::Corner);
  CHECK(at_of([] { validate_para(G("11/10")); }) == std::array<int, 4>{2, 2, 0, 0});
  CHECK(kind_of([] { validate_para(G("101/111")); }) == ErrKind::RowGap);
  CHECK(at_of([] { validate_para(G("101/111")); }) == std::array<int, 4>{1, 2, 0, 0});
  CHECK(kind_of([] { validate_para(G("1/0/1")); }) == ErrKind::RowGap);
  CHECK(kind_of([] { validate_para(G("11/01/11")); }) == ErrKind::Monotonicity);
  CHECK(at_of([] { validate_para(G("11/01/11")); }) == std::array<int, 4>{2, 3, 0, 0});
  CHECK(kind_of([] { validate_para(G("11/10/11")); }) == ErrKind::Monotonicity);
  CHECK(at_of([] { validate_para(G("11/10/11")); }) == std::array<int, 4>{1, 2, 0, 0});
  CHECK(kind_of([] { validate_para(G("10/01")); }) == ErrKind::Overlap);
  CHECK(at_of([] { validate_para(G("10/01")); }) == std::array<int, 4>{1, 2, 0, 0});
  CHECK(kind_of([] { validate_ribbon(G("11/11")); }) == ErrKind::Area);
  CHECK(validate_ribbon(G("11/01")).grid() == G("11/01"));
}

TEST_CASE("bounce") {
  RibbonPolyomino b = bounce(validate_para(G(B6)));
  CHECK(GS(b.grid()) == "1100/0100/0100/0111/0001/0001");
  CHECK(bounce(b.para()) == b);
  CHECK(GS(bounce(validate_para(G("11/11"))).grid()) == "11/01");
}

TEST_CASE("label conventions") {
  CHECK(validate_lpara(G("11/11"), LB({0, 1}, {2, 3})).labels() == LB({0, 1}, {2, 3}));
  CHECK(kind_of([] { validate_lpara(G("11/11"), LB({1, 0}, {2, 3})); }) ==
        ErrKind::LabelConvention);
  CHECK(kind_of([] { validate_lpara(G("11/11/11"), LB({0, 2, 1}, {3, 4})); }) ==
        ErrKind::LabelConvention);
  CHECK(at_of([] { validate_lpara(G("11/11/11"), LB({0, 2, 1}, {3, 4})); }) ==
        std::array<int, 4>{2, 3, 0, 0});
  CHECK(kind_of([] { validate_lpara(G("11/11"), LB({0, 1}, {3, 2})); }) ==
        ErrKind::LabelConvention);
  CHECK(kind_of([] { validate_lpara(G("11/11"), LB({0, 0}, {2, 3})); }) == ErrKind::Label);
  CHECK(kind_of([] { validate_lrib(G("11/11"), LB({0, 1}, {2, 3})); }) == ErrKind::Area);
  // runs that start in different columns carry no cross constraint
  CHECK(validate_lpara(G("10/11"), LB({0, 1}, {3, 2})).labels() == LB({0, 1}, {3, 2}));
}

TEST_CASE("decompose golden") {
  LabelledPara d = validate_lpara(G(B6), LB({0, 4, 1, 3, 2, 5}, {6, 8, 9, 7}));
  Decomposition dec = decompose(d);
  CHECK(GS(dec.ribbon.grid()) == "1100/0100/0100/0111/0001/0001");
  CHECK(dec.ribbon.labels() == LB({0, 1, 3, 4, 2, 5}, {6, 8, 7, 9}));
  CHECK(dec.surplus == std::vector<int>{0, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK(expand(dec.ribbon, dec.surplus) == d);
}

TEST_CASE("expand errors") {
  LabelledRibbon r = validate_lrib(G("11/01"), LB({0, 1}, {2, 3}));
  CHECK(kind_of([&] { expand(r, {0, 0}); }) == ErrKind::Length);
  CHECK(kind_of([&] { expand(r, {-1, 0, 0}); }) == ErrKind::Support);
  CHECK(kind_of([&] { expand(r, {0, 0, 1}); }) == ErrKind::Support);  // pushed off the grid

  CHECK(GS(expand(r, {1, 0, 0}).grid()) == "11/11");

  LabelledRibbon r2 = validate_lrib(G("10/11"), LB({0, 1}, {2, 3}));
  CHECK(kind_of([&] { expand(r2, {0, 0, 1}); }) == ErrKind::Support);  // bounce changes
  // label 1 shares row 1's run group; a positive surplus would lift it past the top
  CHECK(kind_of([&] { expand(r2, {1, 0, 0}); }) == ErrKind::Support);

  // surplus equalizes two run groups and breaks the label convention
  LabelledRibbon r3 = validate_lrib(G("10/11/01"), LB({0, 2, 1}, {3, 4}));
  try {
    expand(r3, {1, 0, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::Support);
    CHECK(std::string(e.what()).find("invalid") != std::string::npos);
  }
}

TEST_CASE("enumeration counts and order") {
  CHECK(all_para(2, 2).size() == 3);
  CHECK(all_para(3, 3).size() == 20);
  CHECK(all_para(4, 4).size() == 175);
  CHECK(all_rib(4, 4).size() == 20);
  CHECK(all_rib(5, 3).size() == 15);
  CHECK(all_lpara(3, 2).size() == 12);
  CHECK(all_lrib(3, 2).size() == 7);

  std::vector<std::string> got;
  for (const LabelledPara& d : all_lpara(2, 2))
    got.push_back(GS(d.grid()) + " r" + std::to_string(d.labels().rows[1]) + " c" +
                  std::to_string(d.labels().cols[0]) + std::to_string(d.labels().cols[1]));
  CHECK(got == std::vector<std::string>{"10/11 r1 c23", "10/11 r1 c32", "11/01 r1 c23",
                                        "11/11 r1 c23"});

  for (const RibbonPolyomino& r : all_rib(3, 3))
    CHECK(bounce(r.para()) == r);
  CHECK(kind_of([] { all_para(10, 3); }) == ErrKind::SizeGuard);
  CHECK(all_para(10, 2, Guard{24}).size() > 0);
  CHECK(kind_of([] { all_para(10, 3, Guard{24}); }) == ErrKind::SizeGuard);
  CHECK(kind_of([] { all_rib(0, 3); }) == ErrKind::Dimension);
}
