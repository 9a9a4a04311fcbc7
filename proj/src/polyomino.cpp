#include "tabij/polyomino.hpp"

#include <algorithm>

namespace tabij {

int row_leftmost(const Grid01& g, int i) {
  for (int j = 1; j <= g.cols(); ++j)
    if (g.at(i, j)) return j;
  return 0;
}

int row_rightmost(const Grid01& g, int i) {
  for (int j = g.cols(); j >= 1; --j)
    if (g.at(i, j)) return j;
  return 0;
}

int col_topmost(const Grid01& g, int j) {
  for (int i = 1; i <= g.rows(); ++i)
    if (g.at(i, j)) return i;
  return 0;
}

int col_bottommost(const Grid01& g, int j) {
  for (int i = g.rows(); i >= 1; --i)
    if (g.at(i, j)) return i;
  return 0;
}

ParaPolyomino validate_para(Grid01 g) {
  const int m = g.rows(), n = g.cols();
  if (!g.at(1, 1)) fail(ErrKind::Corner, "cell (1,1) must be filled", {1, 1});
  if (!g.at(m, n))
    fail(ErrKind::Corner,
         "cell (" + std::to_string(m) + "," + std::to_string(n) + ") must be filled", {m, n});
  for (int i = 1; i <= m; ++i) {
    int L = row_leftmost(g, i), R = row_rightmost(g, i);
    if (L == 0) fail(ErrKind::RowGap, "row " + std::to_string(i) + " is empty", {i});
    for (int j = L; j <= R; ++j)
      if (!g.at(i, j))
        fail(ErrKind::RowGap,
             "row " + std::to_string(i) + " breaks at column " + std::to_string(j), {i, j});
  }
  for (int i = 1; i < m; ++i) {
    if (row_leftmost(g, i + 1) < row_leftmost(g, i))
      fail(ErrKind::Monotonicity,
           "run starts step left from row " + std::to_string(i) + " to " + std::to_string(i + 1),
           {i, i + 1});
    if (row_rightmost(g, i + 1) < row_rightmost(g, i))
      fail(ErrKind::Monotonicity,
           "run ends step left from row " + std::to_string(i) + " to " + std::to_string(i + 1),
           {i, i + 1});
    if (row_leftmost(g, i + 1) > row_rightmost(g, i))
      fail(ErrKind::Overlap,
           "rows " + std::to_string(i) + "," + std::to_string(i + 1) + " share no column",
           {i, i + 1});
  }
  return ParaPolyomino(std::move(g));
}

static int area(const Grid01& g) {
  int c = 0;
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) c += g.at(i, j);
  return c;
}

RibbonPolyomino validate_ribbon(Grid01 g) {
  ParaPolyomino p = validate_para(std::move(g));
  const int want = p.rows() + p.cols() - 1;
  int got = area(p.grid());
  if (got != want)
    fail(ErrKind::Area,
         "ribbon needs m+n-1 = " + std::to_string(want) + " cells, got " + std::to_string(got));
  return RibbonPolyomino(std::move(p));
}

RibbonPolyomino bounce(const ParaPolyomino& p) {
  const Grid01& g = p.grid();
  const int m = g.rows(), n = g.cols();
  Grid01 out(m, n);
  int r = 1, c = 1;
  out.set(1, 1, 1);
  for (int step = 0; step <= m + n; ++step) {
    int c2 = row_rightmost(g, r);
    for (int j = c + 1; j <= c2; ++j) out.set(r, j, 1);
    c = c2;
    if (r == m && c == n) return validate_ribbon(std::move(out));
    int r2 = col_bottommost(g, c);
    for (int i = r + 1; i <= r2; ++i) out.set(i, c, 1);
    r = r2;
    if (r == m && c == n) return validate_ribbon(std::move(out));
  }
  fail(ErrKind::Consistency, "bounce trace did not reach the far corner");
}

// Positions sharing a value form one maximal run; values are weakly increasing.
static std::vector<std::pair<int, int>> runs_of(const std::vector<int>& vals) {
  std::vector<std::pair<int, int>> out;
  std::size_t s = 0;
  for (std::size_t k = 1; k <= vals.size(); ++k)
    if (k == vals.size() || vals[k] != vals[s]) {
      out.push_back({int(s), int(k)});
      s = k;
    }
  return out;
}

static void check_conventions(const Grid01& g, const Labelling& l) {
  check_labelling(g.rows(), g.cols(), l);
  if (l.rows[0] != 0) fail(ErrKind::LabelConvention, "top row must carry label 0", {1});
  std::vector<int> lefts, tops;
  for (int i = 1; i <= g.rows(); ++i) lefts.push_back(row_leftmost(g, i));
  for (int j = 1; j <= g.cols(); ++j) tops.push_back(col_topmost(g, j));
  for (auto [s, e] : runs_of(lefts))
    for (int k = s; k + 1 < e; ++k)
      if (l.rows[k] > l.rows[k + 1])
        fail(ErrKind::LabelConvention,
             "rows " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                 " share a run start but labels decrease",
             {k + 1, k + 2});
  for (auto [s, e] : runs_of(tops))
    for (int k = s; k + 1 < e; ++k)
      if (l.cols[k] > l.cols[k + 1])
        fail(ErrKind::LabelConvention,
             "columns " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                 " share a run start but labels decrease",
             {k + 1, k + 2});
}

LabelledPara validate_lpara(Grid01 g, Labelling l) {
  ParaPolyomino p = validate_para(std::move(g));
  check_conventions(p.grid(), l);
  return LabelledPara(std::move(p), std::move(l));
}

LabelledRibbon validate_lrib(Grid01 g, Labelling l) {
  RibbonPolyomino r = validate_ribbon(std::move(g));
  check_conventions(r.grid(), l);
  return LabelledRibbon(std::move(r), std::move(l));
}

Decomposition decompose(const LabelledPara& d) {
  const Grid01& g = d.grid();
  const int m = g.rows(), n = g.cols();
  RibbonPolyomino rib = bounce(d.poly());
  const Grid01& B = rib.grid();
  std::vector<int> lefts, tops;
  for (int i = 1; i <= m; ++i) lefts.push_back(row_leftmost(B, i));
  for (int j = 1; j <= n; ++j) tops.push_back(col_topmost(B, j));
  Labelling l2;
  l2.rows = d.labels().rows;
  l2.cols = d.labels().cols;
  for (auto [s, e] : runs_of(lefts)) std::sort(l2.rows.begin() + s, l2.rows.begin() + e);
  for (auto [s, e] : runs_of(tops)) std::sort(l2.cols.begin() + s, l2.cols.begin() + e);
  std::vector<int> surplus(std::size_t(m + n - 1), 0);
  for (int i = 1; i <= m; ++i) {
    int lab = d.labels().rows[i - 1];
    int z = lefts[i - 1] - row_leftmost(g, i);
    if (lab == 0) {
      if (z != 0) fail(ErrKind::Consistency, "top row moved under bounce");
    } else {
      surplus[lab - 1] = z;
    }
  }
  for (int j = 1; j <= n; ++j)
    surplus[d.labels().cols[j - 1] - 1] = tops[j - 1] - col_topmost(g, j);
  for (int z : surplus)
    if (z < 0) fail(ErrKind::Consistency, "negative surplus from bounce");
  return Decomposition{validate_lrib(B, std::move(l2)), std::move(surplus)};
}

LabelledPara expand(const LabelledRibbon& d, const std::vector<int>& zeta) {
  const Grid01& B = d.grid();
  const int m = B.rows(), n = B.cols();
  if (int(zeta.size()) != m + n - 1)
    fail(ErrKind::Length, "surplus vector needs " + std::to_string(m + n - 1) +
                              " entries, got " + std::to_string(zeta.size()));
  for (std::size_t k = 0; k < zeta.size(); ++k)
    if (zeta[k] < 0)
      fail(ErrKind::Support, "surplus for label " + std::to_string(k + 1) + " is negative",
           {int(k + 1)});
  auto zf = [&](int lab) { return lab == 0 ? 0 : zeta[lab - 1]; };
  std::vector<int> lefts, tops;
  for (int i = 1; i <= m; ++i) lefts.push_back(row_leftmost(B, i));
  for (int j = 1; j <= n; ++j) tops.push_back(col_topmost(B, j));
  Labelling l2{d.labels().rows, d.labels().cols};
  auto by_surplus = [&](int a, int b) {
    return zf(a) != zf(b) ? zf(a) > zf(b) : a < b;
  };
  for (auto [s, e] : runs_of(lefts)) std::sort(l2.rows.begin() + s, l2.rows.begin() + e, by_surplus);
  for (auto [s, e] : runs_of(tops)) std::sort(l2.cols.begin() + s, l2.cols.begin() + e, by_surplus);
  std::vector<int> L(m), U(n);
  for (int i = 0; i < m; ++i) {
    L[i] = lefts[i] - zf(l2.rows[i]);
    if (L[i] < 1)
      fail(ErrKind::Support, "row label " + std::to_string(l2.rows[i]) + " pushed off the grid",
           {i + 1});
  }
  for (int j = 0; j < n; ++j) {
    U[j] = tops[j] - zf(l2.cols[j]);
    if (U[j] < 1)
      fail(ErrKind::Support,
           "column label " + std::to_string(l2.cols[j]) + " pushed off the grid", {j + 1});
  }
  Grid01 out(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (U[j - 1] <= i && L[i - 1] <= j) out.set(i, j, 1);
  for (int i = 1; i <= m; ++i)
    if (row_leftmost(out, i) == 0)
      fail(ErrKind::Support, "row " + std::to_string(i) + " comes out empty", {i});
  LabelledPara res = [&] {
    try {
      return validate_lpara(std::move(out), std::move(l2));
    } catch (const Error& e) {
      fail(ErrKind::Support, std::string("expanded shape invalid (") + e.what() + ")");
    }
  }();
  if (bounce(res.poly()).grid() != B)
    fail(ErrKind::Support, "surplus vector changes the bounce ribbon");
  return res;
}

// ---------- enumeration ----------

static void poly_guard(int m, int n, Guard guard) {
  if (m < 1 || n < 1) fail(ErrKind::Dimension, "enumeration needs m,n >= 1");
  if (m + n > guard.poly_limit())
    fail(ErrKind::SizeGuard, "m+n = " + std::to_string(m + n) + " exceeds polyomino guard " +
                                 std::to_string(guard.poly_limit()));
}

static std::string grid_key(const Grid01& g) {
  std::string s;
  for (int i = 1; i <= g.rows(); ++i) s += g.row_string(i);
  return s;
}

static std::vector<Grid01> para_grids(int m, int n) {
  std::vector<Grid01> out;
  std::vector<std::pair<int, int>> rows;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (rows.back().second != n) return;
      Grid01 g(m, n);
      for (int r = 0; r < m; ++r)
        for (int j = rows[r].first; j <= rows[r].second; ++j) g.set(r + 1, j, 1);
      out.push_back(std::move(g));
      return;
    }
    int pL = i ? rows.back().first : 1, pR = i ? rows.back().second : 1;
    for (int L = pL; L <= (i ? pR : 1); ++L)
      for (int R = std::max(L, pR); R <= n; ++R) {
        rows.push_back({L, R});
        self(self, i + 1);
        rows.pop_back();
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const Grid01& a, const Grid01& b) { return grid_key(a) < grid_key(b); });
  return out;
}

void enumerate_para(int m, int n, const std::function<void(const ParaPolyomino&)>& sink,
                    Guard guard) {
  poly_guard(m, n, guard);
  for (Grid01& g : para_grids(m, n)) sink(validate_para(std::move(g)));
}

void enumerate_rib(int m, int n, const std::function<void(const RibbonPolyomino&)>& sink,
                   Guard guard) {
  poly_guard(m, n, guard);
  for (Grid01& g : para_grids(m, n))
    if (area(g) == m + n - 1) sink(validate_ribbon(std::move(g)));
}

// All label vectors for run groups `runs` over the label pool [lo,hi], each group
// ascending inside; when zero_first, label lo must land in the first group.
static std::vector<std::vector<int>> label_choices(const std::vector<std::pair<int, int>>& runs,
                                                   int lo, int hi, bool zero_first) {
  std::vector<std::vector<int>> out;
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  std::vector<int> acc;
  auto rec = [&](auto&& self, std::size_t k, std::vector<int> remaining) -> void {
    if (k == runs.size()) {
      out.push_back(acc);
      return;
    }
    int need = runs[k].second - runs[k].first;
    std::vector<int> combo;
    auto pick = [&](auto&& pickself, std::size_t from) -> void {
      if (int(combo.size()) == need) {
        if (k == 0 && zero_first && combo[0] != lo) return;
        std::vector<int> rest;
        std::size_t c = 0;
        for (int v : remaining) {
          if (c < combo.size() && combo[c] == v) {
            ++c;
            continue;
          }
          rest.push_back(v);
        }
        std::size_t base = acc.size();
        acc.insert(acc.end(), combo.begin(), combo.end());
        self(self, k + 1, rest);
        acc.resize(base);
        return;
      }
      for (std::size_t t = from; t < remaining.size(); ++t) {
        combo.push_back(remaining[t]);
        pickself(pickself, t + 1);
        combo.pop_back();
      }
    };
    pick(pick, 0);
  };
  rec(rec, 0, pool);
  std::sort(out.begin(), out.end());
  return out;
}

static void emit_labelled(const Grid01& g, int m, int n,
                          const std::function<void(const Grid01&, Labelling)>& sink) {
  std::vector<int> lefts, tops;
  for (int i = 1; i <= m; ++i) lefts.push_back(row_leftmost(g, i));
  for (int j = 1; j <= n; ++j) tops.push_back(col_topmost(g, j));
  auto rchoices = label_choices(runs_of(lefts), 0, m - 1, true);
  auto cchoices = label_choices(runs_of(tops), m, m + n - 1, false);
  for (const auto& rl : rchoices)
    for (const auto& cl : cchoices) sink(g, Labelling{rl, cl});
}

void enumerate_lpara(int m, int n, const std::function<void(const LabelledPara&)>& sink,
                     Guard guard) {
  poly_guard(m, n, guard);
  for (const Grid01& g : para_grids(m, n))
    emit_labelled(g, m, n,
                  [&](const Grid01& gg, Labelling l) { sink(validate_lpara(gg, std::move(l))); });
}

void enumerate_lrib(int m, int n, const std::function<void(const LabelledRibbon&)>& sink,
                    Guard guard) {
  poly_guard(m, n, guard);
  for (const Grid01& g : para_grids(m, n)) {
    if (area(g) != m + n - 1) continue;
    emit_labelled(g, m, n,
                  [&](const Grid01& gg, Labelling l) { sink(validate_lrib(gg, std::move(l))); });
  }
}

std::vector<ParaPolyomino> all_para(int m, int n, Guard guard) {
  std::vector<ParaPolyomino> out;
  enumerate_para(m, n, [&](const ParaPolyomino& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<RibbonPolyomino> all_rib(int m, int n, Guard guard) {
  std::vector<RibbonPolyomino> out;
  enumerate_rib(m, n, [&](const RibbonPolyomino& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<LabelledPara> all_lpara(int m, int n, Guard guard) {
  std::vector<LabelledPara> out;
  enumerate_lpara(m, n, [&](const LabelledPara& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<LabelledRibbon> all_lrib(int m, int n, Guard guard) {
  std::vector<LabelledRibbon> out;
  enumerate_lrib(m, n, [&](const LabelledRibbon& p) { out.push_back(p); }, guard);
  return out;
}

}  // namespace tabij
