#include "tabij/ew.hpp"

#include <algorithm>
#include <numeric>

namespace tabij {

EWTableau validate_ew(Grid01 g) {
  const int m = g.rows(), n = g.cols();
  for (int j = 1; j <= n; ++j)
    if (!g.at(1, j))
      fail(ErrKind::TopRow, "clause (i): top row holds a zero at column " + std::to_string(j),
           {1, j});
  for (int i = 2; i <= m; ++i) {
    bool has_zero = false;
    for (int j = 1; j <= n && !has_zero; ++j) has_zero = g.at(i, j) == 0;
    if (!has_zero)
      fail(ErrKind::AllOnesRow, "clause (ii): row " + std::to_string(i) + " is all ones", {i});
  }
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = j1 + 1; j2 <= n; ++j2) {
      int r10 = 0, r01 = 0;
      for (int i = 1; i <= m && !(r10 && r01); ++i) {
        int a = g.at(i, j1), b = g.at(i, j2);
        if (a == 1 && b == 0 && !r10) r10 = i;
        if (a == 0 && b == 1 && !r01) r01 = i;
      }
      if (r10 && r01) {
        int ra = std::min(r10, r01), rb = std::max(r10, r01);
        fail(ErrKind::RectanglePattern,
             "clause (iii): rows {" + std::to_string(ra) + "," + std::to_string(rb) +
                 "} cross on columns {" + std::to_string(j1) + "," + std::to_string(j2) + "}",
             {ra, rb, j1, j2});
      }
    }
  return EWTableau(std::move(g));
}

bool is_cornersupport(const Grid01& g, int i, int j) {
  const int x = g.at(i, j);
  for (int i2 = 1; i2 <= g.rows(); ++i2) {
    if (i2 == i || g.at(i2, j) != x) continue;
    for (int j2 = 1; j2 <= g.cols(); ++j2)
      if (j2 != j && g.at(i2, j2) == 1 - x && g.at(i, j2) == x) return true;
  }
  return false;
}

bool Mask::at(int i, int j) const {
  if (i < 1 || i > m || j < 1 || j > n)
    fail(ErrKind::Index, "mask cell (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside [1," + std::to_string(m) + "]x[1," + std::to_string(n) +
                             "]",
         {i, j});
  return flags[std::size_t(i - 1) * n + (j - 1)] != 0;
}

void Mask::set(int i, int j, bool v) {
  at(i, j);
  flags[std::size_t(i - 1) * n + (j - 1)] = v ? 1 : 0;
}

static Mask blank_mask(int m, int n) {
  Mask k;
  k.m = m;
  k.n = n;
  k.flags.assign(std::size_t(m) * n, 0);
  return k;
}

Mask cornersupport_mask_bruteforce(const Grid01& g) {
  Mask k = blank_mask(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) k.set(i, j, is_cornersupport(g, i, j));
  return k;
}

Staircase sort_to_staircase(const EWTableau& t) {
  const Grid01& g = t.grid();
  const int m = g.rows(), n = g.cols();
  std::vector<int> rowc(m + 1, 0), colc(n + 1, 0);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      rowc[i] += g.at(i, j);
      colc[j] += g.at(i, j);
    }
  std::vector<int> rorder(m), corder(n);
  std::iota(rorder.begin(), rorder.end(), 1);
  std::iota(corder.begin(), corder.end(), 1);
  std::stable_sort(rorder.begin(), rorder.end(), [&](int a, int b) { return rowc[a] > rowc[b]; });
  std::stable_sort(corder.begin(), corder.end(), [&](int a, int b) { return colc[a] < colc[b]; });
  Staircase st{Grid01(m, n), Labelling{}};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) st.grid.set(i, j, g.at(rorder[i - 1], corder[j - 1]));
  for (int i = 0; i < m; ++i) st.labels.rows.push_back(rorder[i] - 1);
  for (int j = 0; j < n; ++j) st.labels.cols.push_back(m + corder[j] - 1);
  return st;
}

// In staircase form every row is 0^k 1^(n-k) and every column 1s-on-top, so
// cornersupport reduces to run-start comparisons:
//   one at (i,j):  cornersupport iff the lowest one of column j sits in a row
//                  whose run starts strictly right of row i's run;
//   zero at (i,j): cornersupport iff some row starts in (j, start(i)).
Mask cornersupport_mask(const EWTableau& t) {
  Staircase st = sort_to_staircase(t);
  const Grid01& S = st.grid;
  const int m = S.rows(), n = S.cols();
  std::vector<int> left(m + 1), bottom(n + 1, 1), prev(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    left[i] = n + 1;
    for (int j = 1; j <= n; ++j)
      if (S.at(i, j)) {
        left[i] = j;
        break;
      }
  }
  for (int j = 1; j <= n; ++j)
    for (int i = m; i >= 1; --i)
      if (S.at(i, j)) {
        bottom[j] = i;
        break;
      }
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k < i; ++k)
      if (left[k] < left[i]) prev[i] = std::max(prev[i], left[k]);
  Mask out = blank_mask(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      bool cs = S.at(i, j) ? left[bottom[j]] != left[i] : prev[i] > j;
      out.set(st.labels.rows[i - 1] + 1, st.labels.cols[j - 1] - m + 1, cs);
    }
  return out;
}

std::vector<int> eta(const EWTableau& t) {
  const Grid01& g = t.grid();
  const int m = g.rows(), n = g.cols();
  Mask k = cornersupport_mask(t);
  std::vector<int> et;
  for (int i = 2; i <= m; ++i) {
    int c = 0;
    for (int j = 1; j <= n; ++j) c += g.at(i, j) == 0 && !k.at(i, j);
    et.push_back(c);
  }
  for (int j = 1; j <= n; ++j) {
    int c = 0;
    for (int i = 1; i <= m; ++i) c += g.at(i, j) == 1 && !k.at(i, j);
    et.push_back(c);
  }
  return et;
}

MarkedEWTableau validate_marked(EWTableau t, std::vector<int> a) {
  const int want = t.rows() + t.cols() - 1;
  if (int(a.size()) != want)
    fail(ErrKind::Length, "decoration needs " + std::to_string(want) + " entries, got " +
                              std::to_string(a.size()));
  std::vector<int> et = eta(t);
  for (int k = 0; k < want; ++k)
    if (a[k] < 0 || a[k] >= et[k])
      fail(ErrKind::DecorationRange,
           "a[" + std::to_string(k + 1) + "] = " + std::to_string(a[k]) + " outside [0," +
               std::to_string(et[k] - 1) + "]",
           {k + 1});
  return MarkedEWTableau(std::move(t), std::move(a));
}

static std::vector<int> noncs_zeros(const Grid01& g, const Mask& k, int i) {
  std::vector<int> cols;
  for (int j = 1; j <= g.cols(); ++j)
    if (g.at(i, j) == 0 && !k.at(i, j)) cols.push_back(j);
  return cols;
}

static std::vector<int> noncs_ones(const Grid01& g, const Mask& k, int j) {
  std::vector<int> rows;
  for (int i = 1; i <= g.rows(); ++i)
    if (g.at(i, j) == 1 && !k.at(i, j)) rows.push_back(i);
  return rows;
}

std::vector<Cell> marks_from_decoration(const MarkedEWTableau& t) {
  const Grid01& g = t.tableau().grid();
  const int m = g.rows(), n = g.cols();
  Mask k = cornersupport_mask(t.tableau());
  const std::vector<int>& a = t.decoration();
  std::vector<Cell> out;
  for (int i = 2; i <= m; ++i) out.push_back({i, noncs_zeros(g, k, i)[a[i - 2]]});
  for (int j = 1; j <= n; ++j) out.push_back({noncs_ones(g, k, j)[a[m - 1 + j - 1]], j});
  return out;
}

std::vector<int> decoration_from_marks(const EWTableau& t, const std::vector<Cell>& marks) {
  const Grid01& g = t.grid();
  const int m = g.rows(), n = g.cols();
  Mask k = cornersupport_mask(t);
  std::vector<int> row_mark(m + 1, 0), col_mark(n + 1, 0);
  for (const Cell& c : marks) {
    if (k.at(c.i, c.j))
      fail(ErrKind::MarkPlacement,
           "mark (" + std::to_string(c.i) + "," + std::to_string(c.j) +
               ") sits on a cornersupport entry",
           {c.i, c.j});
    if (g.at(c.i, c.j) == 0) {
      if (c.i == 1)
        fail(ErrKind::MarkPlacement, "zero mark in the top row", {c.i, c.j});
      if (row_mark[c.i])
        fail(ErrKind::MarkPlacement, "row " + std::to_string(c.i) + " marked twice", {c.i});
      row_mark[c.i] = c.j;
    } else {
      if (col_mark[c.j])
        fail(ErrKind::MarkPlacement, "column " + std::to_string(c.j) + " marked twice", {c.j});
      col_mark[c.j] = c.i;
    }
  }
  for (int i = 2; i <= m; ++i)
    if (!row_mark[i]) fail(ErrKind::MarkPlacement, "row " + std::to_string(i) + " unmarked", {i});
  for (int j = 1; j <= n; ++j)
    if (!col_mark[j])
      fail(ErrKind::MarkPlacement, "column " + std::to_string(j) + " unmarked", {j});
  std::vector<int> a;
  for (int i = 2; i <= m; ++i) {
    std::vector<int> cols = noncs_zeros(g, k, i);
    a.push_back(int(std::lower_bound(cols.begin(), cols.end(), row_mark[i]) - cols.begin()));
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> rows = noncs_ones(g, k, j);
    a.push_back(int(std::lower_bound(rows.begin(), rows.end(), col_mark[j]) - rows.begin()));
  }
  return a;
}

// ---------- enumeration ----------

static void check_dims(int m, int n) {
  if (m < 1 || n < 1) fail(ErrKind::Dimension, "enumeration needs m,n >= 1");
}

static bool ew_ok(const Grid01& g) {
  const int m = g.rows(), n = g.cols();
  for (int i = 2; i <= m; ++i) {
    bool has_zero = false;
    for (int j = 1; j <= n && !has_zero; ++j) has_zero = g.at(i, j) == 0;
    if (!has_zero) return false;
  }
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = j1 + 1; j2 <= n; ++j2) {
      bool r10 = false, r01 = false;
      for (int i = 2; i <= m && !(r10 && r01); ++i) {
        int a = g.at(i, j1), b = g.at(i, j2);
        r10 = r10 || (a == 1 && b == 0);
        r01 = r01 || (a == 0 && b == 1);
      }
      if (r10 && r01) return false;
    }
  return true;
}

void enumerate_ew(int m, int n, const std::function<void(const EWTableau&)>& sink, Guard guard) {
  check_dims(m, n);
  const int bits = (m - 1) * n;
  if (bits > guard.max_cells)
    fail(ErrKind::SizeGuard, "(m-1)*n = " + std::to_string(bits) + " exceeds guard " +
                                 std::to_string(guard.max_cells));
  const std::uint64_t total = std::uint64_t(1) << bits;
  for (std::uint64_t code = 0; code < total; ++code) {
    Grid01 g(m, n);
    for (int j = 1; j <= n; ++j) g.set(1, j, 1);
    for (int p = 0; p < bits; ++p)
      if ((code >> (bits - 1 - p)) & 1) g.set(2 + p / n, 1 + p % n, 1);
    if (ew_ok(g)) sink(validate_ew(std::move(g)));
  }
}

void enumerate_mew(int m, int n, const std::function<void(const MarkedEWTableau&)>& sink,
                   Guard guard) {
  enumerate_ew(
      m, n,
      [&](const EWTableau& t) {
        std::vector<int> et = eta(t);
        std::vector<int> a(et.size(), 0);
        for (;;) {
          sink(validate_marked(t, a));
          int k = int(a.size()) - 1;
          while (k >= 0 && ++a[k] == et[k]) a[k--] = 0;
          if (k < 0) break;
        }
      },
      guard);
}

std::vector<EWTableau> all_ew(int m, int n, Guard guard) {
  std::vector<EWTableau> out;
  enumerate_ew(m, n, [&](const EWTableau& t) { out.push_back(t); }, guard);
  return out;
}

std::vector<MarkedEWTableau> all_mew(int m, int n, Guard guard) {
  std::vector<MarkedEWTableau> out;
  enumerate_mew(m, n, [&](const MarkedEWTableau& t) { out.push_back(t); }, guard);
  return out;
}

}  // namespace tabij
