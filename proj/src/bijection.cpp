#include "tabij/bijection.hpp"

#include <algorithm>
#include <numeric>

namespace tabij {

LabelledRibbon phi(const EWTableau& t) {
  Staircase st = sort_to_staircase(t);
  const Grid01& S = st.grid;
  const int m = S.rows(), n = S.cols();
  Grid01 R(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (S.at(i, j) == 1 && (i == m || S.at(i + 1, j) == 0)) R.set(i, j, 1);
      if (S.at(i, j) == 0 && (j == n || S.at(i, j + 1) == 1)) R.set(i, j, 1);
    }
  return validate_lrib(std::move(R), std::move(st.labels));
}

EWTableau psi(const LabelledRibbon& d) {
  const Grid01& R = d.grid();
  const int m = R.rows(), n = R.cols();
  Grid01 S(m, n);
  for (int i = 1; i <= m; ++i) {
    bool seen = false;
    for (int j = 1; j <= n; ++j) {
      S.set(i, j, (i == 1 && j == 1) || seen);
      seen = seen || R.at(i, j);
    }
  }
  Grid01 T(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      T.set(d.labels().rows[i - 1] + 1, d.labels().cols[j - 1] - m + 1, S.at(i, j));
  return validate_ew(std::move(T));
}

LabelledPara big_phi(const MarkedEWTableau& t) {
  std::vector<int> et = eta(t.tableau());
  std::vector<int> z(et.size());
  for (std::size_t k = 0; k < et.size(); ++k) z[k] = et[k] - t.decoration()[k] - 1;
  return expand(phi(t.tableau()), z);
}

LabelledPara big_phi_direct(const MarkedEWTableau& t) {
  const Grid01& g = t.tableau().grid();
  const int m = g.rows(), n = g.cols();
  Mask k = cornersupport_mask(t.tableau());
  const std::vector<int>& a = t.decoration();
  // h: run start of each labelled line = cornersupport count + mark index + 1
  std::vector<int> h(std::size_t(m + n - 1));
  for (int i = 2; i <= m; ++i) {
    int cs0 = 0;
    for (int j = 1; j <= n; ++j) cs0 += g.at(i, j) == 0 && k.at(i, j);
    h[i - 2] = cs0 + a[i - 2] + 1;
  }
  for (int j = 1; j <= n; ++j) {
    int cs1 = 0;
    for (int i = 1; i <= m; ++i) cs1 += g.at(i, j) == 1 && k.at(i, j);
    h[m - 2 + j] = cs1 + a[m - 2 + j] + 1;
  }
  std::vector<int> pi(m - 1), sigma(n);
  std::iota(pi.begin(), pi.end(), 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::stable_sort(pi.begin(), pi.end(), [&](int x, int y) { return h[x - 1] < h[y - 1]; });
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](int x, int y) { return h[m - 2 + x] < h[m - 2 + y]; });
  Labelling l;
  l.rows.push_back(0);
  for (int p : pi) l.rows.push_back(p);
  for (int s : sigma) l.cols.push_back(m - 1 + s);
  std::vector<int> L{1}, U;
  for (int p : pi) L.push_back(h[p - 1]);
  for (int s : sigma) U.push_back(h[m - 2 + s]);
  Grid01 out(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (U[j - 1] <= i && L[i - 1] <= j) out.set(i, j, 1);
  return validate_lpara(std::move(out), std::move(l));
}

MarkedEWTableau big_phi_inverse(const LabelledPara& d) {
  Decomposition dec = decompose(d);
  EWTableau t = psi(dec.ribbon);
  std::vector<int> et = eta(t);
  std::vector<int> a(et.size());
  for (std::size_t k = 0; k < et.size(); ++k) {
    a[k] = et[k] - dec.surplus[k] - 1;
    if (a[k] < 0 || a[k] >= et[k])
      fail(ErrKind::Consistency, "surplus " + std::to_string(dec.surplus[k]) + " for label " +
                                     std::to_string(k + 1) + " has no mark index");
  }
  return validate_marked(std::move(t), std::move(a));
}

}  // namespace tabij
