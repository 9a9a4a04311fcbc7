#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabij/ew.hpp"

// "11/01" -> 2x2 grid
inline tabij::Grid01 G(const std::string& s) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : s) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  return tabij::Grid01::from_rows(rows);
}

inline std::string GS(const tabij::Grid01& g) {
  std::string s;
  for (int i = 1; i <= g.rows(); ++i) {
    if (i > 1) s += '/';
    s += g.row_string(i);
  }
  return s;
}

inline tabij::Labelling LB(std::vector<int> r, std::vector<int> c) {
  return {std::move(r), std::move(c)};
}

template <class F>
tabij::ErrKind kind_of(F&& f) {
  try {
    f();
  } catch (const tabij::Error& e) {
    return e.kind;
  }
  throw std::logic_error("expected a tabij::Error");
}

template <class F>
std::array<int, 4> at_of(F&& f) {
  try {
    f();
  } catch (const tabij::Error& e) {
    return e.at;
  }
  throw std::logic_error("expected a tabij::Error");
}

// Random valid tableau: top row of ones plus nested prefix-zero rows, columns
// shuffled. Covers the whole family (row one-sets of a valid tableau always
// form a chain).
inline tabij::Grid01 rand_ew(int m, int n, std::mt19937& rng) {
  tabij::Grid01 g(m, n);
  std::vector<int> per(n);
  for (int j = 0; j < n; ++j) per[j] = j + 1;
  std::shuffle(per.begin(), per.end(), rng);
  for (int j = 1; j <= n; ++j) g.set(1, j, 1);
  for (int i = 2; i <= m; ++i) {
    int left = std::uniform_int_distribution<int>(2, n + 1)(rng);
    for (int j = left; j <= n; ++j) g.set(i, per[j - 1], 1);
  }
  return g;
}
