#pragma once

#include <functional>

#include "tabij/grid.hpp"

namespace tabij {

// Validated tableau: all-ones top row, a zero in every lower row, and no two
// rows/columns meeting in a 2x2 crossing pattern (10/01 or 01/10).
class EWTableau {
 public:
  const Grid01& grid() const { return g_; }
  int rows() const { return g_.rows(); }
  int cols() const { return g_.cols(); }
  friend bool operator==(const EWTableau&, const EWTableau&) = default;

 private:
  friend EWTableau validate_ew(Grid01 g);
  explicit EWTableau(Grid01 g) : g_(std::move(g)) {}
  Grid01 g_;
};

EWTableau validate_ew(Grid01 g);

// Entry x at (i,j) is cornersupport when some non-attacking (i',j') holds 1-x
// while (i',j) and (i,j') both hold x.
bool is_cornersupport(const Grid01& g, int i, int j);

struct Mask {  // per-cell cornersupport flags, same shape as its source grid
  int m = 0, n = 0;
  std::vector<std::uint8_t> flags;
  bool at(int i, int j) const;
  void set(int i, int j, bool v);
  friend bool operator==(const Mask&, const Mask&) = default;
};

Mask cornersupport_mask_bruteforce(const Grid01& g);  // definition scan per cell
Mask cornersupport_mask(const EWTableau& t);          // staircase classification

// eta[k-1] for k in [1, m+n-1]: rows v_1..v_{m-1} count their non-cornersupport
// zeros, columns v_m..v_{m+n-1} their non-cornersupport ones.
std::vector<int> eta(const EWTableau& t);

struct Staircase {
  Grid01 grid;       // zeros form a prefix of every row, ones a prefix of every column
  Labelling labels;  // labels[pos] = original line now sitting at this position
};
Staircase sort_to_staircase(const EWTableau& t);

// Tableau plus decoration a with 0 <= a[k-1] <= eta[k]-1. Entry a[k-1] selects the
// (a[k-1]+1)-th non-cornersupport zero (row lines) / one (column lines) as the mark.
class MarkedEWTableau {
 public:
  const EWTableau& tableau() const { return t_; }
  const std::vector<int>& decoration() const { return a_; }
  friend bool operator==(const MarkedEWTableau&, const MarkedEWTableau&) = default;

 private:
  friend MarkedEWTableau validate_marked(EWTableau t, std::vector<int> a);
  MarkedEWTableau(EWTableau t, std::vector<int> a) : t_(std::move(t)), a_(std::move(a)) {}
  EWTableau t_;
  std::vector<int> a_;
};

MarkedEWTableau validate_marked(EWTableau t, std::vector<int> a);

struct Cell {
  int i = 0, j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Marked cells in line order: rows v_1..v_{m-1}, then columns v_m..v_{m+n-1}.
std::vector<Cell> marks_from_decoration(const MarkedEWTableau& t);
std::vector<int> decoration_from_marks(const EWTableau& t, const std::vector<Cell>& marks);

struct Guard {  // enumeration size limits; one knob scales both families
  int max_cells = 24;  // tableaux: (m-1)*n <= max_cells
  int poly_limit() const { return max_cells / 2; }  // polyominoes: m+n <= poly_limit()
};

// Emission order: ascending lexicographic over the concatenated row bitstrings;
// decorations ascending lexicographic with the leftmost entry most significant.
void enumerate_ew(int m, int n, const std::function<void(const EWTableau&)>& sink,
                  Guard guard = {});
void enumerate_mew(int m, int n, const std::function<void(const MarkedEWTableau&)>& sink,
                   Guard guard = {});
std::vector<EWTableau> all_ew(int m, int n, Guard guard = {});
std::vector<MarkedEWTableau> all_mew(int m, int n, Guard guard = {});

}  // namespace tabij
