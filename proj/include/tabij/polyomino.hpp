#pragma once

#include "tabij/ew.hpp"

namespace tabij {

int row_leftmost(const Grid01& g, int i);  // 0 when the row has no ones
int row_rightmost(const Grid01& g, int i);
int col_topmost(const Grid01& g, int j);
int col_bottommost(const Grid01& g, int j);

// Validated: (1,1) and (m,n) filled, every row a single contiguous run, both run
// ends weakly increase downwards, and consecutive runs share at least one column.
class ParaPolyomino {
 public:
  const Grid01& grid() const { return g_; }
  int rows() const { return g_.rows(); }
  int cols() const { return g_.cols(); }
  friend bool operator==(const ParaPolyomino&, const ParaPolyomino&) = default;

 private:
  friend ParaPolyomino validate_para(Grid01 g);
  explicit ParaPolyomino(Grid01 g) : g_(std::move(g)) {}
  Grid01 g_;
};

ParaPolyomino validate_para(Grid01 g);

// Parallelogram polyomino with exactly m+n-1 cells: a single staircase strip.
class RibbonPolyomino {
 public:
  const ParaPolyomino& para() const { return p_; }
  const Grid01& grid() const { return p_.grid(); }
  int rows() const { return p_.rows(); }
  int cols() const { return p_.cols(); }
  friend bool operator==(const RibbonPolyomino&, const RibbonPolyomino&) = default;

 private:
  friend RibbonPolyomino validate_ribbon(Grid01 g);
  explicit RibbonPolyomino(ParaPolyomino p) : p_(std::move(p)) {}
  ParaPolyomino p_;
};

RibbonPolyomino validate_ribbon(Grid01 g);

// Trace from (1,1): right to the rightmost one of the row, down to the lowest one
// of the column, alternating until (m,n). Visited cells form the bounce ribbon.
RibbonPolyomino bounce(const ParaPolyomino& p);

// Label conventions: top row carries 0; rows whose runs start in the same column
// carry increasing labels downwards; columns whose runs start in the same row
// carry increasing labels rightwards.
class LabelledPara {
 public:
  const ParaPolyomino& poly() const { return p_; }
  const Grid01& grid() const { return p_.grid(); }
  const Labelling& labels() const { return l_; }
  friend bool operator==(const LabelledPara&, const LabelledPara&) = default;

 private:
  friend LabelledPara validate_lpara(Grid01 g, Labelling l);
  LabelledPara(ParaPolyomino p, Labelling l) : p_(std::move(p)), l_(std::move(l)) {}
  ParaPolyomino p_;
  Labelling l_;
};

LabelledPara validate_lpara(Grid01 g, Labelling l);

class LabelledRibbon {
 public:
  const RibbonPolyomino& ribbon() const { return r_; }
  const Grid01& grid() const { return r_.grid(); }
  const Labelling& labels() const { return l_; }
  friend bool operator==(const LabelledRibbon&, const LabelledRibbon&) = default;

 private:
  friend LabelledRibbon validate_lrib(Grid01 g, Labelling l);
  LabelledRibbon(RibbonPolyomino r, Labelling l) : r_(std::move(r)), l_(std::move(l)) {}
  RibbonPolyomino r_;
  Labelling l_;
};

LabelledRibbon validate_lrib(Grid01 g, Labelling l);

// surplus[k-1] for label v_k: how far the run start of v_k's line moved between
// the polyomino and its bounce ribbon (row lines: leftmost, column lines: topmost).
struct Decomposition {
  LabelledRibbon ribbon;
  std::vector<int> surplus;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const LabelledPara& d);

// Inverse direction: grow each line of `d` by its surplus. SupportError when the
// vector pushes a run off the grid, empties a row, breaks the polyomino shape, or
// changes the bounce ribbon.
LabelledPara expand(const LabelledRibbon& d, const std::vector<int>& zeta);

// Emission order: ascending lexicographic over concatenated rows, then row label
// vector, then column label vector.
void enumerate_para(int m, int n, const std::function<void(const ParaPolyomino&)>& sink,
                    Guard guard = {});
void enumerate_rib(int m, int n, const std::function<void(const RibbonPolyomino&)>& sink,
                   Guard guard = {});
void enumerate_lpara(int m, int n, const std::function<void(const LabelledPara&)>& sink,
                     Guard guard = {});
void enumerate_lrib(int m, int n, const std::function<void(const LabelledRibbon&)>& sink,
                    Guard guard = {});
std::vector<ParaPolyomino> all_para(int m, int n, Guard guard = {});
std::vector<RibbonPolyomino> all_rib(int m, int n, Guard guard = {});
std::vector<LabelledPara> all_lpara(int m, int n, Guard guard = {});
std::vector<LabelledRibbon> all_lrib(int m, int n, Guard guard = {});

}  // namespace tabij
