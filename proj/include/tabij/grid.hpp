#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tabij {

enum class ErrKind {
  Parse,
  Io,
  Usage,
  Dimension,
  Index,
  Label,
  TopRow,
  AllOnesRow,
  RectanglePattern,
  Length,
  DecorationRange,
  MarkPlacement,
  Corner,
  RowGap,
  Monotonicity,
  Overlap,
  Area,
  LabelConvention,
  SizeGuard,
  Support,
  Consistency,
};

const char* err_name(ErrKind k);

// Domain/usage failure. `at` carries up to four 1-based witness coordinates;
// their meaning depends on the kind (RectanglePattern: {row,row,col,col},
// AllOnesRow: {row}, Monotonicity/Overlap: {row,row}, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrKind k, const std::string& msg, std::array<int, 4> at = {});
  ErrKind kind;
  std::array<int, 4> at;
};

[[noreturn]] void fail(ErrKind k, const std::string& msg, std::array<int, 4> at = {});

// Dense 0/1 grid, 1-based: (i,j) = row i from the top, column j from the left.
class Grid01 {
 public:
  Grid01() = default;
  Grid01(int m, int n);  // zero-filled; DimensionError unless m,n >= 1
  static Grid01 from_rows(const std::vector<std::string>& rows);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int at(int i, int j) const;  // IndexError outside [1,m] x [1,n]
  void set(int i, int j, int v);
  std::string row_string(int i) const;

  friend bool operator==(const Grid01&, const Grid01&) = default;

 private:
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * n_ + (j - 1); }
  void bounds(int i, int j) const;
  int m_ = 0, n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Labels by position: rows[i-1] = r means row i carries label r. Row labels use
// {0..m-1} (canonical order top to bottom), column labels {m..m+n-1} (left to right).
struct Labelling {
  std::vector<int> rows, cols;
  friend bool operator==(const Labelling&, const Labelling&) = default;
};

Labelling canonical_labelling(int m, int n);
void check_labelling(int m, int n, const Labelling& l);  // LabelError

// One parsed/serializable document: grid plus optional labels and integer vector.
struct GridDoc {
  Grid01 grid;
  std::optional<Labelling> labels;
  std::optional<std::vector<int>> decoration;
  friend bool operator==(const GridDoc&, const GridDoc&) = default;
};

GridDoc parse_text(const std::string& text);
std::string to_text(const GridDoc& doc);  // LF, newline-terminated
GridDoc parse_json(const std::string& text);  // unknown keys rejected
std::string to_json(const GridDoc& doc);

std::string render_ascii(const GridDoc& doc);  // '#' = 1, '.' = 0, label gutters
std::string render_svg(const GridDoc& doc);    // one filled <rect> per 1-cell

}  // namespace tabij
