#include "tabij/grid.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tabij {

const char* err_name(ErrKind k) {
  switch (k) {
    case ErrKind::Parse: return "ParseError";
    case ErrKind::Io: return "IoError";
    case ErrKind::Usage: return "UsageError";
    case ErrKind::Dimension: return "DimensionError";
    case ErrKind::Index: return "IndexError";
    case ErrKind::Label: return "LabelError";
    case ErrKind::TopRow: return "TopRowError";
    case ErrKind::AllOnesRow: return "AllOnesRowError";
    case ErrKind::RectanglePattern: return "RectanglePatternError";
    case ErrKind::Length: return "LengthError";
    case ErrKind::DecorationRange: return "DecorationRangeError";
    case ErrKind::MarkPlacement: return "MarkPlacementError";
    case ErrKind::Corner: return "CornerError";
    case ErrKind::RowGap: return "RowGapError";
    case ErrKind::Monotonicity: return "MonotonicityError";
    case ErrKind::Overlap: return "OverlapError";
    case ErrKind::Area: return "AreaError";
    case ErrKind::LabelConvention: return "LabelConventionError";
    case ErrKind::SizeGuard: return "SizeGuardError";
    case ErrKind::Support: return "SupportError";
    case ErrKind::Consistency: return "ConsistencyError";
  }
  return "Error";
}

Error::Error(ErrKind k, const std::string& msg, std::array<int, 4> at)
    : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k), at(at) {}

void fail(ErrKind k, const std::string& msg, std::array<int, 4> at) {
  throw Error(k, msg, at);
}

Grid01::Grid01(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1)
    fail(ErrKind::Dimension, "grid needs m,n >= 1, got " + std::to_string(m) + "x" +
                                 std::to_string(n));
  bits_.assign(std::size_t(m) * n, 0);
}

Grid01 Grid01::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) fail(ErrKind::Dimension, "grid needs at least one row");
  Grid01 g(int(rows.size()), int(rows[0].size()));
  for (int i = 1; i <= g.m_; ++i) {
    const std::string& r = rows[i - 1];
    if (int(r.size()) != g.n_)
      fail(ErrKind::Parse, "row " + std::to_string(i) + " has width " +
                               std::to_string(r.size()) + ", expected " + std::to_string(g.n_),
           {i});
    for (int j = 1; j <= g.n_; ++j) {
      char c = r[j - 1];
      if (c != '0' && c != '1')
        fail(ErrKind::Parse, std::string("bad grid character '") + c + "'", {i, j});
      g.bits_[g.idx(i, j)] = std::uint8_t(c - '0');
    }
  }
  return g;
}

void Grid01::bounds(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    fail(ErrKind::Index, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside [1," + std::to_string(m_) + "]x[1," +
                             std::to_string(n_) + "]",
         {i, j});
}

int Grid01::at(int i, int j) const {
  bounds(i, j);
  return bits_[idx(i, j)];
}

void Grid01::set(int i, int j, int v) {
  bounds(i, j);
  bits_[idx(i, j)] = std::uint8_t(v != 0);
}

std::string Grid01::row_string(int i) const {
  bounds(i, 1);
  std::string s(std::size_t(n_), '0');
  for (int j = 1; j <= n_; ++j) s[j - 1] = char('0' + bits_[idx(i, j)]);
  return s;
}

Labelling canonical_labelling(int m, int n) {
  Labelling l;
  for (int i = 0; i < m; ++i) l.rows.push_back(i);
  for (int j = 0; j < n; ++j) l.cols.push_back(m + j);
  return l;
}

static void check_perm(const std::vector<int>& v, int lo, int hi, const char* what) {
  if (int(v.size()) != hi - lo + 1)
    fail(ErrKind::Label, std::string(what) + " labels: expected " + std::to_string(hi - lo + 1) +
                             " entries, got " + std::to_string(v.size()));
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  for (int k = 0; k < int(s.size()); ++k)
    if (s[k] != lo + k)
      fail(ErrKind::Label, std::string(what) + " labels are not a permutation of [" +
                               std::to_string(lo) + "," + std::to_string(hi) + "]");
}

void check_labelling(int m, int n, const Labelling& l) {
  check_perm(l.rows, 0, m - 1, "row");
  check_perm(l.cols, m, m + n - 1, "column");
}

// ---------- text format ----------

static std::vector<int> parse_ints(const std::string& s, const std::string& where) {
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrKind::Parse, "bad integer '" + tok + "' in " + where);
    }
  }
  return out;
}

static bool take_prefix(const std::string& line, const char* key, std::string& rest) {
  std::string k(key);
  if (line.rfind(k, 0) != 0) return false;
  rest = line.substr(k.size());
  return true;
}

GridDoc parse_text(const std::string& text) {
  for (unsigned char c : text)
    if (c != '\n' && (c < 0x20 || c > 0x7e))
      fail(ErrKind::Parse, "input must be ASCII with LF line endings");
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  std::size_t k = 0;
  std::string rest;
  if (k >= lines.size() || !take_prefix(lines[k], "grid:", rest))
    fail(ErrKind::Parse, "expected 'grid: <m> <n>' header");
  std::vector<int> hdr = parse_ints(rest, "grid header");
  if (hdr.size() != 2) fail(ErrKind::Parse, "grid header needs exactly two integers");
  int m = hdr[0], n = hdr[1];
  if (m < 1 || n < 1) fail(ErrKind::Dimension, "grid header needs m,n >= 1");
  ++k;
  if (lines.size() - k < std::size_t(m))
    fail(ErrKind::Parse, "expected " + std::to_string(m) + " grid rows");
  std::vector<std::string> rows(lines.begin() + k, lines.begin() + k + m);
  GridDoc doc;
  doc.grid = Grid01::from_rows(rows);
  if (doc.grid.cols() != n)
    fail(ErrKind::Parse, "grid rows have width " + std::to_string(doc.grid.cols()) +
                             ", header says " + std::to_string(n));
  k += m;
  std::optional<std::vector<int>> rlab, clab;
  if (k < lines.size() && take_prefix(lines[k], "rows:", rest)) {
    rlab = parse_ints(rest, "rows line");
    if (int(rlab->size()) != m) fail(ErrKind::Parse, "rows line needs m entries");
    ++k;
  }
  if (k < lines.size() && take_prefix(lines[k], "cols:", rest)) {
    clab = parse_ints(rest, "cols line");
    if (int(clab->size()) != n) fail(ErrKind::Parse, "cols line needs n entries");
    ++k;
  }
  if (rlab.has_value() != clab.has_value())
    fail(ErrKind::Parse, "rows:/cols: lines must appear together");
  if (rlab) doc.labels = Labelling{*rlab, *clab};
  if (k < lines.size() && take_prefix(lines[k], "decoration:", rest)) {
    auto dec = parse_ints(rest, "decoration line");
    if (int(dec.size()) != m + n - 1) fail(ErrKind::Parse, "decoration line needs m+n-1 entries");
    doc.decoration = dec;
    ++k;
  }
  for (; k < lines.size(); ++k)
    if (!lines[k].empty()) fail(ErrKind::Parse, "unexpected line '" + lines[k] + "'");
  return doc;
}

static std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(v[k]);
  }
  return s;
}

std::string to_text(const GridDoc& doc) {
  std::string out = "grid: " + std::to_string(doc.grid.rows()) + " " +
                    std::to_string(doc.grid.cols()) + "\n";
  for (int i = 1; i <= doc.grid.rows(); ++i) out += doc.grid.row_string(i) + "\n";
  if (doc.labels) {
    out += "rows: " + join_ints(doc.labels->rows) + "\n";
    out += "cols: " + join_ints(doc.labels->cols) + "\n";
  }
  if (doc.decoration) out += "decoration: " + join_ints(*doc.decoration) + "\n";
  return out;
}

// ---------- json format ----------

using njson = nlohmann::json;

static std::vector<int> int_array(const njson& j, const char* key) {
  if (!j.is_array()) fail(ErrKind::Parse, std::string(key) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(ErrKind::Parse, std::string(key) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

GridDoc parse_json(const std::string& text) {
  njson j = njson::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrKind::Parse, "invalid JSON");
  if (!j.is_object()) fail(ErrKind::Parse, "top level must be a JSON object");
  static const char* known[] = {"m", "n", "grid", "row_labels", "col_labels", "decoration"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) fail(ErrKind::Parse, "unknown key '" + it.key() + "'");
  }
  for (const char* k : {"m", "n", "grid"})
    if (!j.contains(k)) fail(ErrKind::Parse, std::string("missing key '") + k + "'");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    fail(ErrKind::Parse, "m and n must be integers");
  int m = j["m"].get<int>(), n = j["n"].get<int>();
  if (m < 1 || n < 1) fail(ErrKind::Dimension, "m and n must be >= 1");
  if (!j["grid"].is_array() || int(j["grid"].size()) != m)
    fail(ErrKind::Parse, "grid must be an array of m row strings");
  std::vector<std::string> rows;
  for (const auto& r : j["grid"]) {
    if (!r.is_string()) fail(ErrKind::Parse, "grid rows must be strings");
    rows.push_back(r.get<std::string>());
  }
  GridDoc doc;
  doc.grid = Grid01::from_rows(rows);
  if (doc.grid.cols() != n) fail(ErrKind::Parse, "grid rows disagree with n");
  bool has_r = j.contains("row_labels"), has_c = j.contains("col_labels");
  if (has_r != has_c) fail(ErrKind::Parse, "row_labels/col_labels must appear together");
  if (has_r) {
    Labelling l{int_array(j["row_labels"], "row_labels"), int_array(j["col_labels"], "col_labels")};
    if (int(l.rows.size()) != m) fail(ErrKind::Parse, "row_labels needs m entries");
    if (int(l.cols.size()) != n) fail(ErrKind::Parse, "col_labels needs n entries");
    doc.labels = std::move(l);
  }
  if (j.contains("decoration")) {
    auto dec = int_array(j["decoration"], "decoration");
    if (int(dec.size()) != m + n - 1) fail(ErrKind::Parse, "decoration needs m+n-1 entries");
    doc.decoration = std::move(dec);
  }
  return doc;
}

std::string to_json(const GridDoc& doc) {
  nlohmann::ordered_json j;
  j["m"] = doc.grid.rows();
  j["n"] = doc.grid.cols();
  std::vector<std::string> rows;
  for (int i = 1; i <= doc.grid.rows(); ++i) rows.push_back(doc.grid.row_string(i));
  j["grid"] = rows;
  if (doc.labels) {
    j["row_labels"] = doc.labels->rows;
    j["col_labels"] = doc.labels->cols;
  }
  if (doc.decoration) j["decoration"] = *doc.decoration;
  return j.dump() + "\n";
}

// ---------- rendering ----------

static std::string rjust(const std::string& s, int w) {
  return std::string(std::size_t(std::max(0, w - int(s.size()))), ' ') + s;
}

std::string render_ascii(const GridDoc& doc) {
  const Grid01& g = doc.grid;
  if (!doc.labels) {
    std::string out;
    for (int i = 1; i <= g.rows(); ++i) {
      for (int j = 1; j <= g.cols(); ++j) out += g.at(i, j) ? '#' : '.';
      out += '\n';
    }
    return out;
  }
  check_labelling(g.rows(), g.cols(), *doc.labels);
  int wl = 1, wc = 1;
  for (int r : doc.labels->rows) wl = std::max(wl, int(std::to_string(r).size()));
  for (int c : doc.labels->cols) wc = std::max(wc, int(std::to_string(c).size()));
  std::string out(std::size_t(wl), ' ');
  for (int j = 1; j <= g.cols(); ++j)
    out += " " + rjust(std::to_string(doc.labels->cols[j - 1]), wc);
  out += '\n';
  for (int i = 1; i <= g.rows(); ++i) {
    out += rjust(std::to_string(doc.labels->rows[i - 1]), wl);
    for (int j = 1; j <= g.cols(); ++j)
      out += " " + rjust(g.at(i, j) ? "#" : ".", wc);
    out += '\n';
  }
  return out;
}

std::string render_svg(const GridDoc& doc) {
  const Grid01& g = doc.grid;
  if (doc.labels) check_labelling(g.rows(), g.cols(), *doc.labels);
  const int C = 24, pad = 4;
  const int ml = doc.labels ? 30 : pad, mt = doc.labels ? 22 : pad;
  const int W = ml + g.cols() * C + pad, H = mt + g.rows() * C + pad;
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      if (g.at(i, j))
        s << "<rect x=\"" << ml + (j - 1) * C << "\" y=\"" << mt + (i - 1) * C
          << "\" width=\"" << C << "\" height=\"" << C << "\" fill=\"#c9c9c9\"/>\n";
  s << "<path d=\"";
  for (int i = 0; i <= g.rows(); ++i) s << "M" << ml << " " << mt + i * C << "h" << g.cols() * C;
  for (int j = 0; j <= g.cols(); ++j) s << "M" << ml + j * C << " " << mt << "v" << g.rows() * C;
  s << "\" stroke=\"#333\" fill=\"none\"/>\n";
  if (doc.labels) {
    for (int j = 1; j <= g.cols(); ++j)
      s << "<text x=\"" << ml + (j - 1) * C + C / 2 << "\" y=\"" << mt - 7
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << doc.labels->cols[j - 1] << "</text>\n";
    for (int i = 1; i <= g.rows(); ++i)
      s << "<text x=\"" << ml - 6 << "\" y=\"" << mt + (i - 1) * C + C / 2 + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << doc.labels->rows[i - 1] << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tabij
