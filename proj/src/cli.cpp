#include "tabij/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "tabij/bijection.hpp"
#include "tabij/verify.hpp"

namespace tabij {
namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrKind::Io, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrKind::Io, "cannot open output file '" + path + "'");
  f << content;
  if (!f) fail(ErrKind::Io, "cannot write output file '" + path + "'");
}

GridDoc parse_doc(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      return c == '{' ? parse_json(text) : parse_text(text);
  fail(ErrKind::Parse, "empty input");
}

std::string format_doc(const GridDoc& doc, const std::string& fmt) {
  if (fmt == "json") return to_json(doc);
  if (fmt == "ascii") return render_ascii(doc);
  if (fmt == "svg") return render_svg(doc);
  return to_text(doc);
}

std::string format_docs(const std::vector<GridDoc>& docs, const std::string& fmt) {
  if (fmt == "json") {
    std::string out = "[";
    for (std::size_t k = 0; k < docs.size(); ++k) {
      std::string one = to_json(docs[k]);
      one.pop_back();
      out += (k ? ",\n" : "\n") + one;
    }
    out += docs.empty() ? "]\n" : "\n]\n";
    return out;
  }
  std::string out;
  for (std::size_t k = 0; k < docs.size(); ++k) {
    if (k) out += "\n";
    out += format_doc(docs[k], fmt);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(v[k]);
  }
  return s;
}

Guard resolve_guard(int flag_value) {
  Guard guard;
  if (flag_value > 0) {
    guard.max_cells = flag_value;
    return guard;
  }
  const char* e = std::getenv("TABIJ_MAX_CELLS");
  if (e && *e) {
    std::string s(e);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(s, &used);
      if (used != s.size()) v = 0;
    } catch (const std::exception&) {
      v = 0;
    }
    if (v < 1) fail(ErrKind::Usage, "TABIJ_MAX_CELLS must be a positive integer, got '" + s + "'");
    guard.max_cells = v;
  }
  return guard;
}

std::vector<GridDoc> enumerate_family(const std::string& family, int m, int n, Guard guard) {
  std::vector<GridDoc> docs;
  if (family == "ew") {
    for (const auto& t : all_ew(m, n, guard)) docs.push_back({t.grid(), {}, {}});
  } else if (family == "mew") {
    for (const auto& t : all_mew(m, n, guard))
      docs.push_back({t.tableau().grid(), {}, t.decoration()});
  } else if (family == "para") {
    for (const auto& p : all_para(m, n, guard)) docs.push_back({p.grid(), {}, {}});
  } else if (family == "rib") {
    for (const auto& r : all_rib(m, n, guard)) docs.push_back({r.grid(), {}, {}});
  } else if (family == "lpara") {
    for (const auto& d : all_lpara(m, n, guard)) docs.push_back({d.grid(), d.labels(), {}});
  } else {
    for (const auto& d : all_lrib(m, n, guard)) docs.push_back({d.grid(), d.labels(), {}});
  }
  return docs;
}

unsigned long long count_family(const std::string& family, int m, int n, Guard guard) {
  unsigned long long c = 0;
  auto tick = [&](const auto&) { ++c; };
  if (family == "ew") enumerate_ew(m, n, tick, guard);
  else if (family == "mew") enumerate_mew(m, n, tick, guard);
  else if (family == "para") enumerate_para(m, n, tick, guard);
  else if (family == "rib") enumerate_rib(m, n, tick, guard);
  else if (family == "lpara") enumerate_lpara(m, n, tick, guard);
  else enumerate_lrib(m, n, tick, guard);
  return c;
}

GridDoc apply_op(const std::string& op, GridDoc doc) {
  const int m = doc.grid.rows(), n = doc.grid.cols();
  auto need_labels = [&]() -> Labelling {
    if (!doc.labels) fail(ErrKind::Parse, "op " + op + " needs rows:/cols: labels");
    return *doc.labels;
  };
  auto bare_labels = [&]() {
    if (doc.labels && !(*doc.labels == canonical_labelling(m, n)))
      fail(ErrKind::Label, "op " + op + " reads a tableau; labels must be canonical");
  };
  auto need_decoration = [&]() -> std::vector<int> {
    if (!doc.decoration) fail(ErrKind::Parse, "op " + op + " needs a decoration line");
    return *doc.decoration;
  };
  auto no_decoration = [&]() {
    if (doc.decoration) fail(ErrKind::Parse, "op " + op + " takes no decoration line");
  };

  if (op == "phi") {
    bare_labels();
    no_decoration();
    LabelledRibbon d = phi(validate_ew(std::move(doc.grid)));
    return {d.grid(), d.labels(), {}};
  }
  if (op == "psi") {
    no_decoration();
    Labelling l = need_labels();
    EWTableau t = psi(validate_lrib(std::move(doc.grid), std::move(l)));
    return {t.grid(), {}, {}};
  }
  if (op == "big-phi" || op == "big-phi-direct") {
    bare_labels();
    std::vector<int> a = need_decoration();
    MarkedEWTableau mt = validate_marked(validate_ew(std::move(doc.grid)), std::move(a));
    LabelledPara d = op == "big-phi" ? big_phi(mt) : big_phi_direct(mt);
    return {d.grid(), d.labels(), {}};
  }
  if (op == "big-phi-inv") {
    no_decoration();
    Labelling l = need_labels();
    MarkedEWTableau mt = big_phi_inverse(validate_lpara(std::move(doc.grid), std::move(l)));
    return {mt.tableau().grid(), {}, mt.decoration()};
  }
  if (op == "bounce") {
    if (doc.labels) fail(ErrKind::Parse, "op bounce takes a bare grid");
    no_decoration();
    RibbonPolyomino r = bounce(validate_para(std::move(doc.grid)));
    return {r.grid(), {}, {}};
  }
  if (op == "decompose") {
    no_decoration();
    Labelling l = need_labels();
    Decomposition dec = decompose(validate_lpara(std::move(doc.grid), std::move(l)));
    return {dec.ribbon.grid(), dec.ribbon.labels(), dec.surplus};
  }
  if (op == "expand") {
    Labelling l = need_labels();
    std::vector<int> z = need_decoration();
    LabelledPara d = expand(validate_lrib(std::move(doc.grid), std::move(l)), z);
    return {d.grid(), d.labels(), {}};
  }
  // sort
  bare_labels();
  no_decoration();
  Staircase st = sort_to_staircase(validate_ew(std::move(doc.grid)));
  return {st.grid, st.labels, {}};
}

std::string annotate_text(const GridDoc& doc) {
  if (doc.labels || doc.decoration) fail(ErrKind::Parse, "annotate takes a bare grid");
  EWTableau t = validate_ew(doc.grid);
  Mask mask = cornersupport_mask(t);
  std::string s = "grid: " + std::to_string(mask.m) + " " + std::to_string(mask.n) + "\n";
  for (int i = 1; i <= mask.m; ++i) {
    for (int j = 1; j <= mask.n; ++j) s += mask.at(i, j) ? 'c' : 'n';
    s += '\n';
  }
  s += "eta: " + join_ints(eta(t)) + "\n";
  return s;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"rectangular 0/1 tableaux, parallelogram polyominoes, and the maps between them"};
  app.require_subcommand(1);

  std::string family, op, format = "text", in_path, out_path;
  int m = 0, n = 0, max_cells = 0;
  bool count_only = false;

  const std::vector<std::string> formats = {"text", "json", "ascii", "svg"};
  auto* cmd_enum = app.add_subcommand("enumerate", "list one family at size m x n");
  cmd_enum->add_option("--family", family, "ew|mew|para|rib|lpara|lrib")
      ->required()
      ->check(CLI::IsMember({"ew", "mew", "para", "rib", "lpara", "lrib"}));
  cmd_enum->add_option("-m", m, "rows")->required()->check(CLI::PositiveNumber);
  cmd_enum->add_option("-n", n, "columns")->required()->check(CLI::PositiveNumber);
  cmd_enum->add_flag("--count-only", count_only, "print only the count");
  cmd_enum->add_option("--format", format, "text|json|ascii|svg")->check(CLI::IsMember(formats));
  cmd_enum->add_option("--out", out_path, "output file (default stdout)");
  cmd_enum->add_option("--max-cells", max_cells, "size guard")->check(CLI::PositiveNumber);

  auto* cmd_map = app.add_subcommand("map", "apply one map to one object");
  cmd_map->add_option("--op", op,
                      "phi|psi|big-phi|big-phi-direct|big-phi-inv|bounce|decompose|expand|sort")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "big-phi", "big-phi-direct", "big-phi-inv", "bounce",
                             "decompose", "expand", "sort"}));
  cmd_map->add_option("--in", in_path, "input file (default stdin)");
  cmd_map->add_option("--out", out_path, "output file (default stdout)");
  cmd_map->add_option("--format", format, "text|json|ascii|svg")->check(CLI::IsMember(formats));

  auto* cmd_ann = app.add_subcommand("annotate", "cornersupport mask and eta of a tableau");
  cmd_ann->add_option("--in", in_path, "input file (default stdin)");
  cmd_ann->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_ver = app.add_subcommand("verify", "exhaustive cross-checks at one size");
  cmd_ver->add_option("-m", m, "rows")->required()->check(CLI::PositiveNumber);
  cmd_ver->add_option("-n", n, "columns")->required()->check(CLI::PositiveNumber);
  cmd_ver->add_option("--out", out_path, "output file (default stdout)");
  cmd_ver->add_option("--max-cells", max_cells, "size guard")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("tabij");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "UsageError: " << e.what() << "\n";
      return 2;
    }

    if (*cmd_enum) {
      Guard guard = resolve_guard(max_cells);
      if (count_only) {
        write_output(out_path, std::to_string(count_family(family, m, n, guard)) + "\n", out);
      } else {
        write_output(out_path, format_docs(enumerate_family(family, m, n, guard), format), out);
      }
      return 0;
    }
    if (*cmd_map) {
      GridDoc res = apply_op(op, parse_doc(read_input(in_path, in)));
      write_output(out_path, format_doc(res, format), out);
      return 0;
    }
    if (*cmd_ann) {
      write_output(out_path, annotate_text(parse_doc(read_input(in_path, in))), out);
      return 0;
    }
    // verify
    Guard guard = resolve_guard(max_cells);
    std::ostringstream report;
    bool goldens_ok = verify_goldens(report);
    bool size_ok = verify_size(m, n, guard, report);
    bool ok = goldens_ok && size_ok;
    report << (ok ? "verify: PASS\n" : "verify: FAIL\n");
    write_output(out_path, report.str(), out);
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return (e.kind == ErrKind::Io || e.kind == ErrKind::Usage) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "Error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tabij
