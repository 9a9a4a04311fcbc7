#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tabij/cli.hpp"
#include "tabij/grid.hpp"

struct Run {
  int code;
  std::string out, err;
};

static Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = tabij::cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

static int count_sub(const std::string& s, const std::string& sub) {
  int c = 0;
  for (std::size_t p = s.find(sub); p != std::string::npos; p = s.find(sub, p + 1)) ++c;
  return c;
}

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "--family", "ew", "-m", "3", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(count_sub(r.out, "grid: 3 2\n") == 7);
  CHECK(r.out.substr(0, 18) == "grid: 3 2\n11\n00\n00");

  r = run({"enumerate", "--family", "rib", "-m", "3", "-n", "2", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run({"enumerate", "--family", "mew", "-m", "2", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(count_sub(r.out, "decoration: ") == 4);

  r = run({"enumerate", "--family", "lrib", "-m", "2", "-n", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.front() == '[');
  CHECK(count_sub(r.out, "\"row_labels\"") == 3);

  r = run({"enumerate", "--family", "para", "-m", "2", "-n", "2", "--format", "ascii"});
  CHECK(r.code == 0);
  CHECK(count_sub(r.out, "#") == 3 + 3 + 4);

  r = run({"enumerate", "--family", "rib", "-m", "2", "-n", "2", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(count_sub(r.out, "<svg ") == 2);
}

TEST_CASE("map operations") {
  const std::string t = "grid: 3 2\n11\n00\n01\n";
  Run r = run({"map", "--op", "phi"}, t);
  CHECK(r.code == 0);
  CHECK(r.out == "grid: 3 2\n10\n11\n01\nrows: 0 2 1\ncols: 3 4\n");

  Run back = run({"map", "--op", "psi"}, r.out);
  CHECK(back.code == 0);
  CHECK(back.out == t);

  r = run({"map", "--op", "sort"}, "grid: 4 4\n1111\n0010\n0011\n0010\n");
  CHECK(r.code == 0);
  CHECK(r.out == "grid: 4 4\n1111\n0011\n0001\n0001\nrows: 0 2 1 3\ncols: 4 5 7 6\n");

  const std::string marked = "grid: 3 2\n11\n00\n00\ndecoration: 0 1 0 0\n";
  Run viaz = run({"map", "--op", "big-phi"}, marked);
  Run direct = run({"map", "--op", "big-phi-direct"}, marked);
  CHECK(viaz.code == 0);
  CHECK(viaz.out == direct.out);
  Run inv = run({"map", "--op", "big-phi-inv"}, viaz.out);
  CHECK(inv.code == 0);
  CHECK(inv.out == marked);

  r = run({"map", "--op", "bounce"}, "grid: 2 2\n11\n11\n");
  CHECK(r.code == 0);
  CHECK(r.out == "grid: 2 2\n11\n01\n");

  const std::string lp = "grid: 2 2\n11\n11\nrows: 0 1\ncols: 2 3\n";
  Run dec = run({"map", "--op", "decompose"}, lp);
  CHECK(dec.code == 0);
  CHECK(dec.out == "grid: 2 2\n11\n01\nrows: 0 1\ncols: 2 3\ndecoration: 1 0 0\n");
  Run exp = run({"map", "--op", "expand"}, dec.out);
  CHECK(exp.code == 0);
  CHECK(exp.out == lp);

  // JSON input is detected from the payload
  r = run({"map", "--op", "phi"}, "{\"m\":3,\"n\":2,\"grid\":[\"11\",\"00\",\"01\"]}");
  CHECK(r.code == 0);
  CHECK(r.out == "grid: 3 2\n10\n11\n01\nrows: 0 2 1\ncols: 3 4\n");
}

TEST_CASE("annotate") {
  Run r = run({"annotate"}, "grid: 4 4\n1111\n0010\n0011\n0010\n");
  CHECK(r.code == 0);
  CHECK(r.out == "grid: 4 4\nnncc\nccnn\nnncn\nccnn\neta: 1 2 1 1 1 2 1\n");
  r = run({"annotate"}, "grid: 2 2\n11\n01\nrows: 0 1\ncols: 2 3\n");
  CHECK(r.code == 1);
}

TEST_CASE("verify") {
  Run r = run({"verify", "-m", "2", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size 2x2: ew=3 mew=4 para=3 rib=2 lrib=3 lpara=4") != std::string::npos);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
  CHECK(count_sub(r.out, "FAIL") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);  // missing required flags
  CHECK(run({"enumerate", "--family", "nope", "-m", "2", "-n", "2"}).code == 2);
  CHECK(run({"enumerate", "--family", "ew", "-m", "2", "-n", "2", "--weird"}).code == 2);
  CHECK(run({"map", "--op", "warp"}, "").code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"map", "--help"}).code == 0);
  CHECK(run({"enumerate", "--family", "ew", "-m", "0", "-n", "2"}).code == 2);

  Run r = run({"map", "--op", "phi", "--in", "/no/such/file"});
  CHECK(r.code == 2);
  CHECK(r.err.find("IoError") != std::string::npos);
  CHECK(run({"map", "--op", "phi", "--out", "/no/such/dir/x"}, "grid: 1 1\n1\n").code == 2);

  r = run({"map", "--op", "phi"}, "grid: 2 2\n11\n11\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("AllOnesRowError") != std::string::npos);
  CHECK(run({"map", "--op", "phi"}, "grid: 2 2\n11\nxy\n").code == 1);
  CHECK(run({"map", "--op", "phi"}, "").code == 1);
  CHECK(run({"map", "--op", "psi"}, "grid: 2 2\n11\n01\n").code == 1);  // labels required
  CHECK(run({"map", "--op", "phi"}, "grid: 2 2\n11\n01\nrows: 1 0\ncols: 2 3\n").code == 1);
  CHECK(run({"map", "--op", "bounce"}, "grid: 2 2\n10\n01\n").code == 1);
  CHECK(run({"verify", "-m", "9", "-n", "9"}).code == 1);  // size guard
}

TEST_CASE("file round trip and guard overrides") {
  const std::string path = "/tmp/tabij_test_io.txt";
  Run r = run({"enumerate", "--family", "ew", "-m", "2", "-n", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(count_sub(buf.str(), "grid: 2 2\n") == 3);
  std::remove(path.c_str());

  CHECK(run({"enumerate", "--family", "ew", "-m", "6", "-n", "5", "--count-only"}).code == 1);
  r = run({"enumerate", "--family", "ew", "-m", "5", "-n", "4", "--count-only", "--max-cells",
           "16"});
  CHECK(r.code == 0);

  setenv("TABIJ_MAX_CELLS", "banana", 1);
  r = run({"enumerate", "--family", "ew", "-m", "2", "-n", "2", "--count-only"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UsageError") != std::string::npos);

  setenv("TABIJ_MAX_CELLS", "4", 1);
  CHECK(run({"enumerate", "--family", "ew", "-m", "3", "-n", "3", "--count-only"}).code == 1);
  CHECK(run({"enumerate", "--family", "ew", "-m", "3", "-n", "3", "--count-only", "--max-cells",
             "24"})
            .code == 0);
  unsetenv("TABIJ_MAX_CELLS");
}
