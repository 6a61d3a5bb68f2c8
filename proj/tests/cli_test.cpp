// End-to-end checks of the b3 binary: spawn it like a user would and look
// at exit codes and output.  The path comes in through B3_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr, interleaved
};

// Arguments are passed through the shell, so quote anything with ^ or ().
RunResult run(const std::string& args) {
  static int counter = 0;
  std::string path = "/tmp/b3_cli_" + std::to_string(::getpid()) + "_" +
                     std::to_string(counter++) + ".txt";
  std::string cmd =
      std::string("'") + B3_CLI_PATH + "' " + args + " >" + path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::remove(path.c_str());
  return r;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

size_t count_lines(const std::string& text, const std::string& needle) {
  size_t n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("geodesic verdicts") {
  RunResult r = run("geodesic ab");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "true");

  r = run("geodesic abAB");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "false");
  CHECK(r.out.find("position") != std::string::npos);
}

TEST_CASE("bad input is an error, not a crash") {
  RunResult r = run("geodesic 'ab c'");
  CHECK(r.code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
  CHECK(r.out.find("position") != std::string::npos);

  r = run("normalize --form bogus ab");
  CHECK(r.code == 1);
  CHECK(r.out.find("bogus") != std::string::npos);

  r = run("growth --kind bogus --terms 3");
  CHECK(r.code == 1);

  r = run("--no-such-flag");
  CHECK(r.code != 0);

  r = run("");  // a subcommand is required
  CHECK(r.code != 0);
}

TEST_CASE("normalize") {
  RunResult r = run("normalize --form sl abab");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "a^2ba");

  r = run("normalize abab");  // sl is the default
  CHECK(first_line(r.out) == "a^2ba");

  r = run("normalize --form cf ab");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "B(aba)^1");

  r = run("normalize --form rg ab");
  CHECK(r.code == 0);
  r = run("normalize --form tf 'aBaB'");
  CHECK(r.code == 0);
}

TEST_CASE("equal, length, translation-length") {
  CHECK(first_line(run("equal abab aaba").out) == "true");
  CHECK(first_line(run("equal ab ba").out) == "false");
  CHECK(first_line(run("length 'a^2b^2A^2B^2'").out) == "6");
  CHECK(first_line(run("translation-length '(aba)^2'").out) == "6");
  CHECK(first_line(run("translation-length aabAA").out) == "1");
}

TEST_CASE("growth output and source agreement") {
  RunResult r = run("growth --kind geodesic --terms 4 --source formula");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n4\n12\n36\n96\n");

  r = run("growth --kind spherical --terms 4");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n4\n12\n30\n68\n");

  std::string formula = run("growth --terms 8 --source formula").out;
  CHECK(run("growth --terms 8 --source dfa").out == formula);
  CHECK(run("growth --terms 8 --source bruteforce").out == formula);

  r = run("growth --kind spherical --terms 3 --csv");
  CHECK(r.code == 0);
  CHECK(r.out == "0,1\n1,4\n2,12\n3,30\n");
}

TEST_CASE("growth --verify") {
  RunResult r = run("growth --verify --terms 8");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "agree") == 2);
  CHECK(r.out.find("geodesic") != std::string::npos);
  CHECK(r.out.find("spherical") != std::string::npos);
}

TEST_CASE("fsa export") {
  RunResult r = run("fsa --language geodesic --export json");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["states"].get<int>() == 28);
  CHECK(j.contains("sink"));

  r = run("fsa --language shortlex --export dot");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph fsa", 0) == 0);

  r = run("fsa --language geodesic --export bogus");
  CHECK(r.code == 1);
}

TEST_CASE("cayley-ball counts and dot file") {
  RunResult r = run("cayley-ball --radius 3");
  CHECK(r.code == 0);
  CHECK(r.out == "0,1\n1,4\n2,12\n3,30\n");

  std::string dot_path =
      "/tmp/b3_cli_ball_" + std::to_string(::getpid()) + ".dot";
  r = run("cayley-ball --radius 2 --dot " + dot_path);
  CHECK(r.code == 0);
  std::ifstream in(dot_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().rfind("digraph cayley", 0) == 0);
  std::remove(dot_path.c_str());

  r = run("cayley-ball --radius -1");
  CHECK(r.code == 1);
}

TEST_CASE("selftest at a reduced profile") {
  RunResult r = run("selftest --max-len 6 --radius 6");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "PASS") == 9);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
