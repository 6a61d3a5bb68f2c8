// Command-line front end.  All functionality is reached through the C
// interface in braid3.h; this file only parses flags and shuffles text.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braid3.h"

namespace {

struct WordHandle {
  b3_word* p = nullptr;
  ~WordHandle() { b3_word_free(p); }
};

struct TextHandle {
  char* p = nullptr;
  ~TextHandle() { b3_string_free(p); }
};

int report_error() {
  std::cerr << "error: " << b3_last_error() << "\n";
  return 1;
}

bool parse_or_complain(const std::string& text, WordHandle& out) {
  if (b3_word_parse(text.c_str(), &out.p) != B3_OK) {
    report_error();
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-problem tools for the braid group on three strands"};
  app.require_subcommand(1);

  std::string word_text, other_text, form = "sl";
  std::string kind = "geodesic", source = "formula", language, format;
  std::string dot_path;
  int terms = 12, radius = 3, max_len = 12, st_radius = 10;
  bool csv = false, verify = false;

  CLI::App* c_geodesic =
      app.add_subcommand("geodesic", "test a word for minimal length");
  c_geodesic->add_option("word", word_text, "word to test")->required();

  CLI::App* c_normalize =
      app.add_subcommand("normalize", "canonical forms of a word");
  c_normalize->add_option("word", word_text, "word to normalize")->required();
  c_normalize->add_option("--form", form, "cf, rg, sl, or tf (default sl)");

  CLI::App* c_equal =
      app.add_subcommand("equal", "do two words name the same element");
  c_equal->add_option("first", word_text, "first word")->required();
  c_equal->add_option("second", other_text, "second word")->required();

  CLI::App* c_length =
      app.add_subcommand("length", "geodesic length of the element");
  c_length->add_option("word", word_text, "word")->required();

  CLI::App* c_trans = app.add_subcommand(
      "translation-length", "stable length per factor under powers");
  c_trans->add_option("word", word_text, "word")->required();

  CLI::App* c_growth =
      app.add_subcommand("growth", "growth series coefficients");
  c_growth->add_option("--kind", kind, "geodesic or spherical");
  c_growth->add_option("--terms", terms, "last length to report (default 12)");
  c_growth->add_option("--source", source, "formula, dfa, or bruteforce");
  c_growth->add_flag("--csv", csv, "emit n,count rows");
  c_growth->add_flag("--verify", verify,
                     "compare all three sources; fails on any mismatch");

  CLI::App* c_fsa = app.add_subcommand("fsa", "export a language automaton");
  c_fsa->add_option("--language", language, "geodesic or shortlex")
      ->required();
  c_fsa->add_option("--export", format, "dot or json")->required();

  CLI::App* c_ball =
      app.add_subcommand("cayley-ball", "balls in the Cayley graph");
  c_ball->add_option("--radius", radius, "ball radius (default 3)");
  c_ball->add_option("--dot", dot_path, "also write Graphviz text here");

  CLI::App* c_selftest =
      app.add_subcommand("selftest", "run the full verification sweep");
  c_selftest->add_option("--max-len", max_len,
                         "exhaustive sweep bound (default 12)");
  c_selftest->add_option("--radius", st_radius,
                         "distance comparison bound (default 10)");

  CLI11_PARSE(app, argc, argv);

  if (*c_geodesic) {
    WordHandle w;
    if (!parse_or_complain(word_text, w)) return 1;
    int yes = 0;
    TextHandle why;
    if (b3_geodesic_report(w.p, &yes, &why.p) != B3_OK) return report_error();
    std::cout << (yes ? "true" : "false") << "\n" << why.p << "\n";
    return 0;
  }

  if (*c_normalize) {
    WordHandle w;
    if (!parse_or_complain(word_text, w)) return 1;
    TextHandle text;
    if (b3_normal_form(w.p, form.c_str(), &text.p) != B3_OK)
      return report_error();
    std::cout << text.p << "\n";
    return 0;
  }

  if (*c_equal) {
    WordHandle u, w;
    if (!parse_or_complain(word_text, u) || !parse_or_complain(other_text, w))
      return 1;
    int same = 0;
    if (b3_equal(u.p, w.p, &same) != B3_OK) return report_error();
    std::cout << (same ? "true" : "false") << "\n";
    return 0;
  }

  if (*c_length || *c_trans) {
    WordHandle w;
    if (!parse_or_complain(word_text, w)) return 1;
    long value = 0;
    b3_status rc = *c_length ? b3_element_length(w.p, &value)
                             : b3_translation_length(w.p, &value);
    if (rc != B3_OK) return report_error();
    std::cout << value << "\n";
    return 0;
  }

  if (*c_growth) {
    if (verify) {
      int agree = 0;
      TextHandle text;
      if (b3_growth_verify(terms, &agree, &text.p) != B3_OK)
        return report_error();
      std::cout << text.p;
      return agree ? 0 : 2;
    }
    TextHandle text;
    if (b3_growth_series(kind.c_str(), source.c_str(), terms, &text.p) !=
        B3_OK)
      return report_error();
    if (!csv) {
      std::cout << text.p;
      return 0;
    }
    std::istringstream lines(text.p);
    std::string line;
    for (int n = 0; std::getline(lines, line); ++n)
      std::cout << n << "," << line << "\n";
    return 0;
  }

  if (*c_fsa) {
    TextHandle text;
    if (b3_fsa_export(language.c_str(), format.c_str(), &text.p) != B3_OK)
      return report_error();
    std::cout << text.p;
    return 0;
  }

  if (*c_ball) {
    TextHandle counts;
    if (b3_cayley_ball_counts(radius, &counts.p) != B3_OK)
      return report_error();
    std::cout << counts.p;
    if (!dot_path.empty()) {
      TextHandle dot;
      if (b3_cayley_ball_dot(radius, &dot.p) != B3_OK) return report_error();
      std::ofstream file(dot_path, std::ios::binary);
      file << dot.p;
      if (!file) {
        std::cerr << "error: cannot write " << dot_path << "\n";
        return 1;
      }
    }
    return 0;
  }

  if (*c_selftest) {
    TextHandle text;
    int all = 0;
    if (b3_selftest(max_len, st_radius, &text.p, &all) != B3_OK)
      return report_error();
    std::cout << text.p;
    if (!all) {
      std::cout << "verification FAILED\n";
      return 2;
    }
    return 0;
  }

  return 0;
}
