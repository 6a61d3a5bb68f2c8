// C binding over the core library.  Everything crossing the boundary is a
// plain pointer or integer; exceptions are caught here and turned into
// status codes, with the message parked in a thread-local slot.

#include "braid3.h"

#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cayley.hpp"
#include "dfa.hpp"
#include "fingerprint.hpp"
#include "geodesic.hpp"
#include "growth.hpp"
#include "normal_form.hpp"
#include "selftest.hpp"
#include "word.hpp"

struct b3_word {
  b3::Word w;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

b3_status arg_error(const char* what) {
  set_error(what);
  return B3_ERR_ARG;
}

b3_status domain_error(const std::string& what) {
  set_error(what);
  return B3_ERR_DOMAIN;
}

template <typename F>
b3_status guarded(F&& f) {
  try {
    return f();
  } catch (const b3::ParseError& e) {
    set_error(std::string(e.what()) + " (position " +
              std::to_string(e.position) + ")");
    return B3_ERR_PARSE;
  } catch (const b3::OutOfRadius& e) {
    set_error(e.what());
    return B3_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return B3_ERR_ARG;
  } catch (const std::logic_error& e) {
    set_error(e.what());
    return B3_ERR_VERIFY;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return B3_ERR_LIMIT;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return B3_ERR_LIMIT;
  } catch (...) {
    set_error("unexpected failure");
    return B3_ERR_VERIFY;
  }
}

// Series coefficients 0..terms for the requested kind and source.
std::vector<b3::BigInt> series_by_source(const std::string& kind,
                                         const std::string& source,
                                         int terms) {
  const bool geodesic = kind == "geodesic";
  if (!geodesic && kind != "spherical")
    throw std::invalid_argument("unknown kind \"" + kind +
                                "\" (want geodesic or spherical)");
  if (source == "formula")
    return b3::series(geodesic ? b3::geodesic_series_closed_form()
                               : b3::spherical_series_closed_form(),
                      terms + 1);
  if (source == "dfa")
    return (geodesic ? b3::geodesic_dfa() : b3::shortlex_dfa())
        .count_words(terms + 1);
  if (source == "bruteforce")
    return geodesic ? b3::geodesic_counts_direct(terms + 1)
                    : b3::spherical_counts_direct(terms + 1);
  throw std::invalid_argument("unknown source \"" + source +
                              "\" (want formula, dfa, or bruteforce)");
}

std::string join_lines(const std::vector<b3::BigInt>& v) {
  std::ostringstream out;
  for (const b3::BigInt& x : v) out << x << "\n";
  return out.str();
}

}  // namespace

extern "C" {

b3_status b3_word_parse(const char* text, b3_word** out) {
  if (!text || !out) return arg_error("b3_word_parse: null argument");
  return guarded([&] {
    b3::Word w = b3::parse_word(text);
    *out = new b3_word{std::move(w)};
    return B3_OK;
  });
}

void b3_word_free(b3_word* w) { delete w; }

b3_status b3_word_format(const b3_word* w, int compressed, char** out) {
  if (!w || !out) return arg_error("b3_word_format: null argument");
  return guarded([&] {
    *out = dup_string(compressed ? b3::format_compressed(w->w)
                                 : b3::format_plain(w->w));
    return B3_OK;
  });
}

b3_status b3_word_length(const b3_word* w, size_t* out) {
  if (!w || !out) return arg_error("b3_word_length: null argument");
  *out = w->w.size();
  return B3_OK;
}

b3_status b3_free_reduce(const b3_word* w, b3_word** out) {
  if (!w || !out) return arg_error("b3_free_reduce: null argument");
  return guarded([&] {
    *out = new b3_word{b3::free_reduce(w->w)};
    return B3_OK;
  });
}

b3_status b3_is_geodesic(const b3_word* w, int* out) {
  if (!w || !out) return arg_error("b3_is_geodesic: null argument");
  return guarded([&] {
    *out = b3::is_geodesic(w->w) ? 1 : 0;
    return B3_OK;
  });
}

b3_status b3_geodesic_report(const b3_word* w, int* geodesic, char** out) {
  if (!w || !geodesic || !out)
    return arg_error("b3_geodesic_report: null argument");
  return guarded([&] {
    b3::GeodesicReport r = b3::geodesic_report(w->w);
    *geodesic = r.geodesic() ? 1 : 0;
    *out = dup_string(r.describe());
    return B3_OK;
  });
}

b3_status b3_shortlex(const b3_word* w, b3_word** out) {
  if (!w || !out) return arg_error("b3_shortlex: null argument");
  return guarded([&] {
    *out = new b3_word{b3::shortlex(w->w)};
    return B3_OK;
  });
}

b3_status b3_normal_form(const b3_word* w, const char* form, char** out) {
  if (!w || !form || !out) return arg_error("b3_normal_form: null argument");
  return guarded([&]() -> b3_status {
    std::string f = form;
    std::string text;
    if (f == "cf")
      text = b3::format_cf(b3::to_cf(w->w));
    else if (f == "rg")
      text = b3::format_rg(b3::to_rg(w->w));
    else if (f == "tf")
      text = b3::format_tf(b3::to_tf(w->w));
    else if (f == "sl")
      text = b3::format_compressed(b3::shortlex(w->w));
    else
      throw std::invalid_argument("unknown form \"" + f +
                                  "\" (want cf, rg, sl, or tf)");
    *out = dup_string(text);
    return B3_OK;
  });
}

b3_status b3_equal(const b3_word* u, const b3_word* w, int* out) {
  if (!u || !w || !out) return arg_error("b3_equal: null argument");
  return guarded([&] {
    *out = b3::equal_elements(u->w, w->w) ? 1 : 0;
    return B3_OK;
  });
}

b3_status b3_element_length(const b3_word* w, long* out) {
  if (!w || !out) return arg_error("b3_element_length: null argument");
  return guarded([&] {
    *out = b3::element_length(w->w);
    return B3_OK;
  });
}

b3_status b3_translation_length(const b3_word* w, long* out) {
  if (!w || !out) return arg_error("b3_translation_length: null argument");
  return guarded([&] {
    *out = b3::translation_length(w->w);
    return B3_OK;
  });
}

b3_status b3_growth_series(const char* kind, const char* source, int terms,
                           char** out) {
  if (!kind || !source || !out)
    return arg_error("b3_growth_series: null argument");
  if (terms < 0) return domain_error("b3_growth_series: negative terms");
  if (std::string(source) == "bruteforce" && terms > 14)
    return domain_error("bruteforce source is limited to 14 terms");
  return guarded([&] {
    *out = dup_string(join_lines(series_by_source(kind, source, terms)));
    return B3_OK;
  });
}

b3_status b3_growth_formula(const char* kind, char** out) {
  if (!kind || !out) return arg_error("b3_growth_formula: null argument");
  return guarded([&]() -> b3_status {
    std::string k = kind;
    if (k == "geodesic")
      *out = dup_string(b3::geodesic_series_closed_form().str());
    else if (k == "spherical")
      *out = dup_string(b3::spherical_series_closed_form().str());
    else
      throw std::invalid_argument("unknown kind \"" + k +
                                  "\" (want geodesic or spherical)");
    return B3_OK;
  });
}

b3_status b3_growth_verify(int terms, int* agree, char** report) {
  if (!agree || !report) return arg_error("b3_growth_verify: null argument");
  if (terms < 0) return domain_error("b3_growth_verify: negative terms");
  if (terms > 14)
    return domain_error("verification sweep is limited to 14 terms");
  return guarded([&] {
    std::ostringstream text;
    bool all = true;
    for (const char* kind : {"geodesic", "spherical"}) {
      std::vector<b3::BigInt> formula =
          series_by_source(kind, "formula", terms);
      std::vector<b3::BigInt> dfa = series_by_source(kind, "dfa", terms);
      std::vector<b3::BigInt> brute =
          series_by_source(kind, "bruteforce", terms);
      bool ok = formula == dfa && formula == brute;
      all = all && ok;
      text << kind << " n = 0.." << terms << ": "
           << (ok ? "formula, automaton, enumeration agree"
                  : "MISMATCH between sources")
           << "\n";
      if (!ok) {
        text << "  formula:     " << join_lines(formula);
        text << "  automaton:   " << join_lines(dfa);
        text << "  enumeration: " << join_lines(brute);
      }
    }
    *agree = all ? 1 : 0;
    *report = dup_string(text.str());
    return B3_OK;
  });
}

b3_status b3_fsa_export(const char* language, const char* format,
                        char** out) {
  if (!language || !format || !out)
    return arg_error("b3_fsa_export: null argument");
  return guarded([&]() -> b3_status {
    std::string lang = language;
    b3::Dfa d;
    if (lang == "geodesic")
      d = b3::geodesic_dfa();
    else if (lang == "shortlex")
      d = b3::shortlex_dfa();
    else
      throw std::invalid_argument("unknown language \"" + lang +
                                  "\" (want geodesic or shortlex)");
    std::string fmt = format;
    if (fmt == "dot")
      *out = dup_string(b3::to_dot(d));
    else if (fmt == "json")
      *out = dup_string(b3::to_json(d));
    else
      throw std::invalid_argument("unknown format \"" + fmt +
                                  "\" (want dot or json)");
    return B3_OK;
  });
}

b3_status b3_cayley_ball_dot(int radius, char** out) {
  if (!out) return arg_error("b3_cayley_ball_dot: null argument");
  if (radius < 0) return domain_error("negative radius");
  if (radius > 14) return domain_error("radius is limited to 14");
  return guarded([&] {
    *out = dup_string(b3::BallGraph(radius).to_dot());
    return B3_OK;
  });
}

b3_status b3_cayley_ball_counts(int radius, char** out) {
  if (!out) return arg_error("b3_cayley_ball_counts: null argument");
  if (radius < 0) return domain_error("negative radius");
  if (radius > 14) return domain_error("radius is limited to 14");
  return guarded([&] {
    b3::BallGraph ball(radius);
    std::ostringstream text;
    for (int n = 0; n <= radius; ++n)
      text << n << "," << ball.layer_counts()[n] << "\n";
    *out = dup_string(text.str());
    return B3_OK;
  });
}

b3_status b3_selftest(int max_len, int radius, char** report,
                      int* all_passed) {
  if (!report || !all_passed) return arg_error("b3_selftest: null argument");
  if (max_len < 0 || radius < 0) return domain_error("negative bound");
  if (max_len > 14 || radius > 12)
    return domain_error("bounds are limited to length 14 and radius 12");
  return guarded([&] {
    b3::SelftestReport r = b3::run_selftest(max_len, radius);
    std::ostringstream text;
    for (const b3::CheckResult& c : r.checks)
      text << (c.pass ? "PASS" : "FAIL") << " " << c.name << " — " << c.detail
           << "\n";
    *report = dup_string(text.str());
    *all_passed = r.all_passed() ? 1 : 0;
    return B3_OK;
  });
}

void b3_string_free(char* s) { delete[] s; }

const char* b3_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
