#include "selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cayley.hpp"
#include "dfa.hpp"
#include "fingerprint.hpp"
#include "geodesic.hpp"
#include "growth.hpp"
#include "normal_form.hpp"
#include "word.hpp"

namespace b3 {

bool SelftestReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

template <typename F>
CheckResult run_check(std::string name, F&& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

Word random_reduced(std::mt19937_64& rng, int max_len) {
  int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<Letter> ls;
  ls.reserve(len);
  while (static_cast<int>(ls.size()) < len) {
    Letter l = kLetters[rng() % 4];
    if (!ls.empty() && l == inverse(ls.back())) continue;
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

std::string join_counts(const std::vector<BigInt>& v, std::size_t limit) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i)
    out << (i ? ", " : "") << v[i];
  if (v.size() > limit) out << ", ...";
  return out.str();
}

// All staircase prefixes of length <= max_len: alternating-base runs of
// positive letters, interior runs of length at least 2.
std::vector<Word> staircase_prefixes(int max_len) {
  std::vector<Word> out{Word()};
  std::vector<Syllable> syls;
  auto emit = [&] {
    for (std::size_t i = 1; i + 1 < syls.size(); ++i)
      if (syls[i].exp < 2) return;
    out.push_back(word_from_syllables(syls));
  };
  auto rec = [&](auto&& self, int base, int budget) -> void {
    for (int e = 1; e <= budget; ++e) {
      syls.push_back({base, e});
      emit();
      self(self, 1 - base, budget - e);
      syls.pop_back();
    }
  };
  rec(rec, 0, max_len);
  rec(rec, 1, max_len);
  return out;
}

}  // namespace

SelftestReport run_selftest(int max_len, int radius) {
  if (max_len < 0 || radius < 0)
    throw std::invalid_argument("selftest: negative bound");
  SelftestReport report;
  report.max_len = max_len;
  report.radius = radius;

  // One shared distance oracle, wide enough for every check below.
  DistanceTable table(std::max(max_len, radius));

  report.checks.push_back(run_check(
      "geodesic counts agree three ways", [&]() -> std::string {
        std::vector<BigInt> brute;
        for (int n = 0; n <= max_len; ++n) {
          long count = 0;
          for_each_reduced_word(n, [&](const Word& w) {
            if (table.distance(w) == n) ++count;
          });
          brute.emplace_back(count);
        }
        std::vector<BigInt> by_dfa = geodesic_dfa().count_words(max_len + 1);
        std::vector<BigInt> by_series =
            series(geodesic_series_closed_form(), max_len + 1);
        expect(brute == by_dfa,
               "enumeration disagrees with the automaton: " +
                   join_counts(brute, 16) + " vs " + join_counts(by_dfa, 16));
        expect(brute == by_series,
               "enumeration disagrees with the closed form: " +
                   join_counts(brute, 16) + " vs " +
                   join_counts(by_series, 16));
        if (max_len >= 4)
          expect(brute[0] == 1 && brute[1] == 4 && brute[2] == 12 &&
                     brute[3] == 36 && brute[4] == 96,
                 "head of the count sequence moved: " + join_counts(brute, 5));
        return "n = 0.." + std::to_string(max_len) + ": " +
               join_counts(brute, 8);
      }));

  report.checks.push_back(run_check(
      "geodesic series equals its closed form", [&]() -> std::string {
        RationalFn from_dfa = dfa_series(geodesic_dfa());
        RationalFn closed = geodesic_series_closed_form();
        expect(from_dfa == closed, "automaton gives " + from_dfa.str() +
                                       ", closed form is " + closed.str());
        return from_dfa.str();
      }));

  report.checks.push_back(run_check(
      "sphere sizes agree three ways", [&]() -> std::string {
        std::vector<BigInt> layers;
        for (int n = 0; n <= max_len; ++n)
          layers.emplace_back(table.layer_counts()[n]);
        std::vector<BigInt> by_dfa = shortlex_dfa().count_words(max_len + 1);
        std::vector<BigInt> by_series =
            series(spherical_series_closed_form(), max_len + 1);
        expect(layers == by_dfa,
               "search layers disagree with the automaton: " +
                   join_counts(layers, 16) + " vs " + join_counts(by_dfa, 16));
        expect(layers == by_series,
               "search layers disagree with the closed form: " +
                   join_counts(layers, 16) + " vs " +
                   join_counts(by_series, 16));
        RationalFn from_dfa = dfa_series(shortlex_dfa());
        RationalFn closed = spherical_series_closed_form();
        expect(from_dfa == closed, "automaton gives " + from_dfa.str() +
                                       ", closed form is " + closed.str());
        return "n = 0.." + std::to_string(max_len) + ": " +
               join_counts(layers, 8);
      }));

  report.checks.push_back(run_check(
      "geodesic automaton is 27 states plus a sink", [&]() -> std::string {
        Dfa d = geodesic_dfa();
        for (char a : d.accepting)
          expect(a != 0, "a live state does not accept");
        if (d.size() != 27) {
          std::string diag = "found " + std::to_string(d.size()) +
                             " live states; state map:";
          for (const std::string& line : geodesic_state_descriptions())
            diag += "\n    " + line;
          expect(false, diag);
        }
        return "27 live states, all accepting, one absorbing sink";
      }));

  report.checks.push_back(run_check(
      "coordinate and staircase forms invert each other",
      [&]() -> std::string {
        const int plen = std::max(0, max_len - 2);
        long coord_cases = 0;
        for (int n = 0; n <= plen; ++n)
          for_each_reduced_word(n, [&](const Word& u) {
            if (!is_almost_even(u)) return;
            for (int k = -3; k <= 3; ++k) {
              CfState s{u, k};
              CfState back = rg_to_cf(cf_to_rg(s));
              expect(back == s, "coordinate pair " + format_cf(s) +
                                    " came back as " + format_cf(back));
              ++coord_cases;
            }
          });
        long stair_cases = 0;
        for (const Word& p : staircase_prefixes(plen))
          for (int j = -3; j <= 3; ++j) {
            RgForm r{p, j};
            RgForm back = cf_to_rg(rg_to_cf(r));
            expect(back == r, "staircase form " + format_rg(r) +
                                  " came back as " + format_rg(back));
            ++stair_cases;
          }
        return std::to_string(coord_cases) + " coordinate pairs and " +
               std::to_string(stair_cases) +
               " staircase forms round-tripped (prefixes to length " +
               std::to_string(plen) + ", twists to 3)";
      }));

  report.checks.push_back(run_check(
      "canonical spellings preserve elements and minimality",
      [&]() -> std::string {
        long words = 0;
        for (int n = 0; n <= max_len; ++n)
          for_each_reduced_word(n, [&](const Word& w) {
            Word c = shortlex(w);
            expect(same_element(w, c), "canonical spelling of " +
                                           format_plain(w) +
                                           " is a different element: " +
                                           format_plain(c));
            bool minimal = c.size() == w.size();
            expect(minimal == is_geodesic(w),
                   "length drop and pattern test disagree on " +
                       format_plain(w) + " -> " + format_plain(c));
            ++words;
          });
        return std::to_string(words) + " reduced words to length " +
               std::to_string(max_len);
      }));

  report.checks.push_back(run_check(
      "pattern test matches true distance", [&]() -> std::string {
        long words = 0;
        for (int n = 0; n <= radius; ++n)
          for_each_reduced_word(n, [&](const Word& w) {
            bool by_pattern = is_geodesic(w);
            bool by_distance = table.distance(w) == n;
            expect(by_pattern == by_distance,
                   "disagreement on " + format_plain(w));
            ++words;
          });
        return std::to_string(words) + " reduced words to length " +
               std::to_string(radius);
      }));

  report.checks.push_back(run_check(
      "translation lengths: pinned, invariant, linear on powers",
      [&]() -> std::string {
        expect(translation_length(parse_word("a")) == 1, "length of a");
        expect(translation_length(parse_word("ab")) == 2, "length of ab");
        expect(translation_length(parse_word("(aba)^2")) == 6,
               "length of the full twist");
        std::mt19937_64 rng(0x5e1f8);
        long powers_checked = 0;
        for (int trial = 0; trial < 1000; ++trial) {
          Word w = random_reduced(rng, 8);
          long t = translation_length(w);
          expect(t >= 0 && t <= static_cast<long>(w.size()),
                 "length out of range for " + format_plain(w));
          Word u = random_reduced(rng, 4);
          Word conj = concat(concat(u, w), invert(u));
          expect(translation_length(conj) == t,
                 "conjugating " + format_plain(w) + " by " + format_plain(u) +
                     " changed the length");
          // Walk to the cyclically reduced canonical core; when every
          // rotation of the core is minimal, powers must grow linearly.
          Word core = shortlex(w);
          for (;;) {
            Word next = shortlex(cyclic_reduce(core));
            if (next == core) break;
            core = next;
          }
          bool all_rotations_minimal = true;
          for (const Word& r : cyclic_permutations(core))
            if (!is_geodesic(r)) all_rotations_minimal = false;
          if (core.empty() || !all_rotations_minimal) continue;
          expect(static_cast<long>(core.size()) == t,
                 "core " + format_plain(core) + " of " + format_plain(w) +
                     " has the wrong length");
          Word power;
          for (int n = 1; n * static_cast<long>(core.size()) <= radius; ++n) {
            power = concat(power, core);
            expect(table.distance(power) ==
                       n * static_cast<int>(core.size()),
                   "power " + std::to_string(n) + " of " +
                       format_plain(core) + " is not linear");
            ++powers_checked;
          }
        }
        expect(powers_checked >= 40, "too few power cases exercised");
        return "1000 random words; " + std::to_string(powers_checked) +
               " power cases linear within radius " + std::to_string(radius);
      }));

  report.checks.push_back(run_check(
      "stepping rules track the matrix oracle", [&]() -> std::string {
        std::mt19937_64 rng(0xca11e7);
        long folded = 0;
        for (int trial = 0; trial < 100000; ++trial) {
          Word w = random_reduced(rng, 20);
          CfState s = fold(w);
          expect(same_element(realize(s), w),
                 "folding " + format_plain(w) + " lost the element");
          ++folded;
        }
        const Word relator = parse_word("abaBAB");
        for (int trial = 0; trial < 200; ++trial) {
          Word w = random_reduced(rng, 8);
          Word loop = concat(concat(w, relator), invert(w));
          expect(fold(loop) == CfState{},
                 "relator loop left the origin via " + format_plain(w));
          expect(fold(concat(w, parse_word("aba"))) ==
                     fold(concat(w, parse_word("bab"))),
                 "the two half-twist spellings diverge after " +
                     format_plain(w));
        }
        BallGraph ball(radius);
        for (int n = 0; n <= radius; ++n)
          expect(ball.layer_counts()[n] == table.layer_counts()[n],
                 "ball layer " + std::to_string(n) +
                     " disagrees with the search oracle");
        return std::to_string(folded) +
               " random folds matched the oracle; relator loops closed; "
               "ball layers to radius " +
               std::to_string(radius) + " agree";
      }));

  return report;
}

}  // namespace b3
