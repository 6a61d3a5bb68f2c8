#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include <json.hpp>

#include "dfa.hpp"
#include "fingerprint.hpp"
#include "geodesic.hpp"
#include "normal_form.hpp"
#include "word.hpp"

using namespace b3;

namespace {

// Every word over {a,A,b,B} of the given length, one at a time.
template <typename F>
void for_each_word(int length, F&& visit) {
  std::vector<Letter> ls(length);
  long total = 1;
  for (int i = 0; i < length; ++i) total *= 4;
  for (long v = 0; v < total; ++v) {
    long rest = v;
    for (int i = 0; i < length; ++i) {
      ls[i] = static_cast<Letter>(rest & 3);
      rest >>= 2;
    }
    visit(Word(ls));
  }
}

void check_well_formed(const Dfa& d) {
  REQUIRE(d.size() > 0);
  REQUIRE(d.accepting.size() == d.size());
  REQUIRE(d.start >= 0);
  REQUIRE(static_cast<std::size_t>(d.start) < d.size());
  for (const auto& row : d.next)
    for (int t : row) {
      REQUIRE(t >= -1);
      REQUIRE(t < static_cast<int>(d.size()));
    }
}

bool same_dfa(const Dfa& x, const Dfa& y) {
  return x.start == y.start && x.next == y.next && x.accepting == y.accepting;
}

}  // namespace

TEST_CASE("geodesic automaton has 27 live states, all accepting") {
  Dfa d = geodesic_dfa();
  check_well_formed(d);
  CHECK(d.size() == 27);
  for (std::size_t s = 0; s < d.size(); ++s) CHECK(d.accepting[s]);
  // The reject sink is implicit: some transition must leave the live part.
  bool has_missing = false;
  for (const auto& row : d.next)
    for (int t : row)
      if (t < 0) has_missing = true;
  CHECK(has_missing);
}

TEST_CASE("geodesic automaton agrees with the pattern test on every word") {
  Dfa d = geodesic_dfa();
  for (int n = 0; n <= 7; ++n)
    for_each_word(n, [&](const Word& w) {
      CAPTURE(format_plain(w));
      REQUIRE(d.accepts(w) == is_geodesic(w));
    });
}

TEST_CASE("canonical-spelling automaton agrees with is_sl on every word") {
  Dfa d = shortlex_dfa();
  check_well_formed(d);
  for (std::size_t s = 0; s < d.size(); ++s) CHECK(d.accepting[s]);
  for (int n = 0; n <= 7; ++n)
    for_each_word(n, [&](const Word& w) {
      CAPTURE(format_plain(w));
      REQUIRE(d.accepts(w) == is_sl(w));
    });
}

TEST_CASE("word counts per length match the known values") {
  std::vector<BigInt> geo = geodesic_dfa().count_words(9);
  std::vector<BigInt> expect_geo;
  for (int n = 0; n <= 8; ++n) {
    long count = 0;
    for_each_reduced_word(n, [&](const Word& w) {
      if (is_geodesic(w)) ++count;
    });
    expect_geo.emplace_back(count);
  }
  CHECK(geo == expect_geo);
  CHECK(geo[0] == 1);
  CHECK(geo[1] == 4);
  CHECK(geo[2] == 12);
  CHECK(geo[3] == 36);
  CHECK(geo[4] == 96);

  std::vector<BigInt> sl = shortlex_dfa().count_words(9);
  // One canonical spelling per element, so these are sphere sizes.
  DistanceTable table(8);
  std::vector<BigInt> expect_sl;
  for (std::uint64_t c : table.layer_counts()) expect_sl.emplace_back(c);
  CHECK(sl == expect_sl);
  CHECK(sl[0] == 1);
  CHECK(sl[1] == 4);
  CHECK(sl[2] == 12);
  CHECK(sl[3] == 30);
  CHECK(sl[4] == 68);
}

TEST_CASE("minimization is idempotent and merges duplicate states") {
  Dfa g = geodesic_dfa();
  CHECK(same_dfa(g, minimize(g)));
  Dfa s = shortlex_dfa();
  CHECK(same_dfa(s, minimize(s)));

  // Two copies of the same accepting loop collapse to one state.
  Dfa dup;
  dup.start = 0;
  dup.next = {{1, -1, -1, -1}, {0, -1, -1, -1}};
  dup.accepting = {1, 1};
  Dfa m = minimize(dup);
  CHECK(m.size() == 1);
  CHECK(m.accepting[0]);
  CHECK(m.next[0][0] == 0);
  CHECK(m.accepts(parse_word("aaa")));
  CHECK(!m.accepts(parse_word("ab")));
}

TEST_CASE("minimization keeps the language intact") {
  Dfa g = geodesic_dfa();
  // Pad with an unreachable state and a reachable duplicate of the start.
  Dfa padded = g;
  std::size_t n = padded.size();
  padded.next.push_back(padded.next[g.start]);
  padded.accepting.push_back(1);
  padded.next.push_back({-1, -1, -1, -1});
  padded.accepting.push_back(0);
  for (int g4 = 0; g4 < 4; ++g4)
    if (padded.next[0][g4] < 0) padded.next[0][g4] = static_cast<int>(n);
  Dfa m = minimize(padded);
  // The duplicate only hangs off previously-dead edges, so the language grew;
  // minimizing the original again must not change anything.
  CHECK(m.size() >= g.size());
  CHECK(same_dfa(minimize(g), g));
}

TEST_CASE("dot export is deterministic and well shaped") {
  Dfa d = geodesic_dfa();
  std::string dot = to_dot(d);
  CHECK(dot == to_dot(geodesic_dfa()));
  CHECK(dot.find("digraph fsa") == 0);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("init -> s0") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("json export: total table with explicit sink, round-trips") {
  Dfa d = shortlex_dfa();
  std::string text = to_json(d);
  CHECK(text == to_json(shortlex_dfa()));
  nlohmann::json j = nlohmann::json::parse(text);
  const int sink = j["sink"].get<int>();
  REQUIRE(j["states"].get<std::size_t>() == d.size() + 1);
  REQUIRE(sink == static_cast<int>(d.size()));
  CHECK(j["start"].get<int>() == d.start);
  CHECK(j["accepting"].size() == d.size());  // every live state accepts
  REQUIRE(j["transitions"].size() == d.size() + 1);

  Dfa back;
  back.start = j["start"].get<int>();
  back.next.assign(d.size(), {-1, -1, -1, -1});
  back.accepting.assign(d.size(), 0);
  for (int s : j["accepting"]) back.accepting[s] = 1;
  for (const auto& [from, row] : j["transitions"].items()) {
    int v = std::stoi(from);
    REQUIRE(row.size() == 4);  // total over the alphabet
    for (const auto& [letter, target] : row.items()) {
      REQUIRE(letter.size() == 1);
      auto parsed = letter_from_char(letter[0]);
      REQUIRE(parsed.has_value());
      int t = target.get<int>();
      if (v == sink) {
        CHECK(t == sink);  // absorbing
        continue;
      }
      back.next[v][static_cast<int>(*parsed)] = t == sink ? -1 : t;
    }
  }
  CHECK(same_dfa(back, d));
}

TEST_CASE("transfer matrix counts letters between live states") {
  Dfa d = geodesic_dfa();
  auto m = transfer_matrix(d);
  REQUIRE(m.size() == 27);
  for (const auto& row : m) {
    REQUIRE(row.size() == 27);
    int sum = 0;
    for (int v : row) sum += v;
    CHECK(sum <= 4);
  }
  // start-row * M^n * all-ones reproduces the word counts
  std::vector<BigInt> counts = d.count_words(6);
  std::vector<BigInt> row(m.size(), 0);
  row[d.start] = 1;
  for (int n = 0; n < 6; ++n) {
    BigInt total = 0;
    for (const BigInt& v : row) total += v;
    CHECK(total == counts[n]);
    std::vector<BigInt> nxt(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j2 = 0; j2 < m.size(); ++j2)
        nxt[j2] += row[i] * m[i][j2];
    row = std::move(nxt);
  }

  Dfa bad;
  bad.start = 0;
  bad.next = {{-1, -1, -1, -1}};
  bad.accepting = {0};
  CHECK_THROWS_AS(transfer_matrix(bad), std::logic_error);
}

TEST_CASE("every pair of live states has a separating suffix") {
  for (Dfa d : {geodesic_dfa(), shortlex_dfa()}) {
    const int n = static_cast<int>(d.size());
    auto run = [&](int s, const std::vector<int>& word) {
      for (int g : word) {
        if (s < 0) return -1;
        s = d.next[s][g];
      }
      return s;
    };
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = s1 + 1; s2 < n; ++s2) {
        // Breadth-first over suffixes until one side dies first.
        std::vector<std::vector<int>> queue{{}};
        bool found = false;
        for (std::size_t head = 0; head < queue.size() && !found; ++head) {
          int a = run(s1, queue[head]), b = run(s2, queue[head]);
          if ((a < 0) != (b < 0)) {
            found = true;
            break;
          }
          if (a < 0 || queue[head].size() >= 8) continue;
          for (int g = 0; g < 4; ++g) {
            auto w = queue[head];
            w.push_back(g);
            queue.push_back(std::move(w));
          }
        }
        CAPTURE(s1);
        CAPTURE(s2);
        REQUIRE(found);
      }
  }
}

TEST_CASE("deep agreement with the scan predicates under sink pruning") {
  // Walks the word tree to depth 12, skipping subtrees only once both the
  // automaton and the predicate have rejected (both languages are closed
  // under taking prefixes, so nothing down there can disagree).
  struct Lang {
    Dfa d;
    bool (*pred)(const Word&);
  };
  Lang langs[] = {{geodesic_dfa(), [](const Word& w) { return is_geodesic(w); }},
                  {shortlex_dfa(), [](const Word& w) { return is_sl(w); }}};
  for (const Lang& lang : langs) {
    long live = 0;
    std::vector<Letter> stack;
    auto walk = [&](auto&& self, int state, int depth) -> void {
      if (depth == 12) return;
      for (int g = 0; g < 4; ++g) {
        stack.push_back(kLetters[g]);
        int t = state < 0 ? -1 : lang.d.next[state][g];
        bool hit = lang.pred(Word(stack));
        REQUIRE(hit == (t >= 0));
        if (t >= 0) {
          ++live;
          self(self, t, depth + 1);
        }
        stack.pop_back();
      }
    };
    walk(walk, lang.d.start, 0);
    CHECK(live > 1000);  // the pruning left something substantial to check
  }
}

TEST_CASE("state descriptions name every live state") {
  std::vector<std::string> desc = geodesic_state_descriptions();
  REQUIRE(desc.size() == 27);
  CHECK(desc[0].find("via \"\"") != std::string::npos);  // start state
  for (const std::string& line : desc) {
    CHECK(line.find("window") != std::string::npos);
    CHECK(line.find("flags") != std::string::npos);
  }
  // Distinct states never share a description: window + flags determine
  // the minimized state only together with the witness, so compare whole
  // lines.
  std::set<std::string> unique(desc.begin(), desc.end());
  CHECK(unique.size() == desc.size());
}
