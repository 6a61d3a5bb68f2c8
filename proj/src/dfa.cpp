#include "dfa.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ensure.hpp"
#include "normal_form.hpp"

namespace b3 {

bool Dfa::accepts(const Word& w) const {
  int s = start;
  for (Letter l : w) {
    s = next[s][static_cast<int>(l)];
    if (s < 0) return false;
  }
  return accepting[s] != 0;
}

std::vector<BigInt> Dfa::count_words(int terms) const {
  std::vector<BigInt> out;
  std::vector<BigInt> cur(size());
  cur[start] = 1;
  for (int n = 0; n < terms; ++n) {
    BigInt total = 0;
    for (std::size_t s = 0; s < size(); ++s)
      if (accepting[s]) total += cur[s];
    out.push_back(std::move(total));
    std::vector<BigInt> nxt(size());
    for (std::size_t s = 0; s < size(); ++s) {
      if (cur[s] == 0) continue;
      for (int g = 0; g < 4; ++g) {
        int t = next[s][g];
        if (t >= 0) nxt[t] += cur[s];
      }
    }
    cur = std::move(nxt);
  }
  return out;
}

namespace {

// State of the geodesic scanner: the last two letters (0 = none, else
// letter code + 1) plus one bit per pattern family already seen.
struct ScanState {
  int pp = 0, p = 0;
  unsigned flags = 0;  // bit 0 ab/ba seen, 1 AB/BA, 2 aba/bab, 3 ABA/BAB,
                       // 4 some lower-case letter, 5 some upper-case letter
  friend auto operator<=>(const ScanState&, const ScanState&) = default;
};

constexpr unsigned kLoPair = 1u << 0, kUpPair = 1u << 1, kLoTriple = 1u << 2,
                   kUpTriple = 1u << 3, kLoSeen = 1u << 4, kUpSeen = 1u << 5;

// Apply one letter; returns false when the word stops being geodesic.
bool scan_step(ScanState& s, Letter c) {
  int code = static_cast<int>(c) + 1;
  if (s.p != 0 && s.p - 1 == static_cast<int>(inverse(c)))
    return false;  // cancelling pair: not even freely reduced

  s.flags |= is_positive(c) ? kLoSeen : kUpSeen;
  if (s.p != 0) {
    Letter prev = static_cast<Letter>(s.p - 1);
    if (sign_of(prev) == sign_of(c) && base_of(prev) != base_of(c)) {
      s.flags |= is_positive(c) ? kLoPair : kUpPair;
      if (s.pp != 0) {
        Letter prev2 = static_cast<Letter>(s.pp - 1);
        if (sign_of(prev2) == sign_of(c) && base_of(prev2) != base_of(prev))
          s.flags |= is_positive(c) ? kLoTriple : kUpTriple;
      }
    }
  }
  if ((s.flags & kLoPair) && (s.flags & kUpPair)) return false;
  if ((s.flags & kLoTriple) && (s.flags & kUpSeen)) return false;
  if ((s.flags & kUpTriple) && (s.flags & kLoSeen)) return false;
  s.pp = s.p;
  s.p = code;
  return true;
}

}  // namespace

Dfa geodesic_dfa() {
  // Lazy subset-free construction: breadth-first over reachable scanner
  // states, then minimize.
  std::map<ScanState, int> index;
  std::vector<ScanState> states;
  ScanState init;
  index[init] = 0;
  states.push_back(init);
  Dfa d;
  for (std::size_t head = 0; head < states.size(); ++head) {
    std::array<int, 4> row{-1, -1, -1, -1};
    for (int g = 0; g < 4; ++g) {
      ScanState s = states[head];
      if (!scan_step(s, kLetters[g])) continue;
      auto [it, inserted] = index.emplace(s, static_cast<int>(states.size()));
      if (inserted) states.push_back(s);
      row[g] = it->second;
    }
    d.next.push_back(row);
    d.accepting.push_back(1);
  }
  d.start = 0;
  return minimize(d);
}

Dfa shortlex_dfa() {
  Dfa d;
  d.start = 0;
  for (int s = 0; s < kSlStateCount; ++s) {
    std::array<int, 4> row;
    for (int g = 0; g < 4; ++g) row[g] = sl_step(s, kLetters[g]);
    d.next.push_back(row);
    d.accepting.push_back(1);
  }
  return minimize(d);
}

Dfa minimize(const Dfa& d) {
  // Work on a completed automaton: one extra sink state absorbs all
  // missing transitions.
  const int n = static_cast<int>(d.size());
  const int sink = n;
  std::vector<std::array<int, 4>> next(n + 1);
  std::vector<char> acc(n + 1);
  for (int s = 0; s < n; ++s) {
    for (int g = 0; g < 4; ++g)
      next[s][g] = d.next[s][g] < 0 ? sink : d.next[s][g];
    acc[s] = d.accepting[s];
  }
  next[sink] = {sink, sink, sink, sink};
  acc[sink] = 0;

  // Moore refinement: split classes by (own acceptance, class of each
  // successor) until stable.
  std::vector<int> cls(n + 1);
  for (int s = 0; s <= n; ++s) cls[s] = acc[s] ? 0 : 1;
  for (;;) {
    std::map<std::array<int, 5>, int> sig;
    std::vector<int> fresh(n + 1);
    for (int s = 0; s <= n; ++s) {
      std::array<int, 5> key{cls[s], cls[next[s][0]], cls[next[s][1]],
                             cls[next[s][2]], cls[next[s][3]]};
      auto [it, inserted] = sig.emplace(key, static_cast<int>(sig.size()));
      fresh[s] = it->second;
    }
    bool changed = false;
    for (int s = 0; s <= n; ++s)
      if (fresh[s] != cls[s]) changed = true;
    cls = std::move(fresh);
    if (!changed) break;
  }

  // Rebuild on classes, dropping everything that behaves like the sink,
  // then renumber breadth-first for a stable layout.
  const int sink_cls = cls[sink];
  std::map<int, int> order;
  std::vector<int> bfs;
  auto visit = [&](int c) {
    if (c == sink_cls || order.count(c)) return;
    order[c] = static_cast<int>(order.size());
    bfs.push_back(c);
  };
  const int cls_count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep_of(cls_count, -1);
  for (int s = 0; s <= n; ++s)
    if (rep_of[cls[s]] < 0) rep_of[cls[s]] = s;
  visit(cls[d.start]);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    int s = rep_of[c];
    for (int g = 0; g < 4; ++g) visit(cls[next[s][g]]);
  }

  Dfa out;
  out.start = 0;
  out.next.resize(order.size());
  out.accepting.resize(order.size());
  for (auto [c, id] : order) {
    int s = rep_of[c];
    out.accepting[id] = acc[s];
    for (int g = 0; g < 4; ++g) {
      int tc = cls[next[s][g]];
      out.next[id][g] = tc == sink_cls ? -1 : order.at(tc);
    }
  }
  ensure(order.count(cls[d.start]) && order.at(cls[d.start]) == 0,
         "minimize: start state lost");
  return out;
}

std::vector<std::string> geodesic_state_descriptions() {
  Dfa d = geodesic_dfa();
  // Shortest witness word per state, breadth-first in letter order.
  std::vector<std::string> witness(d.size());
  std::vector<char> seen(d.size(), 0);
  std::vector<int> queue{d.start};
  seen[d.start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int s = queue[head];
    for (int g = 0; g < 4; ++g) {
      int t = d.next[s][g];
      if (t < 0 || seen[t]) continue;
      seen[t] = 1;
      witness[t] = witness[s] + to_char(kLetters[g]);
      queue.push_back(t);
    }
  }
  static const std::pair<unsigned, const char*> kFlagNames[] = {
      {kLoPair, "lower-pair"},     {kUpPair, "upper-pair"},
      {kLoTriple, "lower-triple"}, {kUpTriple, "upper-triple"},
      {kLoSeen, "lower-seen"},     {kUpSeen, "upper-seen"}};
  std::vector<std::string> out(d.size());
  for (std::size_t s = 0; s < d.size(); ++s) {
    ScanState st;
    for (char c : witness[s]) {
      bool alive = scan_step(st, *letter_from_char(c));
      ensure(alive, "state description: witness fell into the sink");
    }
    std::string window;
    if (st.pp != 0) window += to_char(static_cast<Letter>(st.pp - 1));
    if (st.p != 0) window += to_char(static_cast<Letter>(st.p - 1));
    std::string flags;
    for (auto [bit, name] : kFlagNames)
      if (st.flags & bit) flags += std::string(flags.empty() ? "" : ",") + name;
    out[s] = "via \"" + witness[s] + "\" window \"" + window + "\" flags [" +
             flags + "]";
  }
  return out;
}

std::vector<std::vector<int>> transfer_matrix(const Dfa& d) {
  for (char a : d.accepting)
    ensure(a != 0, "transfer_matrix: needs every live state accepting");
  std::vector<std::vector<int>> m(d.size(), std::vector<int>(d.size(), 0));
  for (std::size_t s = 0; s < d.size(); ++s)
    for (int g = 0; g < 4; ++g)
      if (d.next[s][g] >= 0) ++m[s][d.next[s][g]];
  return m;
}

std::string to_dot(const Dfa& d) {
  std::string s = "digraph fsa {\n  rankdir=LR;\n";
  s += "  init [shape=point];\n  init -> s" + std::to_string(d.start) + ";\n";
  for (std::size_t v = 0; v < d.size(); ++v) {
    s += "  s" + std::to_string(v) + " [shape=" +
         (d.accepting[v] ? "doublecircle" : "circle") + "];\n";
  }
  for (std::size_t v = 0; v < d.size(); ++v)
    for (int g = 0; g < 4; ++g) {
      if (d.next[v][g] < 0) continue;
      s += "  s" + std::to_string(v) + " -> s" + std::to_string(d.next[v][g]) +
           " [label=\"" + to_char(kLetters[g]) + "\"];\n";
    }
  s += "}\n";
  return s;
}

std::string to_json(const Dfa& d) {
  const int sink = static_cast<int>(d.size());
  nlohmann::ordered_json j;
  j["states"] = d.size() + 1;
  j["start"] = d.start;
  std::vector<int> acc;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d.accepting[v]) acc.push_back(static_cast<int>(v));
  j["accepting"] = acc;
  auto rows = nlohmann::ordered_json::object();
  for (int v = 0; v <= sink; ++v) {
    auto row = nlohmann::ordered_json::object();
    for (int g = 0; g < 4; ++g) {
      int t = v == sink ? sink : d.next[v][g];
      row[std::string(1, to_char(kLetters[g]))] = t < 0 ? sink : t;
    }
    rows[std::to_string(v)] = row;
  }
  j["transitions"] = rows;
  j["sink"] = sink;
  return j.dump(2) + "\n";
}

}  // namespace b3
