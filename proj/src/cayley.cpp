#include "cayley.hpp"

#include <deque>

#include "ensure.hpp"
#include "fingerprint.hpp"

namespace b3 {

std::string CfState::key() const {
  return format_compressed(u) + "|" + std::to_string(k);
}

namespace {

// The rewrites in step() lean on the half twist d = aba absorbing an
// adjacent inverse letter: dA = ab, dB = ba, Ad = ba, Bd = ab, and the
// mirror images with d^-1 and positive letters.  Check them once against
// the matrix invariant so a typo in the rule tables cannot survive.
bool absorptions_hold() {
  auto ok = [](const char* lhs, const char* rhs) {
    return same_element(parse_word(lhs), parse_word(rhs));
  };
  return ok("(aba)A", "ab") && ok("(aba)B", "ba") && ok("A(aba)", "ba") &&
         ok("B(aba)", "ab") && ok("(aba)^-1a", "AB") &&
         ok("(aba)^-1b", "BA") && ok("a(aba)^-1", "BA") &&
         ok("b(aba)^-1", "AB") && ok("aba", "bab");
}

Word repeat_letter(int base, long exp) {
  std::vector<Letter> ls;
  Letter l = make_letter(base, exp < 0 ? -1 : +1);
  for (long i = 0; i < std::labs(exp); ++i) ls.push_back(l);
  return Word(std::move(ls));
}

Syllable last_syllable(const Word& u) {
  std::size_t i = u.size() - 1;
  Syllable s{base_of(u[i]), sign_of(u[i])};
  while (i > 0 && base_of(u[i - 1]) == s.base) {
    --i;
    s.exp += sign_of(u[i]);
  }
  return s;
}

CfState checked(CfState s) {
  ensure(is_freely_reduced(s.u), "step: prefix not freely reduced");
  ensure(is_almost_even(s.u), "step: prefix not almost even");
  return s;
}

}  // namespace

CfState step(const CfState& s, Letter g) {
  static const bool table_ok = absorptions_hold();
  ensure(table_ok, "step: absorption identities failed");

  // Pull g leftward through the twist power: each half twist swaps the
  // strands, so k twists turn g into its k-fold swap.
  Letter h = (s.k % 2 != 0) ? swapped(g) : g;
  const Word& u = s.u;

  if (u.empty()) return {Word({h}), s.k};

  Syllable tail = last_syllable(u);

  if (tail.base == base_of(h))  // extend or shrink the final run
    return checked({free_reduce(append(u, h)), s.k});

  if (tail.exp % 2 == 0)  // even final run: a fresh odd run is allowed
    return checked({append(u, h), s.k});

  // Odd final run t^e followed by the other strand.  Trade the offending
  // letter for a twist: t^e h = t^(e-1) h^-1 d when h is positive, and
  // t^e h = t^(e+1) h' d^-1 when h is negative, h' the positive letter of
  // h's strand.  Either way the prefix is almost even again.
  Word head(std::vector<Letter>(u.begin(), u.end() - std::labs(tail.exp)));
  if (is_positive(h)) {
    Word rest =
        concat(repeat_letter(tail.base, tail.exp - 1), Word({inverse(h)}));
    return checked({free_reduce(concat(head, rest)), s.k + 1});
  }
  Word rest = concat(repeat_letter(tail.base, tail.exp + 1),
                     Word({make_letter(base_of(h), +1)}));
  return checked({free_reduce(concat(head, rest)), s.k - 1});
}

CfState fold(const Word& w) {
  CfState s;
  for (Letter l : w) s = step(s, l);
  return s;
}

Word realize(const CfState& s) {
  Word tw = s.k >= 0 ? parse_word("aba") : parse_word("ABA");
  Word out = s.u;
  for (int i = 0; i < std::abs(s.k); ++i) out = concat(out, tw);
  return out;
}

BallGraph::BallGraph(int radius, std::size_t max_vertices) : radius_(radius) {
  if (radius < 0) throw std::invalid_argument("BallGraph: negative radius");
  counts_.assign(radius + 1, 0);
  std::map<std::string, int> index;
  CfState id;
  verts_.push_back({id, 0});
  index[id.key()] = 0;
  counts_[0] = 1;
  for (std::size_t head = 0; head < verts_.size(); ++head) {
    // Copy, not reference: verts_ reallocates while we grow it.
    Vertex v = verts_[head];
    std::array<int, 4> out{-1, -1, -1, -1};
    if (v.dist < radius_) {
      for (int gi = 0; gi < 4; ++gi) {
        CfState next = step(v.state, kLetters[gi]);
        auto [it, inserted] =
            index.emplace(next.key(), static_cast<int>(verts_.size()));
        if (inserted) {
          if (verts_.size() >= max_vertices)
            throw std::runtime_error("BallGraph: vertex limit exceeded");
          verts_.push_back({next, v.dist + 1});
          counts_[v.dist + 1]++;
        }
        out[gi] = it->second;
      }
    } else {
      // Boundary layer: record only edges that stay inside the ball.
      for (int gi = 0; gi < 4; ++gi) {
        CfState next = step(v.state, kLetters[gi]);
        auto it = index.find(next.key());
        out[gi] = it == index.end() ? -1 : it->second;
      }
    }
    edges_.push_back(out);
  }
  // The boundary pass above can miss edges between two vertices discovered
  // after each other within the last layer; the find() handles that only if
  // both already exist.  Re-scan the last layer once so the edge set is
  // complete and independent of discovery order.
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    if (verts_[v].dist < radius_) continue;
    for (int gi = 0; gi < 4; ++gi) {
      if (edges_[v][gi] != -1) continue;
      auto it = index.find(step(verts_[v].state, kLetters[gi]).key());
      if (it != index.end()) edges_[v][gi] = it->second;
    }
  }
}

std::string BallGraph::to_dot() const {
  std::string s = "digraph cayley {\n";
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    s += "  n" + std::to_string(v) + " [label=\"" + verts_[v].state.key() +
         "\"];\n";
  }
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    for (int gi = 0; gi < 4; ++gi) {
      // Positive labels carry the structure; an inverse edge is the same
      // adjacency read backwards, so drawing it would only double every
      // arrow.
      if (!is_positive(kLetters[gi])) continue;
      int t = edges_[v][gi];
      if (t == -1) continue;
      s += "  n" + std::to_string(v) + " -> n" + std::to_string(t) +
           " [label=\"" + to_char(kLetters[gi]) + "\"];\n";
    }
  }
  s += "}\n";
  return s;
}

}  // namespace b3
