#pragma once

// Incremental multiplication in the three-strand braid group.  Elements are
// kept as a pair (u, k): a freely reduced prefix u whose syllable exponents
// are all even except possibly the last, times the k-th power of the half
// twist aba.  Each pair is the unique such representative of its element,
// so the pairs double as vertex names for the Cayley graph, and appending
// one generator is a constant-size local rewrite of the pair.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "word.hpp"

namespace b3 {

struct CfState {
  Word u;      // freely reduced, almost-even prefix
  int k = 0;   // power of the half twist

  friend bool operator==(const CfState&, const CfState&) = default;

  // "prefix|k" with the prefix run-compressed; the identity is the empty
  // prefix, printed as epsilon.
  std::string key() const;
};

// Right-multiply the element of s by one generator and re-canonicalize.
CfState step(const CfState& s, Letter g);

// Fold a whole word, starting from the identity.
CfState fold(const Word& w);

// The literal word u (aba)^k; not necessarily freely reduced at the seam.
Word realize(const CfState& s);

// ---- balls in the Cayley graph -------------------------------------------

// Breadth-first ball of the given radius around the identity.  Vertices are
// numbered in discovery order with generators tried in the fixed order
// a, A, b, B, so the layout is reproducible run to run.
class BallGraph {
 public:
  explicit BallGraph(int radius, std::size_t max_vertices = 5000000);

  int radius() const { return radius_; }
  std::size_t vertex_count() const { return verts_.size(); }

  const CfState& state(int v) const { return verts_[v].state; }
  int distance(int v) const { return verts_[v].dist; }

  // Neighbor along each generator, -1 when it leaves the ball.
  const std::array<int, 4>& out_edges(int v) const { return edges_[v]; }

  // Elements at each distance 0..radius.
  const std::vector<std::uint64_t>& layer_counts() const { return counts_; }

  // Graphviz rendering with one node per element, named by its state key,
  // and one arrow per positive generator application; inverse edges are
  // the same adjacencies read backwards and are left out.
  std::string to_dot() const;

 private:
  struct Vertex {
    CfState state;
    int dist;
  };
  int radius_;
  std::vector<Vertex> verts_;
  std::vector<std::array<int, 4>> edges_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace b3
