#include "fingerprint.hpp"

#include <cassert>
#include <deque>

namespace b3 {

Mat2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::a: return {1, 1, 0, 1};
    case Letter::A: return {1, -1, 0, 1};
    case Letter::b: return {1, 0, -1, 1};
    case Letter::B: return {1, 0, 1, 1};
  }
  throw std::logic_error("letter_matrix: bad letter");
}

namespace {

// One-time sanity check that the defining relation holds in the matrix
// image, i.e. that the letter matrices were not fat-fingered.
bool relator_ok() {
  Mat2 aba = letter_matrix(Letter::a) * letter_matrix(Letter::b) *
             letter_matrix(Letter::a);
  Mat2 bab = letter_matrix(Letter::b) * letter_matrix(Letter::a) *
             letter_matrix(Letter::b);
  Mat2 ab_inv = letter_matrix(Letter::a) * letter_matrix(Letter::A);
  return aba == bab && ab_inv == Mat2{};
}

}  // namespace

Fingerprint fingerprint(const Word& w) {
  static const bool ok = relator_ok();
  assert(ok);
  (void)ok;
  Fingerprint f;
  for (Letter l : w) {
    f.mat = f.mat * letter_matrix(l);
    f.exp_sum += sign_of(l);
  }
  return f;
}

std::string Fingerprint::key() const {
  std::string s = mat.m00.str();
  s += ',';
  s += mat.m01.str();
  s += ',';
  s += mat.m10.str();
  s += ',';
  s += mat.m11.str();
  s += ',';
  s += std::to_string(exp_sum);
  return s;
}

bool same_element(const Word& u, const Word& w) {
  return fingerprint(u) == fingerprint(w);
}

bool is_identity_element(const Word& w) {
  return fingerprint(w) == Fingerprint{};
}

DistanceTable::DistanceTable(int radius, std::size_t max_elements)
    : radius_(radius), counts_(radius + 1, 0) {
  if (radius < 0) throw std::invalid_argument("DistanceTable: radius < 0");
  struct Node {
    Fingerprint fp;
    int d;
  };
  std::deque<Node> queue;
  Fingerprint id;
  dist_[id.key()] = 0;
  counts_[0] = 1;
  queue.push_back({id, 0});
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (n.d == radius_) continue;
    for (Letter l : kLetters) {
      Fingerprint next{n.fp.mat * letter_matrix(l), n.fp.exp_sum + sign_of(l)};
      auto [it, inserted] = dist_.emplace(next.key(), n.d + 1);
      if (inserted) {
        if (dist_.size() > max_elements)
          throw std::runtime_error("DistanceTable: element limit exceeded");
        counts_[n.d + 1]++;
        queue.push_back({std::move(next), n.d + 1});
      }
    }
  }
}

int DistanceTable::distance(const Word& w) const {
  auto it = dist_.find(fingerprint(w).key());
  if (it == dist_.end())
    throw OutOfRadius("element outside the explored ball of radius " +
                      std::to_string(radius_));
  return it->second;
}

}  // namespace b3
