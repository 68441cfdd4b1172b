#include "cbirk/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "cbirk/errors.hpp"

namespace cbirk {

OrderPolytope order_polytope(const Heap& h, std::size_t guard) {
  OrderPolytope p{h.size(), {}};
  for (OrderIdeal i : order_ideals(h, guard)) {
    std::vector<int> v(h.size(), 0);
    for (int x = 1; x <= h.size(); ++x) v[x - 1] = i.contains(x) ? 1 : 0;
    p.vertices.push_back(std::move(v));
  }
  return p;
}

bool membership(const Heap& h, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != h.size()) throw InvalidInput("point has wrong dimension");
  for (const auto& q : x)
    if (q < 0 || q > 1) return false;
  for (auto [a, b] : h.covers())
    if (x[b - 1] > x[a - 1]) return false;
  return true;
}

Integer normalized_volume(const Heap& h, std::size_t guard) {
  return count_linear_extensions(h, guard);
}

int affine_dimension(const VertexCloud& cloud) {
  if (cloud.points.empty()) throw InvalidInput("affine dimension of an empty cloud");
  const auto& base = cloud.points.front();
  IntMatrix diffs(cloud.points.size() - 1, cloud.ambient);
  for (std::size_t k = 1; k < cloud.points.size(); ++k) {
    if (static_cast<int>(cloud.points[k].size()) != cloud.ambient)
      throw InvalidInput("cloud point has wrong dimension");
    for (int j = 0; j < cloud.ambient; ++j) diffs(k - 1, j) = cloud.points[k][j] - base[j];
  }
  return static_cast<int>(rank(std::move(diffs)));
}

VertexCloud matrix_cloud(const std::vector<Permutation>& perms) {
  VertexCloud cloud;
  if (perms.empty()) return cloud;
  const int m = perms.front().rank() + 1;
  cloud.ambient = m * m;
  for (const auto& w : perms) {
    std::vector<Integer> pt(m * m, 0);
    for (int i = 1; i <= m; ++i) pt[(i - 1) * m + (w(i) - 1)] = 1;
    cloud.points.push_back(std::move(pt));
  }
  return cloud;
}

std::string to_string(Q81Verdict v) {
  return v == Q81Verdict::possible_equivalent ? "possible-equivalent" : "counterexample";
}

Q81Report question81_probe(const Word& u, std::size_t guard) {
  Heap h = heap_of_word(u);
  Q81Report rep;
  rep.word = u;
  rep.length = h.size();
  for (OrderIdeal i : order_ideals(h, guard)) rep.permutations.push_back(word_to_perm(subword(h, i)));
  rep.ideals = rep.permutations.size();
  std::vector<Permutation> distinct = rep.permutations;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  rep.distinct_matrices = distinct.size();
  rep.cloud_dimension = affine_dimension(matrix_cloud(distinct));
  rep.verdict = rep.distinct_matrices == rep.ideals && rep.cloud_dimension == rep.length
                    ? Q81Verdict::possible_equivalent
                    : Q81Verdict::counterexample;
  return rep;
}

std::vector<Word> reduced_words(const Permutation& w, std::size_t cap) {
  const int n = w.rank();
  // Seed: bubble sort from the right gives one reduced word.
  std::vector<int> seed;
  Permutation cur = w;
  while (true) {
    int i = 1;
    while (i <= n && cur(i) < cur(i + 1)) ++i;
    if (i > n) break;
    seed.push_back(i);
    cur = cur.times_simple(i);
  }
  std::reverse(seed.begin(), seed.end());
  std::set<std::vector<int>> seen{seed};
  std::vector<std::vector<int>> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      auto visit = [&](std::vector<int> u) {
        if (seen.insert(u).second) {
          if (seen.size() > cap) throw GuardExceeded("reduced word count exceeds cap");
          next.push_back(std::move(u));
        }
      };
      for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (std::abs(v[k] - v[k + 1]) > 1) {
          auto u = v;
          std::swap(u[k], u[k + 1]);
          visit(std::move(u));
        }
        if (k + 2 < v.size() && v[k] == v[k + 2] && std::abs(v[k] - v[k + 1]) == 1) {
          auto u = v;
          u[k] = u[k + 2] = v[k + 1];
          u[k + 1] = v[k];
          visit(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& v : seen) out.emplace_back(n, v);
  return out;
}

}  // namespace cbirk
