#include "cbirk/heap.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cbirk/errors.hpp"

namespace cbirk {

Heap::Heap(const Word& w, std::optional<std::vector<Coord>> coords)
    : word_(w), coords_(std::move(coords)) {
  const int len = static_cast<int>(w.size());
  if (len > 64) throw GuardExceeded("heap larger than 64 elements");
  if (coords_ && static_cast<int>(coords_->size()) != len)
    throw InvalidInput("coordinate list length mismatch");
  below_.assign(len, 0);
  for (int y = 0; y < len; ++y)
    for (int x = 0; x < y; ++x) {
      int d = w[x] - w[y];
      if (d >= -1 && d <= 1) below_[y] |= below_[x] | (std::uint64_t{1} << x);
    }
}

std::vector<std::pair<int, int>> Heap::covers() const {
  std::vector<std::pair<int, int>> out;
  const int len = size();
  for (int y = 1; y <= len; ++y)
    for (int x = 1; x < y; ++x) {
      if (!less(x, y)) continue;
      bool direct = true;
      for (int z = x + 1; z < y && direct; ++z)
        if (less(x, z) && less(z, y)) direct = false;
      if (direct) out.emplace_back(x, y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> OrderIdeal::members() const {
  std::vector<int> out;
  for (int x = 1; x <= 64; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

OrderIdeal OrderIdeal::from_members(const std::vector<int>& xs) {
  OrderIdeal i;
  for (int x : xs) {
    if (x < 1 || x > 64) throw InvalidInput("ideal member out of range");
    i.bits |= std::uint64_t{1} << (x - 1);
  }
  return i;
}

Heap heap_of_word(const Word& w) {
  if (w.size() > 64) throw GuardExceeded("word longer than 64 letters");
  if (!is_reduced(w)) throw InvalidInput("word " + w.to_string() + " is not reduced");
  return Heap(w);
}

bool is_order_ideal(const Heap& h, OrderIdeal i) {
  const int len = h.size();
  if (len < 64 && (i.bits >> len) != 0) return false;
  for (int y = 1; y <= len; ++y)
    if (i.contains(y) && (h.below(y) & ~i.bits) != 0) return false;
  return true;
}

Word subword(const Heap& h, OrderIdeal i) {
  std::vector<int> letters;
  for (int x = 1; x <= h.size(); ++x)
    if (i.contains(x)) letters.push_back(h.label(x));
  return Word(h.rank(), std::move(letters));
}

namespace {

// Level-by-level sweep of J(H): level k holds the ideals of size k.
template <class Visit>
void walk_levels(const Heap& h, std::size_t guard, Visit&& visit) {
  std::vector<std::uint64_t> level{0};
  std::size_t seen = 1;
  const int len = h.size();
  for (int k = 0; k <= len; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t bits : level) {
      for (int x = 1; x <= len; ++x) {
        std::uint64_t bit = std::uint64_t{1} << (x - 1);
        if ((bits & bit) || (h.below(x) & ~bits)) continue;
        visit(bits, bits | bit);
        next.push_back(bits | bit);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    seen += next.size();
    if (seen > guard) throw GuardExceeded("more than " + std::to_string(guard) + " order ideals");
    level = std::move(next);
    if (level.empty()) break;
  }
}

}  // namespace

std::vector<OrderIdeal> order_ideals(const Heap& h, std::size_t guard) {
  std::vector<OrderIdeal> out{OrderIdeal{0}};
  walk_levels(h, guard, [&](std::uint64_t, std::uint64_t to) { out.push_back({to}); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer count_linear_extensions(const Heap& h, std::size_t guard) {
  std::unordered_map<std::uint64_t, Integer> paths;
  paths[0] = 1;
  walk_levels(h, guard, [&](std::uint64_t from, std::uint64_t to) { paths[to] += paths[from]; });
  const int len = h.size();
  std::uint64_t full = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
  return paths[full];
}

std::vector<Word> labeled_linear_extensions(const Heap& h, int guard) {
  if (h.size() > guard)
    throw GuardExceeded("linear extension listing limited to " + std::to_string(guard) +
                        " elements");
  std::set<std::vector<int>> words;
  std::vector<int> current;
  const int len = h.size();
  auto rec = [&](auto&& self, std::uint64_t bits) -> void {
    if (static_cast<int>(current.size()) == len) {
      words.insert(current);
      return;
    }
    for (int x = 1; x <= len; ++x) {
      std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if ((bits & bit) || (h.below(x) & ~bits)) continue;
      current.push_back(h.label(x));
      self(self, bits | bit);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<Word> out;
  for (const auto& w : words) out.emplace_back(h.rank(), w);
  return out;
}

std::vector<Word> commutation_class(const Word& w, std::size_t cap) {
  std::set<std::vector<int>> seen{w.letters()};
  std::vector<std::vector<int>> frontier{w.letters()};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        int d = v[k] - v[k + 1];
        if (d >= -1 && d <= 1) continue;
        auto u = v;
        std::swap(u[k], u[k + 1]);
        if (seen.insert(u).second) {
          if (seen.size() > cap) throw GuardExceeded("commutation class exceeds cap");
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& v : seen) out.emplace_back(w.rank(), v);
  return out;
}

Word canonical_word(const Word& w) {
  // Greedy: repeatedly take the smallest letter among the heap's minimal elements.
  Heap h(w);
  std::vector<int> out;
  std::uint64_t bits = 0;
  const int len = h.size();
  for (int step = 0; step < len; ++step) {
    int best = -1;
    for (int x = 1; x <= len; ++x) {
      std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if ((bits & bit) || (h.below(x) & ~bits)) continue;
      if (best == -1 || h.label(x) < h.label(best)) best = x;
    }
    bits |= std::uint64_t{1} << (best - 1);
    out.push_back(h.label(best));
  }
  return Word(w.rank(), std::move(out));
}

namespace {

std::vector<std::pair<int, int>> occurrence_keys(const Heap& h) {
  std::vector<int> count(h.rank() + 1, 0);
  std::vector<std::pair<int, int>> keys;
  for (int x = 1; x <= h.size(); ++x) keys.emplace_back(h.label(x), count[h.label(x)]++);
  return keys;
}

}  // namespace

bool same_labeled_poset(const Heap& a, const Heap& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  auto ka = occurrence_keys(a), kb = occurrence_keys(b);
  std::vector<int> map_to_b(a.size() + 1, 0);
  for (int x = 1; x <= a.size(); ++x) {
    auto it = std::find(kb.begin(), kb.end(), ka[x - 1]);
    if (it == kb.end()) return false;
    map_to_b[x] = static_cast<int>(it - kb.begin()) + 1;
  }
  for (int x = 1; x <= a.size(); ++x)
    for (int y = 1; y <= a.size(); ++y)
      if (a.less(x, y) != b.less(map_to_b[x], map_to_b[y])) return false;
  return true;
}

OrderIdeal occurrence_prefix(const Heap& h, const Word& w) {
  std::vector<int> want(h.rank() + 1, 0);
  for (int a : w) {
    if (a > h.rank()) throw InvalidInput("letter outside heap rank");
    ++want[a];
  }
  OrderIdeal i;
  for (int x = 1; x <= h.size(); ++x) {
    int a = h.label(x);
    if (want[a] > 0) {
      --want[a];
      i.bits |= std::uint64_t{1} << (x - 1);
    }
  }
  for (int a = 1; a <= h.rank(); ++a)
    if (want[a] > 0) throw NotSingleton("too many occurrences of letter " + std::to_string(a));
  return i;
}

}  // namespace cbirk
