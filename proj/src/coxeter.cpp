#include "cbirk/coxeter.hpp"

#include <algorithm>
#include <deque>

#include "cbirk/errors.hpp"

namespace cbirk {

CoxeterElement::CoxeterElement(int n, Word word, std::vector<int> lower)
    : n_(n), word_(std::move(word)), lower_(std::move(lower)), barred_(n + 1, ' ') {
  std::sort(lower_.begin(), lower_.end());
  for (int d : lower_) barred_[d] = 'd';
  for (int i = 2; i <= n_; ++i)
    if (barred_[i] != 'd') {
      barred_[i] = 'u';
      upper_.push_back(i);
    }
}

CoxeterElement CoxeterElement::from_word(const Word& w) {
  const int n = w.rank();
  if (static_cast<int>(w.size()) != n)
    throw InvalidInput("Coxeter word must use each of 1.." + std::to_string(n) + " once");
  std::vector<int> pos(n + 1, -1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (pos[w[k]] != -1) throw InvalidInput("repeated letter in Coxeter word");
    pos[w[k]] = static_cast<int>(k);
  }
  std::vector<int> lower;
  for (int i = 2; i <= n; ++i)
    if (pos[i] > pos[i - 1]) lower.push_back(i);
  return CoxeterElement(n, w, std::move(lower));
}

CoxeterElement CoxeterElement::from_lower_set(int n, std::vector<int> lower) {
  if (n < 1) throw InvalidInput("rank must be at least 1");
  std::vector<bool> is_low(n + 1, false);
  for (int d : lower) {
    if (d < 2 || d > n) throw InvalidInput("lower-barred value outside [2,n]");
    is_low[d] = true;
  }
  // Lower-barred letters go after everything placed so far, upper ones before.
  std::deque<int> order{1};
  for (int i = 2; i <= n; ++i) {
    if (is_low[i])
      order.push_back(i);
    else
      order.push_front(i);
  }
  lower.clear();
  for (int i = 2; i <= n; ++i)
    if (is_low[i]) lower.push_back(i);
  return CoxeterElement(n, Word(n, {order.begin(), order.end()}), std::move(lower));
}

int CoxeterElement::upsilon_upper() const {
  return static_cast<int>(
      std::count_if(upper_.begin(), upper_.end(), [&](int u) { return 2 * u <= n_ + 1; }));
}

int CoxeterElement::upsilon_lower() const {
  return static_cast<int>(
      std::count_if(lower_.begin(), lower_.end(), [&](int d) { return 2 * d <= n_ + 1; }));
}

std::vector<int> CoxeterElement::cycle() const {
  std::vector<int> cyc{1};
  cyc.insert(cyc.end(), lower_.begin(), lower_.end());
  cyc.push_back(n_ + 1);
  cyc.insert(cyc.end(), upper_.rbegin(), upper_.rend());
  return cyc;
}

int nu(const CoxeterElement& c, int i) {
  const int n = c.rank();
  if (i < 1 || i > n + 1) throw InvalidInput("nu: argument outside [n+1]");
  if (i == 1) return 0;
  if (i == n + 1) return static_cast<int>(c.lower().size()) + 1;
  const auto& low = c.lower();
  if (c.is_lower(i))
    return static_cast<int>(std::lower_bound(low.begin(), low.end(), i) - low.begin()) + 1;
  const auto& up = c.upper();
  int j = static_cast<int>(std::lower_bound(up.begin(), up.end(), i) - up.begin()) + 1;
  return j <= c.upsilon_upper() ? -j : n + 1 - j;
}

Permutation sigma(const CoxeterElement& c) {
  std::vector<int> v{c.rank() + 1};
  v.insert(v.end(), c.lower().rbegin(), c.lower().rend());
  v.push_back(1);
  v.insert(v.end(), c.upper().begin(), c.upper().end());
  return Permutation(std::move(v));
}

int c_power(const CoxeterElement& c, int k, int x) {
  if (k < 0) throw InvalidInput("c_power: negative exponent");
  const auto cyc = c.cycle();
  const int len = static_cast<int>(cyc.size());
  auto it = std::find(cyc.begin(), cyc.end(), x);
  if (it == cyc.end()) throw InvalidInput("c_power: argument outside [n+1]");
  return cyc[(static_cast<int>(it - cyc.begin()) + k) % len];
}

CoxeterElement inverse_coxeter(const CoxeterElement& c) {
  std::vector<int> rev(c.word().begin(), c.word().end());
  std::reverse(rev.begin(), rev.end());
  return CoxeterElement::from_word(Word(c.rank(), std::move(rev)));
}

std::vector<CoxeterElement> all_coxeter_elements(int n) {
  if (n < 1) throw InvalidInput("rank must be at least 1");
  if (n > 30) throw GuardExceeded("too many Coxeter elements");
  std::vector<CoxeterElement> out;
  const unsigned count = 1u << (n - 1);
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> lower;
    for (int i = 2; i <= n; ++i)
      if (!(mask >> (i - 2) & 1u)) lower.push_back(i);
    out.push_back(CoxeterElement::from_lower_set(n, std::move(lower)));
  }
  return out;
}

CoxeterElement tamari(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return CoxeterElement::from_word(Word(n, std::move(w)));
}

CoxeterElement bipartite(int n) {
  std::vector<int> w;
  for (int i = 1; i <= n; i += 2) w.push_back(i);
  for (int i = 2; i <= n; i += 2) w.push_back(i);
  return CoxeterElement::from_word(Word(n, std::move(w)));
}

}  // namespace cbirk
