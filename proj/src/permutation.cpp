#include "cbirk/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cbirk/errors.hpp"

namespace cbirk {

namespace {

std::string join_letters(const std::vector<int>& v) {
  bool small = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!small && k > 0) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

}  // namespace

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw InvalidInput("rank must be at least 1");
  for (int a : letters_)
    if (a < 1 || a > n)
      throw InvalidInput("letter " + std::to_string(a) + " outside [1," +
                         std::to_string(n) + "]");
}

std::string Word::to_string() const { return join_letters(letters_); }

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int m = static_cast<int>(image_.size());
  if (m < 2) throw InvalidInput("permutation must move at least two points");
  where_.assign(m, 0);
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    int v = image_[i];
    if (v < 1 || v > m || seen[v - 1])
      throw InvalidInput("not a permutation of 1.." + std::to_string(m));
    seen[v - 1] = true;
    where_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = n + 1 - i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const { return Permutation(where_); }

Permutation Permutation::times_simple(int i) const {
  Permutation out = *this;
  std::swap(out.image_[i - 1], out.image_[i]);
  out.where_[out.image_[i - 1] - 1] = i;
  out.where_[out.image_[i] - 1] = i + 1;
  return out;
}

Permutation Permutation::simple_times(int q) const {
  Permutation out = *this;
  int a = where_[q - 1], b = where_[q];
  out.image_[a - 1] = q + 1;
  out.image_[b - 1] = q;
  std::swap(out.where_[q - 1], out.where_[q]);
  return out;
}

std::string Permutation::to_string() const { return join_letters(image_); }

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InvalidInput("bad letter '" + std::string(1, ch) + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw InvalidInput("bad list entry '" + std::string(tok) + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

Permutation word_to_perm(const Word& w) {
  std::vector<int> v(w.rank() + 1);
  std::iota(v.begin(), v.end(), 1);
  for (int a : w) std::swap(v[a - 1], v[a]);
  return Permutation(std::move(v));
}

int coxeter_length(const Permutation& w) {
  const auto& v = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

bool is_reduced(const Word& w) {
  return coxeter_length(word_to_perm(w)) == static_cast<int>(w.size());
}

IntMatrix permutation_matrix(const Permutation& w) {
  const std::size_t m = w.one_line().size();
  IntMatrix x(m, m);
  for (std::size_t i = 0; i < m; ++i) x(i, w.one_line()[i] - 1) = 1;
  return x;
}

Permutation reverse_perm(const Permutation& w) {
  std::vector<int> v = w.one_line();
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

std::vector<int> support(const Word& w) {
  if (!is_reduced(w)) throw InvalidInput("word " + w.to_string() + " is not reduced");
  std::vector<int> s(w.begin(), w.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool contains_pattern(const Permutation& w, std::string_view pattern,
                      const std::function<bool(int)>& middle) {
  if (pattern.size() != 3) throw InvalidInput("pattern must have length 3");
  const auto& v = w.one_line();
  const int m = static_cast<int>(v.size());
  // rank of each pattern slot: p[k] in {1,2,3}
  int p[3] = {pattern[0] - '0', pattern[1] - '0', pattern[2] - '0'};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        int t[3] = {v[i], v[j], v[k]};
        bool ok = true;
        for (int a = 0; a < 3 && ok; ++a)
          for (int b = 0; b < 3 && ok; ++b)
            if ((p[a] < p[b]) != (t[a] < t[b])) ok = false;
        if (!ok) continue;
        for (int a = 0; a < 3; ++a)
          if (p[a] == 2 && middle(t[a])) return true;
      }
  return false;
}

}  // namespace cbirk
