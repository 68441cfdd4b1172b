// Coxeter elements of A_n and their barred-number data.
#pragma once

#include <string>
#include <vector>

#include "cbirk/permutation.hpp"

namespace cbirk {

/// A product of all simple generators, each once. Two words describe the same
/// element exactly when they induce the same lower/upper partition of [2,n].
class CoxeterElement {
 public:
  /// Throws InvalidInput unless `w` uses each of 1..n exactly once.
  static CoxeterElement from_word(const Word& w);
  /// Element whose lower-barred set is `lower`; the rest of [2,n] is upper.
  static CoxeterElement from_lower_set(int n, std::vector<int> lower);

  int rank() const { return n_; }
  const Word& word() const { return word_; }
  /// Ascending d_1 < ... < d_r.
  const std::vector<int>& lower() const { return lower_; }
  /// Ascending u_1 < ... < u_s.
  const std::vector<int>& upper() const { return upper_; }
  bool is_lower(int i) const { return i >= 2 && i <= n_ && barred_[i] == 'd'; }
  bool is_upper(int i) const { return i >= 2 && i <= n_ && barred_[i] == 'u'; }

  /// Number of upper-barred values in [2,(n+1)/2].
  int upsilon_upper() const;
  /// Number of lower-barred values in [2,(n+1)/2].
  int upsilon_lower() const;

  /// (1 d_1 ... d_r (n+1) u_s ... u_1) as a list.
  std::vector<int> cycle() const;
  Permutation as_permutation() const { return word_to_perm(word_); }

  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.n_ == b.n_ && a.lower_ == b.lower_;
  }

 private:
  CoxeterElement(int n, Word word, std::vector<int> lower);

  int n_ = 0;
  Word word_;
  std::vector<int> lower_, upper_;
  std::string barred_;  // barred_[i] in {'d','u'} for i in [2,n]
};

/// Label of i in [n+1] used by the top-sum relations.
int nu(const CoxeterElement& c, int i);
/// sigma_c = (n+1) d_r ... d_1 1 u_1 ... u_s.
Permutation sigma(const CoxeterElement& c);
/// c^k(x) for k >= 0.
int c_power(const CoxeterElement& c, int k, int x);
CoxeterElement inverse_coxeter(const CoxeterElement& c);
/// All 2^{n-1} elements, indexed by the upper-barred subset as a bitmask.
std::vector<CoxeterElement> all_coxeter_elements(int n);
/// c = s_1 s_2 ... s_n.
CoxeterElement tamari(int n);
/// Odd letters first, then even letters.
CoxeterElement bipartite(int n);

}  // namespace cbirk
