#include "cbirk/transfer.hpp"

#include <sstream>

#include "cbirk/errors.hpp"

namespace cbirk {

CoxeterData::CoxeterData(const CoxeterElement& elem, std::size_t guard)
    : c(elem), grid(heap_grid(elem)), proj(projection_indices(elem)) {
  if (proj.size() != static_cast<std::size_t>(grid.size()))
    throw TheoremViolation("projection length differs from heap size", "{}");
  for (OrderIdeal i : order_ideals(grid, guard))
    singletons.push_back({word_to_perm(subword(grid, i)), i});
}

std::vector<Permutation> prefix_singletons(const CoxeterElement& c) {
  Word r = diagonal_reading_word(c);
  std::vector<Permutation> out;
  std::vector<int> v(c.rank() + 1);
  for (int i = 0; i <= c.rank(); ++i) v[i] = i + 1;
  for (int a : r) {
    std::swap(v[a - 1], v[a]);
    out.emplace_back(v);
  }
  return out;
}

std::vector<Integer> o_vector(int length, OrderIdeal f) {
  std::vector<Integer> o(length, 0);
  for (int x = 1; x <= length; ++x)
    if (f.contains(x)) o[length - x] = 1;
  return o;
}

std::vector<Integer> o_vector(const CoxeterData& d, const Permutation& w) {
  return o_vector(d.length(), ideal_of_singleton(d.grid, d.c, w));
}

std::vector<Integer> projected(const CoxeterData& d, const Permutation& w) {
  return project(d.proj, permutation_matrix(w));
}

namespace {

// Columns Pi X(b_1), ..., Pi X(b_N).
IntMatrix prefix_projection_matrix(const CoxeterData& d) {
  const int N = d.length();
  IntMatrix m(N, N);
  auto prefixes = prefix_singletons(d.c);
  for (int i = 0; i < N; ++i) {
    auto v = projected(d, prefixes[i]);
    for (int r = 0; r < N; ++r) m(r, i) = v[r];
  }
  return m;
}

IntMatrix prefix_o_matrix(int N) {
  IntMatrix o(N, N);
  for (int i = 0; i < N; ++i)
    for (int r = N - 1 - i; r < N; ++r) o(r, i) = 1;
  return o;
}

}  // namespace

IntMatrix compute_U(const CoxeterData& d) {
  const int N = d.length();
  IntMatrix m = prefix_projection_matrix(d);
  // Column i must have its lowest-index nonzero entry, a 1, at row N-1-i.
  for (int i = 0; i < N; ++i) {
    for (int r = 0; r < N - 1 - i; ++r)
      if (m(r, i) != 0)
        throw TheoremViolation("prefix projections are not triangular",
                               "{\"column\":" + std::to_string(i + 1) + "}");
    if (m(N - 1 - i, i) != 1)
      throw TheoremViolation("prefix projection pivot is not 1",
                             "{\"column\":" + std::to_string(i + 1) + "}");
  }
  // L = M J is lower unitriangular: L(r, j) = M(r, N-1-j).
  auto L = [&](int r, int j) -> const Integer& { return m(r, N - 1 - j); };
  IntMatrix linv(N, N);
  for (int j = 0; j < N; ++j) {
    linv(j, j) = 1;
    for (int r = j + 1; r < N; ++r) {
      Integer s = 0;
      for (int k = j; k < r; ++k)
        if (L(r, k) != 0) s += L(r, k) * linv(k, j);
      linv(r, j) = -s;
    }
  }
  // T = O J has ones on and below the diagonal, so (T Linv)(r, j) sums rows j..r.
  IntMatrix u(N, N);
  for (int j = 0; j < N; ++j) {
    Integer s = 0;
    for (int r = 0; r < N; ++r) {
      s += linv(r, j);
      u(r, j) = s;
    }
  }
  if (u * m != prefix_o_matrix(N))
    throw TheoremViolation("U M differs from the prefix o-vectors", "{}");
  return u;
}

IntMatrix compute_U(const CoxeterElement& c) { return compute_U(CoxeterData(c)); }

IntMatrix compute_U_by_inverse(const CoxeterData& d) {
  const int N = d.length();
  RatMatrix u = to_rational(prefix_o_matrix(N)) * inverse(to_rational(prefix_projection_matrix(d)));
  IntMatrix out(N, N);
  for (int r = 0; r < N; ++r)
    for (int j = 0; j < N; ++j) {
      if (u(r, j).get_den() != 1) throw TheoremViolation("U is not integral", "{}");
      out(r, j) = u(r, j).get_num();
    }
  return out;
}

TransferCertificate verify_main_theorem(const CoxeterData& d) {
  TransferCertificate cert(d.c);
  cert.N = d.length();
  cert.singletons = d.singletons.size();
  cert.volume = count_linear_extensions(d.grid);
  cert.U = compute_U(d);
  cert.vertex_map_ok = cert.bijection_ok = cert.round_trip_ok = true;
  for (const Singleton& s : d.singletons) {
    IntMatrix x = permutation_matrix(s.perm);
    auto v = project(d.proj, x);
    auto image = cert.U * std::span<const Integer>(v);
    if (image != o_vector(cert.N, s.ideal)) {
      cert.vertex_map_ok = false;
      if (cert.failure.empty()) cert.failure = "U Pi X(" + s.perm.to_string() + ") != o";
    }
    bool same = false;
    try {
      same = ideal_of_singleton(d.grid, d.c, s.perm) == s.ideal;
    } catch (const NotSingleton&) {
    }
    if (!same) {
      cert.bijection_ok = false;
      if (cert.failure.empty()) cert.failure = "f(" + s.perm.to_string() + ") mismatch";
    }
    std::vector<Rational> vq(v.begin(), v.end());
    bool back = false;
    try {
      back = reconstruct(d.c, d.proj, vq) == to_rational(x);
    } catch (const InconsistentProjection&) {
    }
    if (!back) {
      cert.round_trip_ok = false;
      if (cert.failure.empty()) cert.failure = "reconstruct(" + s.perm.to_string() + ") failed";
    }
  }
  cert.ok = cert.vertex_map_ok && cert.bijection_ok && cert.round_trip_ok;
  return cert;
}

TransferCertificate verify_main_theorem(const CoxeterElement& c, std::size_t guard) {
  return verify_main_theorem(CoxeterData(c, guard));
}

namespace {

std::string first_difference(const IntMatrix& a, const IntMatrix& b, bool skip_diagonal) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (skip_diagonal && i == j) continue;
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "(" << i + 1 << "," << j + 1 << "): " << a(i, j) << " vs " << b(i, j);
        return os.str();
      }
    }
  return {};
}

}  // namespace

IdentityCheck verify_a_sequence_identity(const CoxeterData& d, const Permutation& w) {
  IdentityCheck out;
  const int N = d.length();
  const auto prefixes = prefix_singletons(d.c);
  OrderIdeal f = ideal_of_singleton(d.grid, d.c, w);
  out.contains_first = f.contains(1);
  Permutation target = w;
  if (!out.contains_first) target = w.times_simple(d.grid.label(1));
  OrderIdeal ft = ideal_of_singleton(d.grid, d.c, target);
  out.sequence = a_sequence(ft);

  const auto& a = out.sequence;
  IntMatrix x = permutation_matrix(prefixes[a[0] - 1]);
  std::vector<Integer> o(N, 0);
  for (int k = 0; k < a[0]; ++k) o[N - 1 - k] = 1;
  auto add = [&](int idx, int sign) {
    IntMatrix p = permutation_matrix(prefixes[idx - 1]);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) += sign * p(i, j);
    for (int k = 0; k < idx; ++k) o[N - 1 - k] += sign;
  };
  for (std::size_t k = 1; k + 1 < a.size(); k += 2) {
    add(a[k], -1);
    add(a[k + 1], +1);
  }
  if (!out.contains_first) add(1, -1);

  const IntMatrix xw = permutation_matrix(w);
  out.diff = first_difference(xw, x, !out.contains_first);
  if (o != o_vector(N, f) && out.diff.empty()) out.diff = "o-vector identity fails";
  if (!out.contains_first && out.diff.empty()) {
    IntMatrix id = IntMatrix::identity(xw.rows());
    IntMatrix s = permutation_matrix(prefixes[0]);
    IntMatrix xt = permutation_matrix(target);
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) += xw(i, j) - xt(i, j);
    out.diff = first_difference(s, id, false);
  }
  out.ok = out.diff.empty();
  return out;
}

}  // namespace cbirk
