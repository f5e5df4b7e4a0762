#pragma once

// Shared fixtures and independent oracles.  Nothing here calls the
// library's elimination, wedge or Koszul code; the oracles rebuild what
// they need from polynomial coefficients and plain Gaussian elimination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "beztate/bezoutian.hpp"
#include "beztate/field.hpp"
#include "beztate/matrix.hpp"
#include "beztate/poly.hpp"

namespace testing_support {

using namespace beztate;

inline Polynomial mono(const Field& k, std::vector<int> e, long long c = 1) {
  return Polynomial::monomial(k, Monomial{std::move(e)}, k.from_int(c));
}

inline Polynomial power(const Field& k, int n, int i, int e) {
  std::vector<int> exps(static_cast<std::size_t>(n + 1), 0);
  exps[static_cast<std::size_t>(i)] = e;
  return mono(k, exps);
}

inline std::vector<Polynomial> power_forms(const Field& k, int n, int d) {
  std::vector<Polynomial> out;
  for (int i = 0; i <= n; ++i) out.push_back(power(k, n, i, d));
  return out;
}

/// All exponent vectors of n+1 variables and total degree m, any order.
inline std::vector<std::vector<int>> exponents_of_degree(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, m);
  return out;
}

inline Scalar random_scalar(const Field& k, std::mt19937_64& rng) {
  if (k.is_prime_field()) return k.from_residue(rng() % k.modulus());
  return k.from_int(static_cast<long long>(rng() % 19) - 9);
}

/// Dense random form of degree d (every monomial gets a random coefficient).
inline Polynomial random_form(const Field& k, int n, int d, std::mt19937_64& rng) {
  Polynomial f(k, n);
  for (const auto& e : exponents_of_degree(n, d)) f.add_term(Monomial{e}, random_scalar(k, rng));
  return f;
}

/// Sparse random form: each monomial is present with probability 1/2.
inline Polynomial sparse_random_form(const Field& k, int n, int d, std::mt19937_64& rng) {
  Polynomial f(k, n);
  for (const auto& e : exponents_of_degree(n, d))
    if (rng() % 2) f.add_term(Monomial{e}, random_scalar(k, rng));
  return f;
}

inline std::vector<Polynomial> random_forms(const Field& k, int n, int d, int count, std::mt19937_64& rng) {
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(random_form(k, n, d, rng));
  return out;
}

inline ExactMatrix random_matrix(const Field& k, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                 unsigned density_percent = 60) {
  ExactMatrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 100 < density_percent) m.set(r, c, random_scalar(k, rng));
  return m;
}

// ---------------------------------------------------------------------------
// Oracles

using Dense = std::vector<std::vector<Scalar>>;

inline Dense to_dense(const ExactMatrix& m) {
  Dense out(m.rows(), std::vector<Scalar>(m.cols(), m.field().zero()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[r][c] = v;
  return out;
}

/// Textbook row reduction on a dense copy.
inline std::size_t oracle_rank(const Field& k, Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Scalar inv = k.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const Scalar factor = k.mul(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[r][j] = k.sub(a[r][j], k.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

inline std::size_t oracle_rank(const ExactMatrix& m) { return oracle_rank(m.field(), to_dense(m)); }

/// Coefficient of x^e in f, looked up term by term.
inline Scalar coefficient_of(const Polynomial& f, const std::vector<int>& e) {
  for (const auto& [m, c] : f.terms())
    if (m.exponents == e) return c;
  return f.field().zero();
}

inline Polynomial times_monomial(const Polynomial& f, const std::vector<int>& e) {
  Polynomial out(f.field(), f.n());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> x = m.exponents;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += e[i];
    out.add_term(Monomial{x}, c);
  }
  return out;
}

/// Koszul differential K_i -> K_{i-1} in degree b, rebuilt from subsets as
/// bitmasks; sign (-1)^(position of the removed index).
inline Dense oracle_koszul(const std::vector<Polynomial>& forms, int n, int d, int i, int b) {
  const Field& k = forms.front().field();
  const int m1 = static_cast<int>(forms.size());
  auto subsets = [&](int size) {
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << m1); ++mask)
      if (__builtin_popcount(mask) == size) out.push_back(mask);
    // Lexicographic on the sorted index lists: compare lowest differing bit.
    std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
      const unsigned diff = a ^ b;
      return diff != 0 && (a & diff & (~diff + 1u)) != 0;
    });
    return out;
  };
  const auto dom_sets = subsets(i);
  const auto cod_sets = subsets(i - 1);
  const auto dom_mons = exponents_of_degree(n, b - i * d);
  const auto cod_mons = exponents_of_degree(n, b - (i - 1) * d);
  Dense out(cod_sets.size() * cod_mons.size(), std::vector<Scalar>(dom_sets.size() * dom_mons.size(), k.zero()));
  if (i <= 0) return out;
  for (std::size_t ds = 0; ds < dom_sets.size(); ++ds) {
    int position = 0;
    for (int j = 0; j < m1; ++j) {
      if (!(dom_sets[ds] >> j & 1u)) continue;
      const unsigned rest = dom_sets[ds] & ~(1u << j);
      std::size_t cs = 0;
      while (cod_sets[cs] != rest) ++cs;
      for (std::size_t dm = 0; dm < dom_mons.size(); ++dm) {
        const Polynomial prod = times_monomial(forms[static_cast<std::size_t>(j)], dom_mons[dm]);
        for (std::size_t cm = 0; cm < cod_mons.size(); ++cm) {
          Scalar v = coefficient_of(prod, cod_mons[cm]);
          if (position % 2) v = k.neg(v);
          out[cs * cod_mons.size() + cm][ds * dom_mons.size() + dm] = v;
        }
      }
      ++position;
    }
  }
  return out;
}

inline std::size_t oracle_homology(const std::vector<Polynomial>& forms, int n, int d, int i, int b) {
  const Field& k = forms.front().field();
  const int m1 = static_cast<int>(forms.size());
  if (i < 0 || i > m1) return 0;
  std::size_t subsets = 1;
  for (int j = 0; j < i; ++j) subsets = subsets * static_cast<std::size_t>(m1 - j) / static_cast<std::size_t>(j + 1);
  const std::size_t dim = subsets * exponents_of_degree(n, b - i * d).size();
  if (dim == 0) return 0;
  const std::size_t out_rank = i == 0 ? 0 : oracle_rank(k, oracle_koszul(forms, n, d, i, b));
  const std::size_t in_rank = i == m1 ? 0 : oracle_rank(k, oracle_koszul(forms, n, d, i + 1, b));
  return dim - out_rank - in_rank;
}

/// Coefficients of (1 + t + ... + t^{d-1})^{n+1}.
inline std::vector<long long> complete_intersection_hilbert(int n, int d) {
  std::vector<long long> h{1};
  for (int f = 0; f <= n; ++f) {
    std::vector<long long> next(h.size() + static_cast<std::size_t>(d - 1), 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += h[i];
    h = next;
  }
  return h;
}

}  // namespace testing_support

namespace testing_support {

/// sum over 0 <= beta <= (d-1, ..., d-1) of x^beta y^{(d-1) - beta}.
inline BiPolynomial power_bezoutian_closed_form(const Field& k, int n, int d) {
  BiPolynomial out(k, n);
  for (int total = 0; total <= (n + 1) * (d - 1); ++total)
    for (const auto& beta : exponents_of_degree(n, total)) {
      if (*std::max_element(beta.begin(), beta.end()) > d - 1) continue;
      std::vector<int> rest = beta;
      for (auto& e : rest) e = d - 1 - e;
      out.add_term(Monomial{beta}, Monomial{rest}, k.one());
    }
  return out;
}

/// Divided difference of a single monomial x^e at j:
/// y^{e_<j} x^{e_>j} sum_k x_j^k y_j^{e_j - 1 - k}, extended linearly.
inline BiPolynomial closed_form_divided_difference(const Polynomial& f, int j) {
  const Field& k = f.field();
  const int n = f.n();
  BiPolynomial out(k, n);
  for (const auto& [m, c] : f.terms()) {
    const int ej = m.exponents[static_cast<std::size_t>(j)];
    for (int p = 0; p < ej; ++p) {
      std::vector<int> x(static_cast<std::size_t>(n + 1), 0), y(static_cast<std::size_t>(n + 1), 0);
      for (int v = 0; v < j; ++v) y[static_cast<std::size_t>(v)] = m.exponents[static_cast<std::size_t>(v)];
      for (int v = j + 1; v <= n; ++v) x[static_cast<std::size_t>(v)] = m.exponents[static_cast<std::size_t>(v)];
      x[static_cast<std::size_t>(j)] = p;
      y[static_cast<std::size_t>(j)] = ej - 1 - p;
      out.add_term(Monomial{x}, Monomial{y}, c);
    }
  }
  return out;
}

inline BiPolynomial in_x(const Polynomial& f) {
  return BiPolynomial::from_parts(f, Polynomial::constant(f.field(), f.n(), f.field().one()));
}

inline BiPolynomial in_y(const Polynomial& f) {
  return BiPolynomial::from_parts(Polynomial::constant(f.field(), f.n(), f.field().one()), f);
}

inline BiPolynomial scaled(const BiPolynomial& f, const Scalar& s) {
  return BiPolynomial(f.n(), f.as_polynomial().scaled(s));
}

}  // namespace testing_support
