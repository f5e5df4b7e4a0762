#include "beztate/bezoutian.hpp"

#include <stdexcept>
#include <string>

namespace beztate {

namespace {

Polynomial substitute_prefix(const Polynomial& f, int last_y) {
  const int n = f.n();
  std::vector<int> var_map(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) var_map[static_cast<std::size_t>(i)] = i <= last_y ? n + 1 + i : i;
  return f.rename(2 * n + 1, var_map);
}

// Divides `num` by (z_xj - z_yj) in k[z_0..z_{2n+1}], treating it as a
// univariate polynomial in z_xj.
Polynomial divide_by_difference(const Polynomial& num, int xj, int yj) {
  const Field& k = num.field();
  const int vars_n = num.n();
  const auto xi = static_cast<std::size_t>(xj);
  std::map<int, Polynomial> by_power;
  int top = -1;
  for (const auto& [m, c] : num.terms()) {
    Monomial rest = m;
    const int e = rest.exponents[xi];
    rest.exponents[xi] = 0;
    auto [it, inserted] = by_power.try_emplace(e, k, vars_n);
    it->second.add_term(rest, c);
    top = std::max(top, e);
  }
  Polynomial quotient(k, vars_n);
  if (top < 0) return quotient;
  const Polynomial y = Polynomial::variable(k, vars_n, yj);
  auto coeff = [&](int e) { auto it = by_power.find(e); return it == by_power.end() ? Polynomial(k, vars_n) : it->second; };
  auto lift = [&](const Polynomial& p, int e) {
    Monomial xe{std::vector<int>(static_cast<std::size_t>(vars_n + 1), 0)};
    xe.exponents[xi] = e;
    return p * Polynomial::monomial(k, xe, k.one());
  };
  // q_{e-1} = c_e + y * q_e, descending from the top power.
  Polynomial q(k, vars_n);
  for (int e = top; e >= 1; --e) {
    q = coeff(e) + y * q;
    quotient = quotient + lift(q, e - 1);
  }
  const Polynomial remainder = coeff(0) + y * q;
  if (!remainder.is_zero()) throw std::logic_error("divided difference: inexact division");
  return quotient;
}

// Laplace expansion along the first row over the listed columns.
BiPolynomial determinant(const std::vector<std::vector<BiPolynomial>>& m, std::size_t row,
                         std::vector<std::size_t>& cols, const Field& k, int n) {
  if (cols.empty()) {
    BiPolynomial one(k, n);
    Monomial z{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
    one.add_term(z, z, k.one());
    return one;
  }
  BiPolynomial total(k, n);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const BiPolynomial& entry = m[row][cols[idx]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> minor_cols;
    minor_cols.reserve(cols.size() - 1);
    for (std::size_t r = 0; r < cols.size(); ++r)
      if (r != idx) minor_cols.push_back(cols[r]);
    BiPolynomial term = entry * determinant(m, row + 1, minor_cols, k, n);
    total = idx % 2 == 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace

BiPolynomial divided_difference(const Polynomial& f, int j) {
  const int n = f.n();
  if (j < 0 || j > n) throw std::invalid_argument("divided_difference: index " + std::to_string(j) + " out of range");
  const Polynomial numerator = substitute_prefix(f, j - 1) - substitute_prefix(f, j);
  return BiPolynomial(n, divide_by_difference(numerator, j, n + 1 + j));
}

BezoutData bezoutian(const std::vector<Polynomial>& forms, std::optional<int> degree) {
  if (forms.empty()) throw InvalidInput("bezoutian: no forms");
  const int n = forms.front().n();
  const Field k = forms.front().field();
  if (static_cast<int>(forms.size()) != n + 1)
    throw InvalidInput("bezoutian: need n+1 = " + std::to_string(n + 1) + " forms, got " + std::to_string(forms.size()));
  std::optional<int> d = degree;
  for (const auto& f : forms) {
    if (f.n() != n || !(f.field() == k)) throw InvalidInput("bezoutian: forms live in different rings");
    if (f.is_zero()) continue;
    auto fd = f.homogeneous_degree();
    if (!fd) throw InvalidInput("bezoutian: form is not homogeneous");
    if (d && *d != *fd) throw InvalidInput("bezoutian: forms have mixed degrees");
    d = fd;
  }
  if (!d) throw InvalidInput("bezoutian: degree undetermined (all forms zero)");
  if (*d < 1) throw InvalidInput("bezoutian: degree must be at least 1");

  std::vector<std::vector<BiPolynomial>> entries(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (int j = 0; j <= n; ++j) entries[i].push_back(divided_difference(forms[i], j));
  std::vector<std::size_t> cols(forms.size());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;

  BezoutData out;
  out.forms = forms;
  out.delta = determinant(entries, 0, cols, k, n);
  out.n = n;
  out.d = *d;
  out.rho = (n + 1) * (*d - 1);
  return out;
}

std::map<Monomial, Polynomial, GrlexDescending> bezout_coefficients(const BezoutData& b) {
  std::map<Monomial, Polynomial, GrlexDescending> out;
  const Field& k = b.delta.field();
  b.delta.for_each_term([&](const Monomial& x, const Monomial& y, const Scalar& c) {
    auto [it, inserted] = out.try_emplace(y, k, b.n);
    it->second.add_term(x, c);
  });
  return out;
}

ExactMatrix bezout_slice(const BezoutData& b, int a) {
  const int s = b.rho - a;
  if (a < 0 || s < 0) return ExactMatrix(b.delta.field(), graded_dim(b.n, s), graded_dim(b.n, a));
  return as_tensor(bigraded_component(b.delta, s, a), s, a);
}

}  // namespace beztate
