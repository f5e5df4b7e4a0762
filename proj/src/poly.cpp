#include "beztate/poly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace beztate {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial product: variable count mismatch");
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(Field field, int n, const Scalar& c) {
  Polynomial p(field, n);
  p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n + 1), 0)}, c);
  return p;
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, static_cast<int>(m.num_vars()) - 1);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(Field field, int n, int i) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  m.exponents.at(static_cast<std::size_t>(i)) = 1;
  return monomial(field, m, field.one());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != num_vars())
    throw std::invalid_argument("monomial has " + std::to_string(m.num_vars()) + " variables, ring has " +
                                std::to_string(num_vars()));
  for (int e : m.exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

int Polynomial::max_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial out(field_, n_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_.mul(c, s));
  return out;
}

Polynomial Polynomial::rename(int new_n, const std::vector<int>& var_map) const {
  if (var_map.size() != num_vars()) throw std::invalid_argument("rename: map size mismatch");
  Polynomial out(field_, new_n);
  for (const auto& [m, c] : terms_) {
    Monomial r{std::vector<int>(static_cast<std::size_t>(new_n + 1), 0)};
    for (std::size_t i = 0; i < var_map.size(); ++i) r.exponents.at(static_cast<std::size_t>(var_map[i])) += m.exponents[i];
    out.add_term(r, c);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial sum: ring mismatch");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b.scaled(b.field_.neg(b.field_.one()));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial product: ring mismatch");
  Polynomial out(a.field_, a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.field_.mul(ca, cb));
  return out;
}

Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

// ---------------------------------------------------------------------------

BiPolynomial::BiPolynomial(int n, Polynomial inner) : n_(n), inner_(std::move(inner)) {
  if (inner_.n() != 2 * n + 1) throw std::invalid_argument("bipolynomial needs 2(n+1) variables");
}

BiPolynomial BiPolynomial::from_parts(const Polynomial& x_part, const Polynomial& y_part) {
  const int n = x_part.n();
  std::vector<int> xs(static_cast<std::size_t>(n + 1));
  std::vector<int> ys(static_cast<std::size_t>(n + 1));
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), n + 1);
  return BiPolynomial(n, x_part.rename(2 * n + 1, xs) * y_part.rename(2 * n + 1, ys));
}

std::pair<Monomial, Monomial> BiPolynomial::split(const Monomial& m) const {
  const auto half = static_cast<std::ptrdiff_t>(n_ + 1);
  Monomial x{std::vector<int>(m.exponents.begin(), m.exponents.begin() + half)};
  Monomial y{std::vector<int>(m.exponents.begin() + half, m.exponents.end())};
  return {std::move(x), std::move(y)};
}

void BiPolynomial::add_term(const Monomial& x, const Monomial& y, const Scalar& c) {
  Monomial m = x;
  m.exponents.insert(m.exponents.end(), y.exponents.begin(), y.exponents.end());
  inner_.add_term(m, c);
}

Scalar BiPolynomial::coefficient(const Monomial& x, const Monomial& y) const {
  Monomial m = x;
  m.exponents.insert(m.exponents.end(), y.exponents.begin(), y.exponents.end());
  return inner_.coefficient(m);
}

BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b) { return BiPolynomial(a.n_, a.inner_ + b.inner_); }
BiPolynomial operator-(const BiPolynomial& a, const BiPolynomial& b) { return BiPolynomial(a.n_, a.inner_ - b.inner_); }
BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) { return BiPolynomial(a.n_, a.inner_ * b.inner_); }

// ---------------------------------------------------------------------------

namespace {

void enumerate_monomials(std::vector<int>& prefix, std::size_t vars, int remaining, std::vector<Monomial>& out) {
  if (prefix.size() + 1 == vars) {
    prefix.push_back(remaining);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_monomials(prefix, vars, remaining - e, out);
    prefix.pop_back();
  }
}

}  // namespace

GradedBasis::GradedBasis(int n, int degree, bool dual) : n_(n), degree_(degree), dual_(dual) {
  if (n < 0) throw std::invalid_argument("negative projective dimension");
  if (degree < 0) return;
  std::vector<int> prefix;
  enumerate_monomials(prefix, static_cast<std::size_t>(n + 1), degree, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::invalid_argument("monomial not in degree-" + std::to_string(degree_) + " basis");
  return it->second;
}

Vector GradedBasis::coordinates(const Polynomial& f) const {
  Vector v(size(), f.field().zero());
  for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
  return v;
}

Polynomial GradedBasis::polynomial(const Field& field, const Vector& coords) const {
  if (coords.size() != size()) throw std::invalid_argument("coordinate vector length mismatch");
  Polynomial f(field, n_);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(monomials_[i], coords[i]);
  return f;
}

GradedBasis monomial_basis(int n, int m) { return GradedBasis(n, m); }

std::size_t binomial(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  std::size_t r = 1;
  for (long long i = 1; i <= bottom; ++i) r = r * static_cast<std::size_t>(top - bottom + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t graded_dim(int n, int m) { return m < 0 ? 0 : binomial(n + m, n); }

ExactMatrix multiplication_matrix(const Polynomial& w, int a, std::optional<int> degree) {
  const Field& k = w.field();
  const int n = w.n();
  auto d = w.is_zero() ? degree : w.homogeneous_degree();
  if (w.is_zero() && !d) return ExactMatrix(k, graded_dim(n, a), 0);
  if (!d) throw InvalidInput("multiplication_matrix: form is not homogeneous");
  if (degree && *degree != *d) throw InvalidInput("multiplication_matrix: stated degree disagrees with the form");
  GradedBasis domain(n, a - *d);
  GradedBasis codomain(n, a);
  ExactMatrix m(k, codomain.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c)
    for (const auto& [mono, coeff] : w.terms()) m.add_to(codomain.index_of(mono * domain[c]), c, coeff);
  return m;
}

BiPolynomial bigraded_component(const BiPolynomial& f, int s, int t) {
  BiPolynomial out(f.field(), f.n());
  f.for_each_term([&](const Monomial& x, const Monomial& y, const Scalar& c) {
    if (x.degree() == s && y.degree() == t) out.add_term(x, y, c);
  });
  return out;
}

ExactMatrix as_tensor(const BiPolynomial& f, int s, int t) {
  GradedBasis left(f.n(), s);
  GradedBasis right(f.n(), t);
  ExactMatrix m(f.field(), left.size(), right.size());
  f.for_each_term([&](const Monomial& x, const Monomial& y, const Scalar& c) {
    if (x.degree() != s || y.degree() != t)
      throw std::invalid_argument("as_tensor: term outside bidegree (" + std::to_string(s) + ", " + std::to_string(t) + ")");
    m.set(left.index_of(x), right.index_of(y), c);
  });
  return m;
}

// ---------------------------------------------------------------------------

IdealSlice::IdealSlice(const std::vector<Polynomial>& forms, int n, int b, const Field& field)
    : field_(field), basis_(n, b) {
  std::vector<Vector> rows;
  for (const auto& f : forms) {
    auto d = f.homogeneous_degree();
    if (!d) {
      if (f.is_zero()) continue;
      throw InvalidInput("ideal generators must be homogeneous");
    }
    GradedBasis multipliers(n, b - *d);
    for (const auto& m : multipliers.monomials()) {
      Vector v(basis_.size(), field_.zero());
      for (const auto& [mono, c] : f.terms()) {
        const std::size_t idx = basis_.index_of(mono * m);
        v[idx] = field_.add(v[idx], c);
      }
      rows.push_back(std::move(v));
    }
  }
  spanning_ = ExactMatrix::from_rows(field_, basis_.size(), rows);
  echelon_ = rref(spanning_);
  std::vector<bool> pivot(basis_.size(), false);
  for (std::size_t c : echelon_.pivot_columns) pivot[c] = true;
  for (std::size_t c = 0; c < basis_.size(); ++c)
    if (!pivot[c]) standard_.push_back(c);
}

Vector IdealSlice::normal_form(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("normal_form: length mismatch");
  Vector g = coords;
  for (std::size_t i = 0; i < echelon_.pivot_columns.size(); ++i) {
    const Scalar lead = g[echelon_.pivot_columns[i]];
    if (lead.is_zero()) continue;
    for (const auto& [c, v] : echelon_.reduced.row(i)) g[c] = field_.sub(g[c], field_.mul(lead, v));
  }
  Vector out;
  out.reserve(standard_.size());
  for (std::size_t c : standard_) out.push_back(g[c]);
  return out;
}

bool IdealSlice::annihilates_ideal(const Vector& functional) const {
  if (functional.size() != basis_.size()) throw std::invalid_argument("functional length mismatch");
  for (std::size_t r = 0; r < spanning_.rows(); ++r) {
    Scalar acc = field_.zero();
    for (const auto& [c, v] : spanning_.row(r)) acc = field_.add(acc, field_.mul(v, functional[c]));
    if (!acc.is_zero()) return false;
  }
  return true;
}

Vector IdealSlice::dual_functional(std::size_t k) const {
  Vector phi(basis_.size(), field_.zero());
  const std::size_t target = standard_.at(k);
  phi[target] = field_.one();
  for (std::size_t i = 0; i < echelon_.pivot_columns.size(); ++i)
    phi[echelon_.pivot_columns[i]] = field_.neg(echelon_.reduced.at(i, target));
  return phi;
}

}  // namespace beztate
