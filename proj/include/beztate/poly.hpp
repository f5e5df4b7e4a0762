#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "beztate/field.hpp"
#include "beztate/matrix.hpp"

namespace beztate {

/// Exponent vector of a monomial in n+1 variables.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  std::size_t num_vars() const { return exponents.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded-lex with x_0 > x_1 > ... > x_n: higher degree first, then the
/// lexicographically larger exponent vector first.  Used as the strict
/// weak order of every map keyed by Monomial, so iteration runs from the
/// largest monomial down.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of k[x_0, ..., x_n].
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexDescending>;

  Polynomial() = default;
  Polynomial(Field field, int n) : field_(field), n_(n) {}

  static Polynomial constant(Field field, int n, const Scalar& c);
  static Polynomial monomial(Field field, const Monomial& m, const Scalar& c);
  /// The variable x_i.
  static Polynomial variable(Field field, int n, int i);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(n_ + 1); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  /// Degree of a homogeneous polynomial; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  int max_degree() const;

  Polynomial scaled(const Scalar& s) const;
  /// Re-embeds into k[z_0, ..., z_{new_n}] sending x_i to z_{var_map[i]}.
  Polynomial rename(int new_n, const std::vector<int>& var_map) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  int n_ = 0;
  Terms terms_;
};

Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Element of k[x_0..x_n, y_0..y_n], stored as a polynomial in 2(n+1)
/// variables with the x's first.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  BiPolynomial(Field field, int n) : n_(n), inner_(field, 2 * n + 1) {}
  /// Wraps a polynomial in 2(n+1) variables.
  BiPolynomial(int n, Polynomial inner);

  static BiPolynomial from_parts(const Polynomial& x_part, const Polynomial& y_part);

  int n() const { return n_; }
  const Field& field() const { return inner_.field(); }
  const Polynomial& as_polynomial() const { return inner_; }
  bool is_zero() const { return inner_.is_zero(); }

  void add_term(const Monomial& x, const Monomial& y, const Scalar& c);
  Scalar coefficient(const Monomial& x, const Monomial& y) const;

  /// Calls fn(x_monomial, y_monomial, coefficient) for each term.
  template <class Fn>
  void for_each_term(Fn&& fn) const {
    for (const auto& [m, c] : inner_.terms()) {
      auto [x, y] = split(m);
      fn(x, y, c);
    }
  }

  std::pair<Monomial, Monomial> split(const Monomial& m) const;

  friend BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b);
  friend BiPolynomial operator-(const BiPolynomial& a, const BiPolynomial& b);
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
    return a.n_ == b.n_ && a.inner_ == b.inner_;
  }

 private:
  int n_ = 0;
  Polynomial inner_;
};

/// Ordered monomial basis of S_m (or of its dual S_m*, index-aligned).
class GradedBasis {
 public:
  GradedBasis(int n, int degree, bool dual = false);

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool dual() const { return dual_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  /// Index of m in this basis; throws if m is not of this degree.
  std::size_t index_of(const Monomial& m) const;

  /// Coordinates of a homogeneous polynomial of this degree.
  Vector coordinates(const Polynomial& f) const;
  Polynomial polynomial(const Field& field, const Vector& coords) const;

 private:
  int n_;
  int degree_;
  bool dual_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

GradedBasis monomial_basis(int n, int m);

/// C(n+m, n) for m >= 0 and 0 otherwise.
std::size_t graded_dim(int n, int m);
std::size_t binomial(long long top, long long bottom);

/// Matrix of S_{a-d} -> S_a, g |-> w*g.  `degree` supplies d when w is
/// zero; otherwise it must agree with the degree of w.
ExactMatrix multiplication_matrix(const Polynomial& w, int a, std::optional<int> degree = std::nullopt);

BiPolynomial bigraded_component(const BiPolynomial& f, int s, int t);

/// Coefficients of f (concentrated in bidegree (s, t)) as an element of
/// S_s (x) S_t: rows indexed by degree-s x-monomials, columns by degree-t
/// y-monomials.
ExactMatrix as_tensor(const BiPolynomial& f, int s, int t);

/// Degree-b slice of the ideal generated by homogeneous forms and of the
/// quotient R = S/I.  Standard monomials are the non-pivot columns of the
/// reduced echelon form of I_b, so coset bases follow the global monomial
/// order.
class IdealSlice {
 public:
  IdealSlice(const std::vector<Polynomial>& forms, int n, int b, const Field& field);

  int degree() const { return basis_.degree(); }
  const GradedBasis& basis() const { return basis_; }
  /// Spanning vectors of I_b (all monomial multiples of the forms), as rows.
  const ExactMatrix& spanning_rows() const { return spanning_; }
  std::size_t ideal_dim() const { return echelon_.pivot_columns.size(); }
  std::size_t quotient_dim() const { return basis_.size() - ideal_dim(); }
  /// Indices (into basis()) of the standard monomials, i.e. the coset basis of R_b.
  const std::vector<std::size_t>& standard_monomials() const { return standard_; }

  /// Coordinates in the coset basis of the class of a vector of S_b.
  Vector normal_form(const Vector& coords) const;
  /// True iff the functional (values on the monomial basis) vanishes on I_b.
  bool annihilates_ideal(const Vector& functional) const;
  /// Functional on S_b dual to the k-th coset basis element:
  /// g |-> coefficient of that standard monomial in the normal form of g.
  Vector dual_functional(std::size_t k) const;

 private:
  Field field_;
  GradedBasis basis_;
  ExactMatrix spanning_;
  RowEchelon echelon_;
  std::vector<std::size_t> standard_;
};

}  // namespace beztate
