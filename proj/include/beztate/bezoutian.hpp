#pragma once

#include <map>
#include <optional>
#include <vector>

#include "beztate/matrix.hpp"
#include "beztate/poly.hpp"

namespace beztate {

/// Bezoutian of n+1 forms of degree d in n+1 variables.
struct BezoutData {
  std::vector<Polynomial> forms;
  BiPolynomial delta;
  int n = 0;
  int d = 0;
  /// (n+1)(d-1): the total degree of delta.
  int rho = 0;
};

/// The exact quotient
///   (f(y_0..y_{j-1}, x_j..x_n) - f(y_0..y_j, x_{j+1}..x_n)) / (x_j - y_j)
/// computed by synthetic division in x_j.  A nonzero remainder means a bug
/// and aborts via std::logic_error.
BiPolynomial divided_difference(const Polynomial& f, int j);

/// det(divided_difference(forms[i], j)), rows i and columns j.
/// All nonzero forms must be homogeneous of one degree d >= 1; `degree`
/// fixes d when every form is zero.
BezoutData bezoutian(const std::vector<Polynomial>& forms, std::optional<int> degree = std::nullopt);

/// Delta written as sum over y^alpha of Delta_alpha(x) y^alpha.
std::map<Monomial, Polynomial, GrlexDescending> bezout_coefficients(const BezoutData& b);

/// The bidegree (rho - a, a) piece of delta as a matrix on
/// S_{rho-a} (x) S_a; zero when a is outside [0, rho].
ExactMatrix bezout_slice(const BezoutData& b, int a);

}  // namespace beztate
