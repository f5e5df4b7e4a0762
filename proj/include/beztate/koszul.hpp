#pragma once

#include <optional>
#include <vector>

#include "beztate/matrix.hpp"
#include "beztate/poly.hpp"
#include "beztate/report.hpp"
#include "beztate/tate.hpp"

namespace beztate {

/// m+1 linearly independent forms of degree d in n+1 variables.
struct KoszulSetup {
  Field field;
  std::vector<Polynomial> forms;
  int n = 0;
  int m = 0;
  int d = 0;
  /// (m+1)d - (n+1).
  int sigma = 0;
  /// (n+1)(d-1): socle degree of a complete intersection of n+1 such forms.
  int rho = 0;
  BasepointCertificate certificate;
};

/// Validates the forms and searches for a basepoint-freeness certificate.
/// Throws InvalidInput on non-homogeneous, mixed-degree or dependent input.
KoszulSetup make_koszul_setup(const std::vector<Polynomial>& forms);

/// K_i -> K_{i-1} in internal degree b on the bases
/// wedge^i{0..m} (x) S_{b-id}, with
/// e_J (x) g |-> sum_r (-1)^r e_{J \ j_r} (x) f_{j_r} g.
ExactMatrix koszul_slice(const KoszulSetup& s, int i, int b);

std::size_t koszul_term_dim(const KoszulSetup& s, int i, int b);

/// dim H_i(K)_b.
std::size_t homology_dim(const KoszulSetup& s, int i, int b);

struct SyzygySpace {
  int degree = 0;
  /// Basis of Syz_b as (m+1)-tuples of forms of degree b-d.
  std::vector<std::vector<Polynomial>> basis;
  /// Basis of the Koszul syzygies Kosz_b.
  std::vector<std::vector<Polynomial>> koszul_subspace;
};

SyzygySpace syzygy_space(const KoszulSetup& s, int b);

/// Coordinates of a tuple of degree-(b-d) forms in K_1(b).
Vector syzygy_coordinates(const KoszulSetup& s, const std::vector<Polynomial>& tuple, int b);

/// For m = n+1: the tuple whose i-th entry is
/// (-1)^i sum_{|alpha|=a} phi(Delta^i_alpha) x^alpha, Delta^i omitting f_i.
/// phi is given by its values on the monomial basis of S_{rho-a} and must
/// vanish on I_{rho-a}.
std::vector<Polynomial> bezout_syzygy(const KoszulSetup& s, int a, const Vector& phi);

/// Bezout syzygies of degree b, one for each element of the dual coset
/// basis of R*_{rho-a}, a = b-d.  Empty when rho-a or a is negative.
std::vector<std::vector<Polynomial>> bezout_syzygies(const KoszulSetup& s, int b);

/// For a certified regular sequence (m = n): R*_{rho-a} -> R_a,
/// phi |-> sum_{|alpha|=a} phi(Delta_alpha) [x^alpha], in the coset basis of
/// R_a and the dual coset basis of R*_{rho-a}.
ExactMatrix apolarity_matrix(const KoszulSetup& s, int a);

Report apolarity_check(const KoszulSetup& s, int a);
/// All a in [0, rho].
Report apolarity_check(const KoszulSetup& s);
Report syzygy_duality_check(const KoszulSetup& s, int b);
Report koszul_duality_check(const KoszulSetup& s, int i, int a);
/// Degreewise generation of Syz_b by Koszul syzygies and ring multiples of
/// Bezout syzygies, for every b <= b_max.
Report generation_check(const KoszulSetup& s, int b_max);

}  // namespace beztate
