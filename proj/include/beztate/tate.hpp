#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "beztate/bezoutian.hpp"
#include "beztate/exterior.hpp"
#include "beztate/matrix.hpp"
#include "beztate/poly.hpp"
#include "beztate/report.hpp"

namespace beztate {

/// Sign placed on the Bezoutian block of d_p.
enum class BezoutBlockSign {
  alternating,  // (-1)^p, as in the resolution
  flipped,      // (-1)^(p+1), the other global convention
  none,         // always +1; not a complex in general
};

/// Which side of a wedge the n+1 Bezoutian forms are split off from.
/// omega = sign * J ^ I with |I| = n+1 (complement_first) or
/// omega = sign * I ^ J (forms_first).
enum class SplitConvention { complement_first, forms_first };

/// Knobs that only exist for negative controls and convention studies.
struct TateVariant {
  BezoutBlockSign block_sign = BezoutBlockSign::alternating;
  SplitConvention split = SplitConvention::complement_first;
  /// Use Delta(y, x) in place of Delta(x, y).
  bool swap_bezoutian_variables = false;
};

struct TateConfig {
  Field field;
  int n = 1;
  int d = 2;
  int ell = 0;
  int p_min = 0;
  int p_max = 0;
  /// Ordered spanning forms of a subspace U of S_d; W = S_d when absent.
  std::optional<std::vector<Polynomial>> subspace;
  TateVariant variant;

  int rho() const { return (n + 1) * (d - 1); }
  /// a = ell + (p+1)d.
  int twist(int p) const { return ell + (p + 1) * d; }
  /// dim W, or dim U when a subspace is given.
  int ambient_dim() const;
};

/// The two summands of T^p: E^(n-p) (x) S*_{rho-a} (top) and
/// E^(-p) (x) S_{a-d} (bottom).
struct SummandDescriptor {
  int p = 0;
  int a = 0;
  std::size_t top_dim = 0;
  std::size_t bottom_dim = 0;
  /// Internal degrees of the minimal generators: N-n+p (top), N+p (bottom).
  int top_generator_degree = 0;
  int bottom_generator_degree = 0;
};

/// One tensor factor space  wedge^k (x) S_m  (or S_m* when dual).
struct TensorSpace {
  int wedge_power = 0;
  std::size_t wedge_dim = 0;
  int poly_degree = 0;
  std::size_t poly_dim = 0;
  bool dual = false;

  std::size_t dim() const { return wedge_dim * poly_dim; }
};

/// Internal-degree-t slice of T^p, ordered top summand first.
struct SliceSpace {
  TensorSpace top;
  TensorSpace bottom;

  std::size_t dim() const { return top.dim() + bottom.dim(); }
};

SummandDescriptor summand_dims(const TateConfig& cfg, int p);
SliceSpace slice_space(const TateConfig& cfg, int p, int t);

struct BasepointCertificate {
  bool certified = false;
  /// Smallest degree t with (S/I)_t = 0 when certified.
  int degree = -1;
  int searched_up_to = -1;
};

/// Raised when a construction needs a basepoint-freeness certificate and
/// the bounded search found none.  The input may still be basepoint-free.
class UncertifiedInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Searches t <= t_max for a vanishing graded piece of S/<forms>.  A failed
/// search is inconclusive, not a proof of a common zero.
BasepointCertificate check_basepoint_free(const std::vector<Polynomial>& forms, int t_max);
BasepointCertificate check_basepoint_free(const std::vector<Polynomial>& forms);

/// Default search bound (n+1)(d-1) + d.
int default_basepoint_bound(int n, int d);

/// Builds the degree slices of the differentials.  Construction validates
/// the configuration and precomputes the Bezoutians of all (n+1)-subsets of
/// the ordered basis of W (or U).
class TateBuilder {
 public:
  explicit TateBuilder(TateConfig cfg);

  const TateConfig& config() const { return cfg_; }
  int ambient_dim() const { return static_cast<int>(basis_forms_.size()); }
  const std::vector<Polynomial>& basis_forms() const { return basis_forms_; }

  /// wedge^i W (x) S*_{rho-a} -> wedge^{i-1} W (x) S*_{rho-a-d}, i = t+n-p.
  ExactMatrix alpha_slice(int p, int t) const;
  /// wedge^i W (x) S_{a-d} -> wedge^{i-1} W (x) S_a, i = t-p.
  ExactMatrix beta_slice(int p, int t) const;
  /// Unsigned Bezoutian map wedge^{n+1+m} W (x) S*_{rho-a} -> wedge^m W (x) S_a,
  /// m = t-p-1.
  ExactMatrix bezout_map_slice(int p, int t) const;
  /// [[alpha, 0], [sign * B, beta]] on the top-first direct sums.
  ExactMatrix differential_slice(int p, int t) const;

 private:
  /// Delta_{rho-a,a} of every (n+1)-subset, indexed like subsets_.
  std::vector<ExactMatrix> bezout_slices(int a) const;

  TateConfig cfg_;
  std::vector<Polynomial> basis_forms_;
  WedgeBasis subsets_;
  std::vector<BezoutData> subset_bezoutians_;
};

ExactMatrix alpha_slice(const TateConfig& cfg, int p, int t);
ExactMatrix beta_slice(const TateConfig& cfg, int p, int t);
ExactMatrix bezout_map_slice(const TateConfig& cfg, int p, int t);
ExactMatrix differential_slice(const TateConfig& cfg, int p, int t);

/// A finite window of the resolution: d_p in internal degree t for every
/// p in [p_min, p_max] and t in [t_min, t_max].
struct TateWindow {
  TateConfig config;
  int t_min = 0;
  int t_max = 0;
  std::vector<SummandDescriptor> summands;
  std::map<std::pair<int, int>, ExactMatrix> slices;

  const ExactMatrix* slice(int p, int t) const;
};

TateWindow build_window(const TateConfig& cfg, int t_min, int t_max);

/// d_{p+1} d_p = 0 for every stored consecutive pair.
Report verify_complex(const TateWindow& w);
/// rank d_{p-1} + rank d_p = dim T^p at each interior position; the two
/// window ends are noted and skipped.
Report verify_exactness(const TateWindow& w);
/// Alternating sum of slice dimensions over p for each t whose spaces
/// vanish at both ends of the window.
Report verify_euler_characteristic(const TateWindow& w);
/// Injectivity and trivial-intersection claims in the generator degree
/// N-n+p.  Full-W windows only.
Report generator_degree_checks(const TateWindow& w, int p);
/// B_{p+1} alpha_p = beta_{p+1} B_p in degree t, built from scratch.
Report mapping_cone_check(const TateConfig& cfg, int p, int t);
/// Same identity with the blocks read back out of stored slices.
Report mapping_cone_check(const TateWindow& w, int p, int t);

}  // namespace beztate
