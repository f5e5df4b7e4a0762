#include "beztate/koszul.hpp"

#include <stdexcept>
#include <string>

#include "beztate/bezoutian.hpp"
#include "beztate/exterior.hpp"

namespace beztate {

namespace {

Scalar signed_one(const Field& k, int sign) { return sign >= 0 ? k.one() : k.neg(k.one()); }

// Reports inconclusive when no basepoint-freeness certificate is on file.
bool require_certificate(const KoszulSetup& s, Report& report) {
  if (s.certificate.certified) return true;
  report.add(CheckResult{"basepoint-free certificate", {}, Status::inconclusive,
                         "no vanishing graded piece of S/I up to degree " +
                             std::to_string(s.certificate.searched_up_to),
                         0.0});
  return false;
}

// Values of the dual coset basis of R*_{deg} on the monomials of S_{deg}.
std::vector<Vector> dual_coset_basis(const IdealSlice& slice) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < slice.quotient_dim(); ++k) out.push_back(slice.dual_functional(k));
  return out;
}

std::vector<Polynomial> omit(const std::vector<Polynomial>& forms, std::size_t i) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < forms.size(); ++j)
    if (j != i) out.push_back(forms[j]);
  return out;
}

}  // namespace

KoszulSetup make_koszul_setup(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InvalidInput("koszul setup needs at least one form");
  KoszulSetup s;
  s.field = forms.front().field();
  s.n = forms.front().n();
  s.forms = forms;
  s.m = static_cast<int>(forms.size()) - 1;
  std::optional<int> d;
  for (const auto& f : forms) {
    if (f.n() != s.n || !(f.field() == s.field)) throw InvalidInput("forms live in different rings");
    auto fd = f.homogeneous_degree();
    if (!fd) throw InvalidInput("forms must be nonzero and homogeneous");
    if (d && *d != *fd) throw InvalidInput("forms must share one degree");
    d = fd;
  }
  s.d = *d;
  if (s.d < 1) throw InvalidInput("forms must have degree at least 1");
  GradedBasis sd(s.n, s.d);
  std::vector<Vector> rows;
  for (const auto& f : forms) rows.push_back(sd.coordinates(f));
  if (rank(ExactMatrix::from_rows(s.field, sd.size(), rows)) != forms.size())
    throw InvalidInput("forms are linearly dependent");
  s.sigma = (s.m + 1) * s.d - (s.n + 1);
  s.rho = (s.n + 1) * (s.d - 1);
  s.certificate = check_basepoint_free(forms);
  return s;
}

std::size_t koszul_term_dim(const KoszulSetup& s, int i, int b) {
  return binomial(s.m + 1, i) * graded_dim(s.n, b - i * s.d);
}

ExactMatrix koszul_slice(const KoszulSetup& s, int i, int b) {
  if (i < 0) throw std::invalid_argument("koszul_slice: negative homological degree");
  const Field& k = s.field;
  const WedgeBasis dom_w(s.m + 1, i);
  const WedgeBasis cod_w(s.m + 1, i - 1);
  const int dom_deg = b - i * s.d;
  const std::size_t dom_s = graded_dim(s.n, dom_deg);
  const std::size_t cod_s = graded_dim(s.n, dom_deg + s.d);
  ExactMatrix out(k, cod_w.size() * cod_s, dom_w.size() * dom_s);
  if (out.rows() == 0 || out.cols() == 0) return out;
  std::vector<ExactMatrix> mult;
  for (const auto& f : s.forms) mult.push_back(multiplication_matrix(f, dom_deg + s.d, s.d));
  for (std::size_t cw = 0; cw < dom_w.size(); ++cw) {
    for (const auto& sp : split(dom_w[cw], 1)) {
      const std::size_t rw = cod_w.index_of(sp.right);
      const ExactMatrix& mf = mult[static_cast<std::size_t>(sp.left.indices[0])];
      const Scalar sg = signed_one(k, sp.sign);
      for (std::size_t r = 0; r < mf.rows(); ++r)
        for (const auto& [c, v] : mf.row(r)) out.add_to(rw * cod_s + r, cw * dom_s + c, k.mul(sg, v));
    }
  }
  return out;
}

std::size_t homology_dim(const KoszulSetup& s, int i, int b) {
  if (i < 0) return 0;
  const std::size_t dim = koszul_term_dim(s, i, b);
  if (dim == 0) return 0;
  const std::size_t out_rank = i == 0 ? 0 : rank(koszul_slice(s, i, b));
  const std::size_t in_rank = rank(koszul_slice(s, i + 1, b));
  return dim - out_rank - in_rank;
}

Vector syzygy_coordinates(const KoszulSetup& s, const std::vector<Polynomial>& tuple, int b) {
  if (tuple.size() != s.forms.size()) throw std::invalid_argument("syzygy tuple has the wrong length");
  const GradedBasis piece(s.n, b - s.d);
  Vector v;
  v.reserve(tuple.size() * piece.size());
  for (const auto& a : tuple) {
    Vector c = piece.coordinates(a);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

namespace {

std::vector<Polynomial> tuple_from_coordinates(const KoszulSetup& s, const Vector& v, int b) {
  const GradedBasis piece(s.n, b - s.d);
  std::vector<Polynomial> tuple;
  for (std::size_t r = 0; r < s.forms.size(); ++r) {
    Vector part(v.begin() + static_cast<std::ptrdiff_t>(r * piece.size()),
                v.begin() + static_cast<std::ptrdiff_t>((r + 1) * piece.size()));
    tuple.push_back(piece.polynomial(s.field, part));
  }
  return tuple;
}

}  // namespace

SyzygySpace syzygy_space(const KoszulSetup& s, int b) {
  SyzygySpace out;
  out.degree = b;
  for (const auto& v : kernel_basis(koszul_slice(s, 1, b))) out.basis.push_back(tuple_from_coordinates(s, v, b));
  for (const auto& v : image_basis(koszul_slice(s, 2, b))) out.koszul_subspace.push_back(tuple_from_coordinates(s, v, b));
  return out;
}

std::vector<Polynomial> bezout_syzygy(const KoszulSetup& s, int a, const Vector& phi) {
  if (s.m != s.n + 1) throw InvalidInput("Bezout syzygies need exactly n+2 forms");
  const int top = s.rho - a;
  const IdealSlice ideal(s.forms, s.n, top, s.field);
  if (phi.size() != ideal.basis().size())
    throw InvalidInput("functional has " + std::to_string(phi.size()) + " values, S_" + std::to_string(top) + " has dimension " +
                       std::to_string(ideal.basis().size()));
  if (!ideal.annihilates_ideal(phi)) throw InvalidInput("functional does not vanish on I_" + std::to_string(top));
  const Field& k = s.field;
  const GradedBasis target(s.n, a);
  std::vector<Polynomial> tuple;
  for (std::size_t i = 0; i < s.forms.size(); ++i) {
    Polynomial entry(k, s.n);
    if (top >= 0 && a >= 0) {
      const ExactMatrix slice = bezout_slice(bezoutian(omit(s.forms, i), s.d), a);
      Vector coeffs(target.size(), k.zero());
      for (std::size_t beta = 0; beta < slice.rows(); ++beta) {
        if (phi[beta].is_zero()) continue;
        for (const auto& [alpha, v] : slice.row(beta)) coeffs[alpha] = k.add(coeffs[alpha], k.mul(phi[beta], v));
      }
      entry = target.polynomial(k, coeffs).scaled(signed_one(k, i % 2 == 0 ? 1 : -1));
    }
    tuple.push_back(std::move(entry));
  }
  return tuple;
}

std::vector<std::vector<Polynomial>> bezout_syzygies(const KoszulSetup& s, int b) {
  const int a = b - s.d;
  std::vector<std::vector<Polynomial>> out;
  if (a < 0 || s.rho - a < 0) return out;
  const IdealSlice low(s.forms, s.n, s.rho - a, s.field);
  for (const auto& phi : dual_coset_basis(low)) out.push_back(bezout_syzygy(s, a, phi));
  return out;
}

ExactMatrix apolarity_matrix(const KoszulSetup& s, int a) {
  if (s.m != s.n) throw InvalidInput("apolarity needs exactly n+1 forms");
  if (!s.certificate.certified) throw InvalidInput("forms are not a certified regular sequence");
  const Field& k = s.field;
  if (a < 0 || a > s.rho) return ExactMatrix(k, 0, 0);
  const IdealSlice low(s.forms, s.n, s.rho - a, k);
  const IdealSlice high(s.forms, s.n, a, k);
  const auto coefficients = bezout_coefficients(bezoutian(s.forms));
  const GradedBasis sa(s.n, a);
  ExactMatrix out(k, high.quotient_dim(), low.quotient_dim());
  const std::vector<Vector> functionals = dual_coset_basis(low);
  for (std::size_t col = 0; col < functionals.size(); ++col) {
    const Vector& phi = functionals[col];
    Vector image(sa.size(), k.zero());
    for (const auto& [y, delta_alpha] : coefficients) {
      if (y.degree() != a) continue;
      Scalar value = k.zero();
      for (const auto& [x, c] : delta_alpha.terms()) value = k.add(value, k.mul(c, phi[low.basis().index_of(x)]));
      image[sa.index_of(y)] = value;
    }
    const Vector cls = high.normal_form(image);
    for (std::size_t row = 0; row < cls.size(); ++row) out.set(row, col, cls[row]);
  }
  return out;
}

Report apolarity_check(const KoszulSetup& s, int a) {
  Report report("apolarity");
  if (!require_certificate(s, report)) return report;
  const std::size_t low = IdealSlice(s.forms, s.n, s.rho - a, s.field).quotient_dim();
  const std::size_t high = IdealSlice(s.forms, s.n, a, s.field).quotient_dim();
  report.add("dim R_{rho-a} = dim R_a", {a}, low == high,
             "dims " + std::to_string(low) + " and " + std::to_string(high));
  const ExactMatrix pairing = apolarity_matrix(s, a);
  report.add("Bezoutian pairing nondegenerate", {a}, is_nondegenerate_pairing(pairing),
             std::to_string(pairing.rows()) + "x" + std::to_string(pairing.cols()) + ", rank " +
                 std::to_string(rank(pairing)));
  return report;
}

Report apolarity_check(const KoszulSetup& s) {
  Report report("apolarity");
  if (!require_certificate(s, report)) return report;
  for (int a = 0; a <= s.rho; ++a) report.merge(apolarity_check(s, a));
  return report;
}

namespace {

// Bezout syzygies of degree b from the dual coset basis of R*_{rho-a}.
std::vector<Vector> bezout_syzygy_vectors(const KoszulSetup& s, int b, int target_degree) {
  std::vector<Vector> out;
  for (const auto& tuple : bezout_syzygies(s, b)) {
    // Lift to the requested degree by every monomial multiple.
    const GradedBasis multipliers(s.n, target_degree - b);
    for (const auto& mono : multipliers.monomials()) {
      std::vector<Polynomial> lifted;
      const Polynomial mu = Polynomial::monomial(s.field, mono, s.field.one());
      for (const auto& entry : tuple) lifted.push_back(entry * mu);
      out.push_back(syzygy_coordinates(s, lifted, target_degree));
    }
  }
  return out;
}

}  // namespace

Report syzygy_duality_check(const KoszulSetup& s, int b) {
  Report report("syzygy duality");
  if (s.m != s.n + 1) throw InvalidInput("syzygy duality needs exactly n+2 forms");
  if (!require_certificate(s, report)) return report;
  const int a = b - s.d;
  const int low_deg = s.rho - a;
  const std::size_t r_dim = IdealSlice(s.forms, s.n, low_deg, s.field).quotient_dim();
  const ExactMatrix k1 = koszul_slice(s, 1, b);
  const ExactMatrix k2 = koszul_slice(s, 2, b);
  const std::size_t syz = k1.cols() - rank(k1);
  const std::size_t kosz = rank(k2);
  report.add("dim R_{rho-a} = dim Syz_b - dim Kosz_b", {b}, r_dim == syz - kosz,
             "dim R = " + std::to_string(r_dim) + ", Syz = " + std::to_string(syz) + ", Kosz = " + std::to_string(kosz));
  const std::vector<Vector> bez = bezout_syzygy_vectors(s, b, b);
  bool all_syzygies = true;
  for (const auto& v : bez)
    for (const auto& x : apply(k1, v)) all_syzygies = all_syzygies && x.is_zero();
  report.add("Bezout syzygies are syzygies", {b}, all_syzygies);
  ExactMatrix spanning = k2;
  if (!bez.empty()) spanning = hconcat(k2, ExactMatrix::from_columns(s.field, k1.cols(), bez));
  const std::size_t span = rank(spanning);
  report.add("Koszul and Bezout syzygies span Syz_b", {b}, span == syz,
             "span " + std::to_string(span) + " of " + std::to_string(syz));
  return report;
}

Report koszul_duality_check(const KoszulSetup& s, int i, int a) {
  if (i < 0 || i > s.m - s.n)
    throw InvalidInput("homological degree " + std::to_string(i) + " outside [0, m-n] = [0, " +
                       std::to_string(s.m - s.n) + "]");
  Report report("koszul duality");
  if (!require_certificate(s, report)) return report;
  const std::size_t left = homology_dim(s, i, s.sigma - a);
  const std::size_t right = homology_dim(s, s.m - s.n - i, a);
  report.add("dim H_i(K)_{sigma-a} = dim H_{m-n-i}(K)_a", {i, a}, left == right,
             std::to_string(left) + " vs " + std::to_string(right));
  return report;
}

Report generation_check(const KoszulSetup& s, int b_max) {
  if (s.m != s.n + 1) throw InvalidInput("generation check needs exactly n+2 forms");
  Report report("generation");
  if (!require_certificate(s, report)) return report;
  if (b_max <= s.d) report.note("no syzygies below degree d+1: vacuous");
  for (int b = s.d + 1; b <= b_max; ++b) {
    report.add(timed([&] {
      const ExactMatrix k1 = koszul_slice(s, 1, b);
      const std::size_t syz = k1.cols() - rank(k1);
      ExactMatrix spanning = koszul_slice(s, 2, b);
      for (int lower = s.d; lower <= b; ++lower) {
        const auto bez = bezout_syzygy_vectors(s, lower, b);
        if (!bez.empty()) spanning = hconcat(spanning, ExactMatrix::from_columns(s.field, k1.cols(), bez));
      }
      const std::size_t span = rank(spanning);
      return CheckResult{"Syz_b generated by Koszul and Bezout syzygies", {b},
                         span == syz ? Status::pass : Status::fail,
                         "span " + std::to_string(span) + " of " + std::to_string(syz), 0.0};
    }));
  }
  return report;
}

}  // namespace beztate
