#include "beztate/tate.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace beztate {

namespace {

std::string join(std::initializer_list<long long> xs) {
  std::ostringstream os;
  bool first = true;
  for (long long x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  return os.str();
}

Scalar sign_scalar(const Field& k, int sign) { return sign >= 0 ? k.one() : k.neg(k.one()); }

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

int block_sign(const TateVariant& v, int p) {
  switch (v.block_sign) {
    case BezoutBlockSign::alternating:
      return parity_sign(p);
    case BezoutBlockSign::flipped:
      return -parity_sign(p);
    case BezoutBlockSign::none:
      return 1;
  }
  return 1;
}

std::vector<Polynomial> monomial_forms(const Field& k, int n, int d) {
  std::vector<Polynomial> out;
  const GradedBasis basis(n, d);
  for (const auto& m : basis.monomials()) out.push_back(Polynomial::monomial(k, m, k.one()));
  return out;
}

void validate_subspace(const TateConfig& cfg, const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InvalidInput("subspace must contain at least one form");
  GradedBasis sd(cfg.n, cfg.d);
  std::vector<Vector> rows;
  for (const auto& f : forms) {
    if (f.n() != cfg.n) throw InvalidInput("subspace form has the wrong number of variables");
    if (!(f.field() == cfg.field)) throw InvalidInput("subspace form lives over a different field");
    auto deg = f.homogeneous_degree();
    if (!deg || *deg != cfg.d)
      throw InvalidInput("subspace forms must be nonzero and homogeneous of degree " + std::to_string(cfg.d));
    rows.push_back(sd.coordinates(f));
  }
  if (rank(ExactMatrix::from_rows(cfg.field, sd.size(), rows)) != forms.size())
    throw InvalidInput("subspace forms are linearly dependent");
  auto cert = check_basepoint_free(forms);
  if (!cert.certified)
    throw UncertifiedInput("subspace could not be certified basepoint-free up to degree " +
                       std::to_string(cert.searched_up_to));
}

TensorSpace tensor_space(const TateConfig& cfg, int wedge_power, int poly_degree, bool dual) {
  TensorSpace s;
  s.wedge_power = wedge_power;
  s.wedge_dim = binomial(cfg.ambient_dim(), wedge_power);
  s.poly_degree = poly_degree;
  s.poly_dim = graded_dim(cfg.n, poly_degree);
  s.dual = dual;
  return s;
}

}  // namespace

int TateConfig::ambient_dim() const {
  if (subspace) return static_cast<int>(subspace->size());
  return static_cast<int>(binomial(n + d, d));
}

SummandDescriptor summand_dims(const TateConfig& cfg, int p) {
  SummandDescriptor s;
  s.p = p;
  s.a = cfg.twist(p);
  s.top_dim = graded_dim(cfg.n, cfg.rho() - s.a);
  s.bottom_dim = graded_dim(cfg.n, s.a - cfg.d);
  s.top_generator_degree = cfg.ambient_dim() - cfg.n + p;
  s.bottom_generator_degree = cfg.ambient_dim() + p;
  return s;
}

SliceSpace slice_space(const TateConfig& cfg, int p, int t) {
  const int a = cfg.twist(p);
  return SliceSpace{tensor_space(cfg, t + cfg.n - p, cfg.rho() - a, true),
                    tensor_space(cfg, t - p, a - cfg.d, false)};
}

int default_basepoint_bound(int n, int d) { return (n + 1) * (d - 1) + d; }

BasepointCertificate check_basepoint_free(const std::vector<Polynomial>& forms, int t_max) {
  if (forms.empty()) throw InvalidInput("check_basepoint_free: no forms");
  const int n = forms.front().n();
  int low = t_max + 1;
  for (const auto& f : forms) {
    auto d = f.homogeneous_degree();
    if (!d) throw InvalidInput("check_basepoint_free: forms must be nonzero and homogeneous");
    low = std::min(low, *d);
  }
  BasepointCertificate cert;
  cert.searched_up_to = t_max;
  for (int t = std::max(low, 0); t <= t_max; ++t) {
    if (IdealSlice(forms, n, t, forms.front().field()).quotient_dim() == 0) {
      cert.certified = true;
      cert.degree = t;
      return cert;
    }
  }
  return cert;
}

BasepointCertificate check_basepoint_free(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InvalidInput("check_basepoint_free: no forms");
  int d = 0;
  for (const auto& f : forms) d = std::max(d, f.max_degree());
  return check_basepoint_free(forms, default_basepoint_bound(forms.front().n(), d));
}

// ---------------------------------------------------------------------------

TateBuilder::TateBuilder(TateConfig cfg) : cfg_(std::move(cfg)), subsets_(0, 0) {
  if (cfg_.n < 1) throw InvalidInput("n must be at least 1");
  if (cfg_.d < 1) throw InvalidInput("d must be at least 1");
  if (cfg_.p_min > cfg_.p_max) throw InvalidInput("p_min exceeds p_max");
  if (cfg_.subspace) {
    validate_subspace(cfg_, *cfg_.subspace);
    basis_forms_ = *cfg_.subspace;
  } else {
    basis_forms_ = monomial_forms(cfg_.field, cfg_.n, cfg_.d);
  }
  subsets_ = WedgeBasis(ambient_dim(), cfg_.n + 1);
  for (const auto& I : subsets_.wedges()) {
    std::vector<Polynomial> forms;
    for (int idx : I.indices) forms.push_back(basis_forms_[static_cast<std::size_t>(idx)]);
    subset_bezoutians_.push_back(bezoutian(forms, cfg_.d));
  }
}

std::vector<ExactMatrix> TateBuilder::bezout_slices(int a) const {
  std::vector<ExactMatrix> out;
  out.reserve(subset_bezoutians_.size());
  for (const auto& b : subset_bezoutians_) {
    if (cfg_.variant.swap_bezoutian_variables)
      out.push_back(bezout_slice(b, b.rho - a).transpose());
    else
      out.push_back(bezout_slice(b, a));
  }
  return out;
}

ExactMatrix TateBuilder::alpha_slice(int p, int t) const {
  const Field& k = cfg_.field;
  const int i = t + cfg_.n - p;
  const int s = cfg_.rho() - cfg_.twist(p);
  const WedgeBasis dom_w(ambient_dim(), i);
  const WedgeBasis cod_w(ambient_dim(), i - 1);
  const std::size_t dom_s = graded_dim(cfg_.n, s);
  const std::size_t cod_s = graded_dim(cfg_.n, s - cfg_.d);
  ExactMatrix m(k, cod_w.size() * cod_s, dom_w.size() * dom_s);
  if (m.rows() == 0 || m.cols() == 0) return m;
  // omega (x) phi |-> sum_r (-1)^r omega\r (x) phi(w_r * -): the transpose
  // of multiplication by w_r read in the dual bases.
  std::vector<ExactMatrix> mult;
  for (const auto& w : basis_forms_) mult.push_back(multiplication_matrix(w, s, cfg_.d));
  for (std::size_t cw = 0; cw < dom_w.size(); ++cw) {
    for (const auto& sp : split(dom_w[cw], 1)) {
      const std::size_t rw = cod_w.index_of(sp.right);
      const ExactMatrix& mw = mult[static_cast<std::size_t>(sp.left.indices[0])];
      const Scalar sg = sign_scalar(k, sp.sign);
      for (std::size_t beta = 0; beta < mw.rows(); ++beta)
        for (const auto& [gamma, v] : mw.row(beta)) m.add_to(rw * cod_s + gamma, cw * dom_s + beta, k.mul(sg, v));
    }
  }
  return m;
}

ExactMatrix TateBuilder::beta_slice(int p, int t) const {
  const Field& k = cfg_.field;
  const int i = t - p;
  const int a = cfg_.twist(p);
  const WedgeBasis dom_w(ambient_dim(), i);
  const WedgeBasis cod_w(ambient_dim(), i - 1);
  const std::size_t dom_s = graded_dim(cfg_.n, a - cfg_.d);
  const std::size_t cod_s = graded_dim(cfg_.n, a);
  ExactMatrix m(k, cod_w.size() * cod_s, dom_w.size() * dom_s);
  if (m.rows() == 0 || m.cols() == 0) return m;
  std::vector<ExactMatrix> mult;
  for (const auto& w : basis_forms_) mult.push_back(multiplication_matrix(w, a, cfg_.d));
  for (std::size_t cw = 0; cw < dom_w.size(); ++cw) {
    for (const auto& sp : split(dom_w[cw], 1)) {
      const std::size_t rw = cod_w.index_of(sp.right);
      const ExactMatrix& mw = mult[static_cast<std::size_t>(sp.left.indices[0])];
      const Scalar sg = sign_scalar(k, sp.sign);
      for (std::size_t alpha = 0; alpha < mw.rows(); ++alpha)
        for (const auto& [gamma, v] : mw.row(alpha)) m.add_to(rw * cod_s + alpha, cw * dom_s + gamma, k.mul(sg, v));
    }
  }
  return m;
}

ExactMatrix TateBuilder::bezout_map_slice(int p, int t) const {
  const Field& k = cfg_.field;
  const int n = cfg_.n;
  const int m_power = t - p - 1;
  const int a = cfg_.twist(p);
  const int s = cfg_.rho() - a;
  const WedgeBasis dom_w(ambient_dim(), n + 1 + m_power);
  const WedgeBasis cod_w(ambient_dim(), m_power);
  const std::size_t dom_s = graded_dim(n, s);
  const std::size_t cod_s = graded_dim(n, a);
  ExactMatrix m(k, cod_w.size() * cod_s, dom_w.size() * dom_s);
  if (m.rows() == 0 || m.cols() == 0) return m;
  const std::vector<ExactMatrix> slices = bezout_slices(a);
  const bool complement_first = cfg_.variant.split == SplitConvention::complement_first;
  for (std::size_t cw = 0; cw < dom_w.size(); ++cw) {
    for (const auto& sp : split(dom_w[cw], complement_first ? m_power : n + 1)) {
      const WedgeIndex& forms = complement_first ? sp.right : sp.left;
      const WedgeIndex& rest = complement_first ? sp.left : sp.right;
      const std::size_t rw = cod_w.index_of(rest);
      const ExactMatrix& slice = slices[subsets_.index_of(forms)];
      const Scalar sg = sign_scalar(k, sp.sign);
      // (phi_beta (x) 1)(Delta_{s,a}) = sum_alpha slice[beta][alpha] x^alpha
      for (std::size_t beta = 0; beta < slice.rows(); ++beta)
        for (const auto& [alpha, v] : slice.row(beta)) m.add_to(rw * cod_s + alpha, cw * dom_s + beta, k.mul(sg, v));
    }
  }
  return m;
}

ExactMatrix TateBuilder::differential_slice(int p, int t) const {
  const SliceSpace dom = slice_space(cfg_, p, t);
  const SliceSpace cod = slice_space(cfg_, p + 1, t);
  ExactMatrix m(cfg_.field, cod.dim(), dom.dim());
  const Scalar sg = sign_scalar(cfg_.field, block_sign(cfg_.variant, p));
  m.set_block(0, 0, alpha_slice(p, t));
  m.set_block(cod.top.dim(), 0, bezout_map_slice(p, t).scaled(sg));
  m.set_block(cod.top.dim(), dom.top.dim(), beta_slice(p, t));
  return m;
}

ExactMatrix alpha_slice(const TateConfig& cfg, int p, int t) { return TateBuilder(cfg).alpha_slice(p, t); }
ExactMatrix beta_slice(const TateConfig& cfg, int p, int t) { return TateBuilder(cfg).beta_slice(p, t); }
ExactMatrix bezout_map_slice(const TateConfig& cfg, int p, int t) { return TateBuilder(cfg).bezout_map_slice(p, t); }
ExactMatrix differential_slice(const TateConfig& cfg, int p, int t) {
  return TateBuilder(cfg).differential_slice(p, t);
}

// ---------------------------------------------------------------------------

const ExactMatrix* TateWindow::slice(int p, int t) const {
  auto it = slices.find({p, t});
  return it == slices.end() ? nullptr : &it->second;
}

TateWindow build_window(const TateConfig& cfg, int t_min, int t_max) {
  if (t_min > t_max) throw InvalidInput("t_min exceeds t_max");
  TateBuilder builder(cfg);
  TateWindow w;
  w.config = cfg;
  w.t_min = t_min;
  w.t_max = t_max;
  for (int p = cfg.p_min; p <= cfg.p_max + 1; ++p) w.summands.push_back(summand_dims(cfg, p));
  for (int p = cfg.p_min; p <= cfg.p_max; ++p)
    for (int t = t_min; t <= t_max; ++t) w.slices.emplace(std::make_pair(p, t), builder.differential_slice(p, t));
  return w;
}

Report verify_complex(const TateWindow& w) {
  Report report("complex");
  for (int p = w.config.p_min; p < w.config.p_max; ++p) {
    for (int t = w.t_min; t <= w.t_max; ++t) {
      report.add(timed([&] {
        CheckResult c{"d_{p+1} d_p = 0", {p, t}, Status::pass, {}, 0.0};
        const ExactMatrix* first = w.slice(p, t);
        const ExactMatrix* second = w.slice(p + 1, t);
        if (!first || !second) {
          c.status = Status::fail;
          c.detail = "slice missing";
          return c;
        }
        const ExactMatrix prod = *second * *first;
        for (std::size_t r = 0; r < prod.rows() && c.status == Status::pass; ++r) {
          if (prod.row(r).empty()) continue;
          c.status = Status::fail;
          c.detail = "nonzero entry at (row, col) = (" + join({static_cast<long long>(r),
                                                               static_cast<long long>(prod.row(r).begin()->first)}) + ")";
        }
        return c;
      }));
    }
  }
  if (w.config.p_min == w.config.p_max) report.note("single differential: no consecutive pair to compose");
  return report;
}

Report verify_exactness(const TateWindow& w) {
  Report report("exactness");
  std::map<std::pair<int, int>, std::size_t> ranks;
  auto rank_of = [&](int p, int t) -> std::size_t {
    auto it = ranks.find({p, t});
    if (it != ranks.end()) return it->second;
    const ExactMatrix* s = w.slice(p, t);
    if (!s) throw InvalidInput("window is missing slice (" + join({p, t}) + ")");
    return ranks.emplace(std::make_pair(p, t), rank(*s)).first->second;
  };
  for (int t = w.t_min; t <= w.t_max; ++t) {
    for (int p = w.config.p_min + 1; p <= w.config.p_max; ++p) {
      report.add(timed([&] {
        const std::size_t dim = slice_space(w.config, p, t).dim();
        const std::size_t image = rank_of(p - 1, t);
        const std::size_t kernel = dim - rank_of(p, t);
        CheckResult c{"dim ker = dim im", {p, t}, kernel == image ? Status::pass : Status::fail, {}, 0.0};
        if (kernel != image)
          c.detail = "dim ker - dim im = " + std::to_string(static_cast<long long>(kernel) - static_cast<long long>(image));
        return c;
      }));
    }
  }
  report.note("boundary positions p = " + std::to_string(w.config.p_min) + " and p = " +
              std::to_string(w.config.p_max + 1) + " lack a neighbouring differential and are not asserted");
  return report;
}

Report verify_euler_characteristic(const TateWindow& w) {
  Report report("euler characteristic");
  for (int t = w.t_min; t <= w.t_max; ++t) {
    const std::size_t first = slice_space(w.config, w.config.p_min, t).dim();
    const std::size_t last = slice_space(w.config, w.config.p_max + 1, t).dim();
    if (first != 0 || last != 0) {
      report.note("t = " + std::to_string(t) + ": window ends are nonempty, skipped");
      continue;
    }
    long long chi = 0;
    for (int p = w.config.p_min; p <= w.config.p_max + 1; ++p)
      chi += parity_sign(p) * static_cast<long long>(slice_space(w.config, p, t).dim());
    report.add("alternating dimension sum vanishes", {t}, chi == 0, chi == 0 ? "" : "sum = " + std::to_string(chi));
  }
  return report;
}

Report generator_degree_checks(const TateWindow& w, int p) {
  const TateConfig& cfg = w.config;
  if (cfg.subspace) throw InvalidInput("generator-degree checks apply to full-W windows only");
  Report report("generators");
  const int N = cfg.ambient_dim();
  const int t = N - cfg.n + p;
  const int s = cfg.rho() - cfg.twist(p);
  const ExactMatrix* slice = w.slice(p, t);
  if (!slice) {
    report.add("generator slice present", {p, t}, false, "window lacks slice (p, t)");
    return report;
  }
  const SliceSpace dom = slice_space(cfg, p, t);
  const SliceSpace cod = slice_space(cfg, p + 1, t);
  if (s < 0) {
    report.add("top summand empty", {p, t}, dom.top.dim() == 0, "vacuous: rho - a < 0");
    return report;
  }
  const ExactMatrix top_cols = slice->block(0, 0, cod.dim(), dom.top.dim());
  const ExactMatrix beta = slice->block(0, dom.top.dim(), cod.dim(), dom.bottom.dim());
  const std::size_t top_dim = dom.top.dim();
  if (s < cfg.d) {
    const ExactMatrix B = slice->block(cod.top.dim(), 0, cod.bottom.dim(), top_dim);
    const ExactMatrix beta_only = slice->block(cod.top.dim(), top_dim, cod.bottom.dim(), dom.bottom.dim());
    const std::size_t rb = rank(B);
    report.add("B_p injective", {p, t}, rb == top_dim, "rank " + std::to_string(rb) + " of " + std::to_string(top_dim));
    const std::size_t meet = intersection_dim(B, beta_only);
    report.add("Im B_p meets Im beta_p trivially", {p, t}, meet == 0, "intersection dim " + std::to_string(meet));
    return report;
  }
  const ExactMatrix alpha = slice->block(0, 0, cod.top.dim(), top_dim);
  const std::size_t ra = rank(alpha);
  report.add("alpha_p injective", {p, t}, ra == top_dim, "rank " + std::to_string(ra) + " of " + std::to_string(top_dim));
  const std::size_t rt = rank(top_cols);
  report.add("alpha_p + (-1)^p B_p injective", {p, t}, rt == top_dim,
             "rank " + std::to_string(rt) + " of " + std::to_string(top_dim));
  const std::size_t meet = intersection_dim(top_cols, beta);
  report.add("image meets Im beta_p trivially", {p, t}, meet == 0, "intersection dim " + std::to_string(meet));
  return report;
}

Report mapping_cone_check(const TateConfig& cfg, int p, int t) {
  TateBuilder b(cfg);
  Report report("mapping cone");
  report.add(timed([&] {
    const ExactMatrix lhs = b.bezout_map_slice(p + 1, t) * b.alpha_slice(p, t);
    const ExactMatrix rhs = b.beta_slice(p + 1, t) * b.bezout_map_slice(p, t);
    const bool ok = lhs == rhs;
    return CheckResult{"B_{p+1} alpha_p = beta_{p+1} B_p", {p, t}, ok ? Status::pass : Status::fail,
                       lhs.rows() * lhs.cols() == 0 ? "vacuous" : (ok ? "" : "squares differ"), 0.0};
  }));
  return report;
}

Report mapping_cone_check(const TateWindow& w, int p, int t) {
  const TateConfig& cfg = w.config;
  Report report("mapping cone");
  const ExactMatrix* first = w.slice(p, t);
  const ExactMatrix* second = w.slice(p + 1, t);
  if (!first || !second) {
    report.add("B_{p+1} alpha_p = beta_{p+1} B_p", {p, t}, false, "slice missing");
    return report;
  }
  const SliceSpace s0 = slice_space(cfg, p, t);
  const SliceSpace s1 = slice_space(cfg, p + 1, t);
  const SliceSpace s2 = slice_space(cfg, p + 2, t);
  const Field& k = cfg.field;
  const ExactMatrix alpha = first->block(0, 0, s1.top.dim(), s0.top.dim());
  const ExactMatrix b0 = first->block(s1.top.dim(), 0, s1.bottom.dim(), s0.top.dim())
                             .scaled(sign_scalar(k, block_sign(cfg.variant, p)));
  const ExactMatrix b1 = second->block(s2.top.dim(), 0, s2.bottom.dim(), s1.top.dim())
                             .scaled(sign_scalar(k, block_sign(cfg.variant, p + 1)));
  const ExactMatrix beta = second->block(s2.top.dim(), s1.top.dim(), s2.bottom.dim(), s1.bottom.dim());
  const bool ok = b1 * alpha == beta * b0;
  report.add("B_{p+1} alpha_p = beta_{p+1} B_p", {p, t}, ok, ok ? "" : "squares differ");
  return report;
}

}  // namespace beztate
