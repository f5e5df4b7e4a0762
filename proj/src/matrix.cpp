#include "beztate/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace beztate {

namespace {

void require_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument(std::string(op) + ": matrices over different fields");
}

// Dense residues mod p, row-major.
struct ModDense {
  std::size_t rows;
  std::size_t cols;
  std::uint64_t p;
  std::vector<std::uint32_t> a;

  std::uint32_t* row(std::size_t r) { return a.data() + r * cols; }
};

ModDense to_mod_dense(const ExactMatrix& m) {
  ModDense d{m.rows(), m.cols(), m.field().modulus(), std::vector<std::uint32_t>(m.rows() * m.cols(), 0)};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d.a[r * d.cols + c] = m.field().residue(v);
  return d;
}

// In-place Gauss-Jordan (or forward-only) elimination over GF(p).  The
// pivot row is scanned once for its nonzero support so sparse rows stay
// cheap to subtract.
std::vector<std::size_t> eliminate_mod(ModDense& d, bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t rank = 0;
  const std::uint64_t p = d.p;
  for (std::size_t c = 0; c < d.cols && rank < d.rows; ++c) {
    std::size_t piv = rank;
    while (piv < d.rows && d.a[piv * d.cols + c] == 0) ++piv;
    if (piv == d.rows) continue;
    if (piv != rank)
      std::swap_ranges(d.row(piv), d.row(piv) + d.cols, d.row(rank));
    std::uint32_t* prow = d.row(rank);
    std::uint64_t inv = pow_mod(prow[c], p - 2, p);
    support.clear();
    for (std::size_t j = c; j < d.cols; ++j) {
      if (prow[j] == 0) continue;
      prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
      support.push_back(j);
    }
    const std::size_t start = reduce_above ? 0 : rank + 1;
    for (std::size_t r = start; r < d.rows; ++r) {
      if (r == rank) continue;
      std::uint32_t* row = d.row(r);
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j : support) row[j] = static_cast<std::uint32_t>((row[j] + nf * prow[j]) % p);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

struct RationalDense {
  std::size_t rows;
  std::size_t cols;
  std::vector<mpq_class> a;

  mpq_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

std::vector<std::size_t> gauss_jordan_rational(RationalDense& d) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d.cols && rank < d.rows; ++c) {
    std::size_t piv = rank;
    while (piv < d.rows && sgn(d.at(piv, c)) == 0) ++piv;
    if (piv == d.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(piv, j), d.at(rank, j));
    mpq_class inv = 1 / d.at(rank, c);
    for (std::size_t j = c; j < d.cols; ++j) d.at(rank, j) *= inv;
    for (std::size_t r = 0; r < d.rows; ++r) {
      if (r == rank || sgn(d.at(r, c)) == 0) continue;
      mpq_class f = d.at(r, c);
      for (std::size_t j = c; j < d.cols; ++j)
        if (sgn(d.at(rank, j)) != 0) d.at(r, j) -= f * d.at(rank, j);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

// Fraction-free (Bareiss) forward elimination on an integer matrix obtained
// by clearing denominators row by row.  Every division is exact.
std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm(1);
    for (const auto& [c, v] : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.value().get_den_mpz_t());
    for (const auto& [c, v] : m.row(r)) a[r * cols + c] = v.value().get_num() * (lcm / v.value().get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
  mpz_class prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const mpz_class pivot = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class lead = at(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = at(r, j) * pivot - lead * at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(r, j) = std::move(v);
      }
      at(r, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix ExactMatrix::identity(Field field, std::size_t size) {
  ExactMatrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, field.one());
  return m;
}

ExactMatrix ExactMatrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  ExactMatrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void ExactMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? field_.zero() : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  if (v.is_zero())
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  check_index(r, c);
  auto it = data_[r].find(c);
  if (it == data_[r].end()) {
    data_[r].emplace(c, v);
    return;
  }
  it->second = field_.add(it->second, v);
  if (it->second.is_zero()) data_[r].erase(it);
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
  ExactMatrix out(field_, rows_, cols_);
  if (s.is_zero()) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace(c, field_.mul(v, s));
  return out;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("block exceeds matrix");
  ExactMatrix out(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    const Row& src = data_[r0 + r];
    for (auto it = src.lower_bound(c0); it != src.end() && it->first < c0 + ncols; ++it)
      out.data_[r].emplace(it->first - c0, it->second);
  }
  return out;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("set_block exceeds matrix");
  for (std::size_t r = 0; r < src.rows_; ++r) {
    Row& dst = data_[r0 + r];
    auto first = dst.lower_bound(c0);
    auto last = dst.lower_bound(c0 + src.cols_);
    dst.erase(first, last);
    for (const auto& [c, v] : src.data_[r]) dst.emplace(c0 + c, v);
  }
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  const Field& k = a.field();
  ExactMatrix out(k, a.rows(), b.cols());
  if (k.is_prime_field()) {
    const std::uint64_t p = k.modulus();
    std::vector<std::uint64_t> acc(b.cols(), 0);
    std::vector<std::size_t> touched;
    std::vector<char> seen(b.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      touched.clear();
      for (const auto& [kk, av] : a.row(r)) {
        const std::uint64_t x = k.residue(av);
        for (const auto& [c, bv] : b.row(kk)) {
          acc[c] = (acc[c] + x * k.residue(bv)) % p;
          if (!seen[c]) {
            seen[c] = 1;
            touched.push_back(c);
          }
        }
      }
      for (std::size_t c : touched) {
        if (acc[c] != 0) out.set(r, c, k.from_residue(acc[c]));
        acc[c] = 0;
        seen[c] = 0;
      }
    }
    return out;
  }
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [kk, av] : a.row(r))
      for (const auto& [c, bv] : b.row(kk)) out.add_to(r, c, k.mul(av, bv));
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row(r)) out.add_to(r, c, v);
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + b.scaled(b.field().neg(b.field().one()));
}

Vector apply(const ExactMatrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: vector length mismatch");
  const Field& k = m.field();
  Vector out(m.rows(), k.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r))
      if (!v[c].is_zero()) out[r] = k.add(out[r], k.mul(x, v[c]));
  return out;
}

ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right) {
  require_same_field(left, right, "hconcat");
  if (left.rows() != right.rows()) throw std::invalid_argument("hconcat: row mismatch");
  ExactMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom) {
  require_same_field(top, bottom, "vconcat");
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vconcat: column mismatch");
  ExactMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

RowEchelon rref(const ExactMatrix& m) {
  const Field& k = m.field();
  RowEchelon result{ExactMatrix(k, m.rows(), m.cols()), {}};
  if (k.is_prime_field()) {
    ModDense d = to_mod_dense(m);
    result.pivot_columns = eliminate_mod(d, true);
    for (std::size_t r = 0; r < d.rows; ++r)
      for (std::size_t c = 0; c < d.cols; ++c)
        if (d.a[r * d.cols + c] != 0) result.reduced.set(r, c, k.from_residue(d.a[r * d.cols + c]));
    return result;
  }
  RationalDense d{m.rows(), m.cols(), std::vector<mpq_class>(m.rows() * m.cols(), 0)};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d.at(r, c) = v.value();
  result.pivot_columns = gauss_jordan_rational(d);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c)
      if (sgn(d.at(r, c)) != 0) result.reduced.set(r, c, k.from_rational(d.at(r, c)));
  return result;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  if (m.field().is_prime_field()) {
    // Eliminate along the longer dimension so rows stay short.
    ModDense d = m.rows() < m.cols() ? to_mod_dense(m.transpose()) : to_mod_dense(m);
    return eliminate_mod(d, false).size();
  }
  return bareiss_rank(m);
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const Field& k = m.field();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = k.neg(e.reduced.at(i, f));
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  RowEchelon ker = rref(ExactMatrix::from_rows(k, m.cols(), raw));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ker.pivot_columns.size(); ++i) {
    Vector v(m.cols(), k.zero());
    for (const auto& [c, x] : ker.reduced.row(i)) v[c] = x;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const ExactMatrix& m) {
  const Field& k = m.field();
  RowEchelon e = rref(m.transpose());
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    Vector v(m.rows(), k.zero());
    for (const auto& [c, x] : e.reduced.row(i)) v[c] = x;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_nondegenerate_pairing(const ExactMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::size_t intersection_dim(const ExactMatrix& a, const ExactMatrix& b) {
  return rank(a) + rank(b) - rank(hconcat(a, b));
}

}  // namespace beztate
