#include "repvar/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace repvar {

namespace {

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  return mod_pow(a, p - 2, p);
}

std::uint32_t to_residue(const mpq_class& q, std::uint32_t p) {
  mpz_class n = q.get_num() % p;
  if (n < 0) n += p;
  mpz_class d = q.get_den() % p;
  if (d < 0) d += p;
  if (d == 0) throw BadParameters("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  auto nn = static_cast<std::uint32_t>(n.get_ui());
  auto dd = static_cast<std::uint32_t>(d.get_ui());
  return mod_mul(nn, mod_inv(dd, p), p);
}

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Field operations for the elimination kernels.
struct FpOps {
  std::uint32_t p;
  using E = std::uint32_t;
  bool zero(E a) const { return a == 0; }
  E add(E a, E b) const { return mod_add(a, b, p); }
  E sub(E a, E b) const { return mod_sub(a, b, p); }
  E mul(E a, E b) const { return mod_mul(a, b, p); }
  E inv(E a) const { return mod_inv(a, p); }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E one() const { return 1; }
  // Partial pivoting: the first nonzero entry wins.
  static constexpr bool kFullPivot = false;
  std::size_t weight(const E&) const { return 0; }
};

struct QOps {
  using E = mpq_class;
  bool zero(const E& a) const { return sgn(a) == 0; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return E(1) / a; }
  E neg(const E& a) const { return -a; }
  E one() const { return E(1); }
  static constexpr bool kFullPivot = true;
  std::size_t weight(const E& a) const {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }
};

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Gauss-Jordan elimination in place on a row-major rows x cols array. Only
// the first `search_cols` columns are eligible as pivots. Pivot rows are
// normalised to 1 and their columns cleared in every other row. Rows are
// permuted so that pivot k sits in row k.
template <class Ops>
std::vector<Pivot> gauss_jordan(const Ops& ops, std::vector<typename Ops::E>& a, std::size_t rows, std::size_t cols,
                                std::size_t search_cols, bool full_pivot = Ops::kFullPivot) {
  using E = typename Ops::E;
  std::vector<Pivot> pivots;
  std::vector<char> used_col(search_cols, 0);
  auto at = [&](std::size_t i, std::size_t j) -> E& { return a[i * cols + j]; };
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  };
  std::size_t r = 0;
  std::size_t next_col = 0;
  while (r < rows) {
    std::size_t pr = rows, pc = search_cols;
    if (full_pivot) {
      std::size_t best = 0;
      for (std::size_t j = 0; j < search_cols; ++j) {
        if (used_col[j]) continue;
        for (std::size_t i = r; i < rows; ++i) {
          if (ops.zero(at(i, j))) continue;
          std::size_t w = ops.weight(at(i, j));
          if (pr == rows || w < best) {
            best = w;
            pr = i;
            pc = j;
          }
        }
      }
    } else {
      for (; next_col < search_cols && pr == rows; ++next_col) {
        for (std::size_t i = r; i < rows; ++i) {
          if (!ops.zero(at(i, next_col))) {
            pr = i;
            pc = next_col;
            break;
          }
        }
      }
    }
    if (pr == rows) break;
    used_col[pc] = 1;
    swap_rows(r, pr);
    E inv = ops.inv(at(r, pc));
    for (std::size_t j = 0; j < cols; ++j)
      if (!ops.zero(at(r, j))) at(r, j) = ops.mul(at(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.zero(at(i, pc))) continue;
      E f = at(i, pc);
      for (std::size_t j = 0; j < cols; ++j) {
        if (ops.zero(at(r, j))) continue;
        at(i, j) = ops.sub(at(i, j), ops.mul(f, at(r, j)));
      }
    }
    pivots.push_back({r, pc});
    ++r;
  }
  return pivots;
}

}  // namespace

// Grants the free functions below access to Mat storage.
struct MatAccess {
  static std::vector<std::uint32_t>& fp(Mat& m) { return m.fp_; }
  static const std::vector<std::uint32_t>& fp(const Mat& m) { return m.fp_; }
  static std::vector<mpq_class>& q(Mat& m) { return m.q_; }
  static const std::vector<mpq_class>& q(const Mat& m) { return m.q_; }
};

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) throw BadParameters("not a supported prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_prime()) {
    long m = v % static_cast<long>(f.characteristic());
    if (m < 0) m += f.characteristic();
    r_ = static_cast<std::uint32_t>(m);
  } else {
    q_ = v;
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_prime()) {
    r_ = to_residue(q, f.characteristic());
  } else if (sgn(q.get_den()) < 0) {
    // mpq_set cannot copy a negative denominator; go through the integers.
    q_ = mpq_class(mpz_class(-q.get_num()), mpz_class(-q.get_den()));
    q_.canonicalize();
  } else {
    q_ = q;
    q_.canonicalize();
  }
}

Scalar Scalar::residue(Field f, std::uint32_t r) {
  Scalar s;
  s.field_ = f;
  s.r_ = r % f.characteristic();
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? r_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? r_ == 1 : q_ == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_prime()) return residue(field_, mod_inv(r_, field_.characteristic()));
  return Scalar(field_, mpq_class(1) / q_);
}

std::string Scalar::to_string() const { return field_.is_prime() ? std::to_string(r_) : q_.get_str(); }

static void check_same(const Field& a, const Field& b) {
  if (!(a == b)) throw ShapeError("field mismatch: " + a.name() + " vs " + b.name());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a.field_, b.field_);
  if (a.field_.is_prime()) return Scalar::residue(a.field_, mod_add(a.r_, b.r_, a.field_.characteristic()));
  return Scalar(a.field_, mpq_class(a.q_ + b.q_));
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same(a.field_, b.field_);
  if (a.field_.is_prime()) return Scalar::residue(a.field_, mod_sub(a.r_, b.r_, a.field_.characteristic()));
  return Scalar(a.field_, mpq_class(a.q_ - b.q_));
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a.field_, b.field_);
  if (a.field_.is_prime()) return Scalar::residue(a.field_, mod_mul(a.r_, b.r_, a.field_.characteristic()));
  return Scalar(a.field_, mpq_class(a.q_ * b.q_));
}
Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
Scalar Scalar::operator-() const { return Scalar(field_, 0L) - *this; }
bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime() ? a.r_ == b.r_ : a.q_ == b.q_;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    fp_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) throw ShapeError("entry count does not match shape");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

Mat Mat::random(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  if (f.is_prime()) {
    for (auto& e : m.fp_) e = static_cast<std::uint32_t>(draw(rng, f.characteristic()));
  } else {
    for (auto& e : m.q_) e = static_cast<long>(draw(rng, 21)) - 10;
  }
  return m;
}

Mat Mat::unit_column(Field f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m.set(i, 0, 1L);
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
  if (field_.is_prime()) return Scalar::residue(field_, fp_[i * cols_ + j]);
  return Scalar(field_, q_[i * cols_ + j]);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
  check_same(field_, v.field());
  if (field_.is_prime())
    fp_[i * cols_ + j] = v.residue();
  else
    q_[i * cols_ + j] = v.rational();
}

void Mat::set(std::size_t i, std::size_t j, long v) { set(i, j, Scalar(field_, v)); }

bool Mat::entry_is_zero(std::size_t i, std::size_t j) const {
  return field_.is_prime() ? fp_[i * cols_ + j] == 0 : sgn(q_[i * cols_ + j]) == 0;
}

void Mat::add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  check_same(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    for (std::size_t k = 0; k < fp_.size(); ++k) fp_[k] = mod_add(fp_[k], o.fp_[k], p);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) q_[k] += o.q_[k];
  }
  return *this;
}

Mat Mat::operator-() const {
  Mat r = *this;
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    for (auto& e : r.fp_) e = e == 0 ? 0 : p - e;
  } else {
    for (auto& e : r.q_) e = -e;
  }
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator*(const Mat& o) const {
  check_same(field_, o.field_);
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = fp_[i * cols_ + k];
        if (a == 0) continue;
        const std::uint32_t* row = o.fp_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r.fp_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const mpq_class& b = o.q_[k * o.cols_ + j];
          if (sgn(b) != 0) r.q_[i * o.cols_ + j] += a * b;
        }
      }
  }
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  check_same(field_, c.field());
  Mat r = *this;
  if (field_.is_prime()) {
    for (auto& e : r.fp_) e = mod_mul(e, c.residue(), field_.characteristic());
  } else {
    for (auto& e : r.q_) e *= c.rational();
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.fp_[j * rows_ + i] = fp_[i * cols_ + j];
      else
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Mat r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_prime())
        r.fp_[i * nc + j] = fp_[(r0 + i) * cols_ + c0 + j];
      else
        r.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
    }
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  check_same(field_, b.field_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_prime())
        fp_[(r0 + i) * cols_ + c0 + j] = b.fp_[i * b.cols_ + j];
      else
        q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
    }
}

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
  Mat r(field_, rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) r.set_block(0, k, column(cols[k]));
  return r;
}

bool Mat::is_zero() const {
  if (field_.is_prime()) return std::all_of(fp_.begin(), fp_.end(), [](auto e) { return e == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const mpq_class& e) { return sgn(e) == 0; });
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ && a.q_ == b.q_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat hstack(const std::vector<Mat>& blocks, Field f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack row mismatch");
    cols += b.cols();
  }
  Mat r(f, rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols();
  }
  return r;
}

Mat vstack(const std::vector<Mat>& blocks, Field f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack column mismatch");
    rows += b.rows();
  }
  Mat r(f, rows, cols);
  std::size_t k = 0;
  for (const auto& b : blocks) {
    r.set_block(k, 0, b);
    k += b.rows();
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  check_same(a.field(), b.field());
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.entry_is_zero(i, j)) continue;
      r.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
    }
  return r;
}

Mat diag_sum(const Mat& a, const Mat& b) {
  check_same(a.field(), b.field());
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Mat vec(const Mat& a) {
  Mat r(a.field(), a.rows() * a.cols(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j) r.set_block(j * a.rows(), 0, a.column(j));
  return r;
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols, std::size_t offset) {
  if (v.cols() != 1 || offset + rows * cols > v.rows()) throw ShapeError("unvec shape mismatch");
  Mat r(v.field(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    if (rows) r.set_block(0, j, v.block(offset + j * rows, 0, rows, 1));
  return r;
}

// ---------------------------------------------------------------- elimination

namespace {

template <class F>
decltype(auto) with_ops(const Mat& m, F&& f) {
  if (m.field().is_prime()) {
    FpOps ops{m.field().characteristic()};
    auto a = MatAccess::fp(m);
    return f(ops, a);
  }
  QOps ops;
  auto a = MatAccess::q(m);
  return f(ops, a);
}

}  // namespace

Mat kernel_basis(const Mat& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Mat out(a.field(), cols, 0);
  return with_ops(a, [&](const auto& ops, auto& data) {
    auto piv = gauss_jordan(ops, data, rows, cols, cols);
    std::vector<long> pivot_row_of(cols, -1);
    for (const auto& p : piv) pivot_row_of[p.col] = static_cast<long>(p.row);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (pivot_row_of[j] < 0) free_cols.push_back(j);
    Mat k(a.field(), cols, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      std::size_t fc = free_cols[f];
      k.set(fc, f, 1L);
      for (const auto& p : piv) {
        const auto& e = data[p.row * cols + fc];
        if (ops.zero(e)) continue;
        if constexpr (std::is_same_v<std::decay_t<decltype(ops)>, FpOps>)
          k.set(p.col, f, Scalar::residue(a.field(), ops.neg(e)));
        else
          k.set(p.col, f, Scalar(a.field(), mpq_class(ops.neg(e))));
      }
    }
    return k;
  });
}

std::size_t rank(const Mat& a) {
  return with_ops(a, [&](const auto& ops, auto& data) {
    return gauss_jordan(ops, data, a.rows(), a.cols(), a.cols()).size();
  });
}

std::vector<std::size_t> independent_columns(const Mat& a) {
  // Partial pivoting scans columns left to right, so pivots are the leftmost basis.
  return with_ops(a, [&](const auto& ops, auto& data) {
    auto piv = gauss_jordan(ops, data, a.rows(), a.cols(), a.cols(), false);
    std::vector<std::size_t> cols;
    for (const auto& p : piv) cols.push_back(p.col);
    return cols;
  });
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) throw ShapeError("solve: right-hand side shape mismatch");
  Mat aug = hstack({a, b}, a.field(), a.rows());
  const std::size_t rows = a.rows(), cols = a.cols() + 1;
  return with_ops(aug, [&](const auto& ops, auto& data) -> std::optional<Mat> {
    auto piv = gauss_jordan(ops, data, rows, cols, a.cols());
    for (std::size_t i = piv.size(); i < rows; ++i)
      if (!ops.zero(data[i * cols + a.cols()])) return std::nullopt;
    Mat x(a.field(), a.cols(), 1);
    for (const auto& p : piv) {
      const auto& e = data[p.row * cols + a.cols()];
      if constexpr (std::is_same_v<std::decay_t<decltype(ops)>, FpOps>)
        x.set(p.col, 0, Scalar::residue(a.field(), e));
      else
        x.set(p.col, 0, Scalar(a.field(), mpq_class(e)));
    }
    return x;
  });
}

std::optional<Mat> inverse(const Mat& a) {
  if (!a.is_square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Mat aug = hstack({a, Mat::identity(a.field(), n)}, a.field(), n);
  return with_ops(aug, [&](const auto& ops, auto& data) -> std::optional<Mat> {
    auto piv = gauss_jordan(ops, data, n, 2 * n, n);
    if (piv.size() < n) return std::nullopt;
    Mat inv(a.field(), n, n);
    for (const auto& p : piv)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = data[p.row * 2 * n + n + j];
        if constexpr (std::is_same_v<std::decay_t<decltype(ops)>, FpOps>)
          inv.set(p.col, j, Scalar::residue(a.field(), e));
        else
          inv.set(p.col, j, Scalar(a.field(), mpq_class(e)));
      }
    return inv;
  });
}

Scalar determinant(const Mat& a) {
  if (!a.is_square()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  Scalar det(a.field(), 1L);
  Mat m = a;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m.entry_is_zero(r, c)) {
        pr = r;
        break;
      }
    if (pr == n) return Scalar(a.field(), 0L);
    if (pr != c) {
      Mat rc = m.block(c, 0, 1, n), rp = m.block(pr, 0, 1, n);
      m.set_block(c, 0, rp);
      m.set_block(pr, 0, rc);
      det = -det;
    }
    Scalar piv = m.at(c, c);
    det = det * piv;
    Scalar inv = piv.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.entry_is_zero(r, c)) continue;
      Scalar f = m.at(r, c) * inv;
      m.set_block(r, 0, m.block(r, 0, 1, n) - m.block(c, 0, 1, n).scaled(f));
    }
  }
  return det;
}

// ---------------------------------------------------------------- TMat

TMat::TMat(Field f, std::size_t order, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), coeffs_(order, Mat(f, rows, cols)) {
  if (order == 0) throw BadParameters("truncation order must be positive");
}

TMat TMat::constant(const Mat& m, std::size_t order) {
  TMat r(m.field(), order, m.rows(), m.cols());
  r.coeffs_[0] = m;
  return r;
}

TMat TMat::identity(Field f, std::size_t order, std::size_t n) { return constant(Mat::identity(f, n), order); }

static void check_compatible(const TMat& a, const TMat& b) {
  check_same(a.field(), b.field());
  if (a.order() != b.order()) throw ShapeError("truncation orders differ");
}

TMat TMat::operator+(const TMat& o) const {
  check_compatible(*this, o);
  TMat r = *this;
  for (std::size_t k = 0; k < order(); ++k) r.coeffs_[k] += o.coeffs_[k];
  return r;
}

TMat TMat::operator-(const TMat& o) const { return *this + o.scaled(Scalar(field_, -1L)); }

TMat TMat::operator*(const TMat& o) const {
  check_compatible(*this, o);
  if (cols_ != o.rows_) throw ShapeError("truncated product shape mismatch");
  TMat r(field_, order(), rows_, o.cols_);
  for (std::size_t i = 0; i < order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TMat TMat::scaled(const Scalar& c) const {
  TMat r = *this;
  for (auto& m : r.coeffs_) m = m.scaled(c);
  return r;
}

TMat TMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  TMat r(field_, order(), nr, nc);
  for (std::size_t k = 0; k < order(); ++k) r.coeffs_[k] = coeffs_[k].block(r0, c0, nr, nc);
  return r;
}

void TMat::set_block(std::size_t r0, std::size_t c0, const TMat& b) {
  check_compatible(*this, b);
  for (std::size_t k = 0; k < order(); ++k) coeffs_[k].set_block(r0, c0, b.coeffs_[k]);
}

TMat TMat::truncate(std::size_t k) const {
  if (k == 0 || k > order()) throw BadParameters("bad truncation order");
  TMat r(field_, k, rows_, cols_);
  for (std::size_t i = 0; i < k; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

bool TMat::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Mat& m) { return m.is_zero(); });
}

std::size_t TMat::valuation() const {
  for (std::size_t k = 0; k < order(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return order();
}

bool operator==(const TMat& a, const TMat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
}

Mat TMat::unfold() const {
  const std::size_t n = order();
  Mat r(field_, n * rows_, n * cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) r.set_block(i * rows_, j * cols_, coeffs_[i - j]);
  return r;
}

std::size_t rank_k_truncated(const TMat& a) { return rank(a.unfold()); }

Mat kernel_basis(const TMat& a) {
  if (a.order() != 1) throw NotAField("k[t]/(t^" + std::to_string(a.order()) + ") is not a field");
  return kernel_basis(a.coeff(0));
}

std::optional<TMat> inverse(const TMat& a) {
  // Invertible iff the constant term is; higher coefficients by recursion on k.
  auto c0inv = inverse(a.coeff(0));
  if (!c0inv) return std::nullopt;
  const std::size_t n = a.order();
  TMat r(a.field(), n, a.rows(), a.cols());
  r.coeff(0) = *c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Mat acc(a.field(), a.rows(), a.cols());
    for (std::size_t i = 1; i <= k; ++i) acc += a.coeff(i) * r.coeff(k - i);
    r.coeff(k) = -(*c0inv * acc);
  }
  return r;
}

}  // namespace repvar
