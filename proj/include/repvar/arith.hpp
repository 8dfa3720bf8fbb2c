#pragma once

// Exact linear algebra over Q, GF(p) and truncated polynomial rings k[t]/(t^n).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "repvar/errors.hpp"

namespace repvar {

using Rng = std::mt19937_64;

// Uniform draw in [0, bound). Avoids std::uniform_int_distribution so that
// streams are identical across standard libraries.
inline std::uint64_t draw(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

class Field {
 public:
  Field() = default;  // the rationals
  static Field rationals() noexcept { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// An element of Q or GF(p). Rationals are kept canonical (lowest terms,
// positive denominator); residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& q);
  static Scalar residue(Field f, std::uint32_t r);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t residue() const noexcept { return r_; }
  const mpq_class& rational() const noexcept { return q_; }
  Scalar inverse() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Field field_;
  std::uint32_t r_ = 0;
  mpq_class q_;
};

// Dense row-major matrix over a field.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Mat from_rows(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);
  static Mat random(Field f, std::size_t rows, std::size_t cols, Rng& rng);
  static Mat unit_column(Field f, std::size_t n, std::size_t i);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set(std::size_t i, std::size_t j, long v);
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  // Adds c * v to entry (i, j).
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& c) const;
  Mat& operator+=(const Mat& o);

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat column(std::size_t j) const { return block(0, j, rows_, 1); }
  Mat select_columns(const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  friend bool operator==(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  friend struct MatAccess;
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

Mat hstack(const std::vector<Mat>& blocks, Field f, std::size_t rows);
Mat vstack(const std::vector<Mat>& blocks, Field f, std::size_t cols);
Mat kron(const Mat& a, const Mat& b);
// Block diagonal sum.
Mat diag_sum(const Mat& a, const Mat& b);

// Column-major vectorisation: vec(A X B) = (B^T kron A) vec(X).
Mat vec(const Mat& a);
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols, std::size_t offset = 0);

// Columns form a basis of {v : A v = 0}.
Mat kernel_basis(const Mat& a);
std::size_t rank(const Mat& a);
// A x = b, with b a single column. Absent when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Indices of a maximal independent set of columns, chosen left to right.
std::vector<std::size_t> independent_columns(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
Scalar determinant(const Mat& a);

// Matrix over k[t]/(t^n): A = C_0 + t C_1 + ... + t^{n-1} C_{n-1}.
class TMat {
 public:
  TMat() = default;
  TMat(Field f, std::size_t order, std::size_t rows, std::size_t cols);
  static TMat constant(const Mat& m, std::size_t order);
  static TMat identity(Field f, std::size_t order, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Mat& coeff(std::size_t k) const { return coeffs_.at(k); }
  Mat& coeff(std::size_t k) { return coeffs_.at(k); }

  TMat operator+(const TMat& o) const;
  TMat operator-(const TMat& o) const;
  TMat operator*(const TMat& o) const;
  TMat scaled(const Scalar& c) const;
  TMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const TMat& b);
  // Image in k[t]/(t^k), k <= order.
  TMat truncate(std::size_t k) const;
  bool is_zero() const;
  // Largest j with t^j dividing every entry (order() when zero).
  std::size_t valuation() const;
  friend bool operator==(const TMat& a, const TMat& b);

  // The k-linear map on k^{n cols} -> k^{n rows}, coefficient-major blocks.
  Mat unfold() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Mat> coeffs_;
};

// k-dimension of the image of a k[t]/(t^n)-matrix.
std::size_t rank_k_truncated(const TMat& a);
// Only defined when the ring is a field (order 1).
Mat kernel_basis(const TMat& a);
std::optional<TMat> inverse(const TMat& a);

}  // namespace repvar
