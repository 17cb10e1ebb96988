#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rotor {

using Int = mpz_class;
using IntVector = std::vector<Int>;

// Dense row-major matrix over the integers with arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  void set_row(std::size_t i, const IntVector& v);
  void append_row(const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  IntMatrix col_range(std::size_t begin, std::size_t end) const;

  bool is_zero() const;
  Int max_abs() const;

  // Row operations used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(const IntMatrix& a, const Int& s);

// Row vector times matrix.
IntVector row_times(const IntVector& v, const IntMatrix& m);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
IntVector vec_from(const std::vector<long>& v);
std::vector<long> to_long(const IntVector& v);
std::string to_string(const IntVector& v);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
IntMatrix mod_matrix(const IntMatrix& a, const Int& m);  // entries in [0, m)

// Fraction-free determinant (Bareiss) and rank over the rationals.
Int determinant(const IntMatrix& a);
std::size_t rank_q(const IntMatrix& a);
// Rank over the prime field F_p.
std::size_t rank_mod_p(const IntMatrix& a, long p);

}  // namespace rotor
