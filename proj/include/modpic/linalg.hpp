#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modpic/rational.hpp"

namespace modpic {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Dense exact-rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& row);
  void append_rows(const RationalMatrix& other);
  RationalMatrix select_columns(const std::vector<std::size_t>& cols) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  RationalMatrix rref;              // reduced row echelon form, zero rows dropped
};

// Bareiss fraction-free elimination on the row-wise integer scaling of m,
// then back-substitution to the reduced form.  The reduced form is unique,
// so the result does not depend on the order of the rows.
Echelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Null space basis {v : m v = 0}, one vector per free column, each scaled to
// a primitive integer vector whose first nonzero entry is positive.
std::vector<IntegerVector> kernel(const RationalMatrix& m);

// Functionals vanishing on span(vectors), as rows; `dim` is the ambient
// dimension.
std::vector<RationalVector> annihilator(const std::vector<RationalVector>& vectors,
                                        std::size_t dim);

RationalVector to_rational(const IntegerVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const RationalMatrix& m);

}  // namespace modpic
