#include "modpic/linalg.hpp"

#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RationalMatrix::append_row(const RationalVector& row) {
  if (row.size() != cols_) throw OutOfRange("row length does not match column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void RationalMatrix::append_rows(const RationalMatrix& other) {
  if (other.cols_ != cols_) throw OutOfRange("column counts differ");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  return out;
}

namespace {

using IntegerMatrix = std::vector<IntegerVector>;

IntegerMatrix integer_rows(const RationalMatrix& m) {
  IntegerMatrix out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& den = m(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    IntegerVector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      row[c] = q.get_num() * (l / q.get_den());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// In-place Bareiss elimination to echelon form; returns pivot columns.
std::vector<std::size_t> bareiss(IntegerMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(const RationalMatrix& m) {
  IntegerMatrix a = integer_rows(m);
  Echelon out;
  out.pivots = bareiss(a, m.cols());
  const std::size_t rk = out.pivots.size();
  out.rref = RationalMatrix(rk, m.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.rref(r, c) = Rational(a[r][c]);
  // Normalize pivots and clear above them.
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = out.pivots[r];
    const Rational inv = 1 / out.rref(r, pc);
    for (std::size_t c = pc; c < m.cols(); ++c) out.rref(r, c) *= inv;
    for (std::size_t above = 0; above < r; ++above) {
      const Rational f = out.rref(above, pc);
      if (f == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) out.rref(above, c) -= f * out.rref(r, c);
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix a = integer_rows(m);
  return bareiss(a, m.cols()).size();
}

namespace {

IntegerVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  IntegerVector out(v.size());
  Integer gcd = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].get_num() * (l / v[k].get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[k].get_mpz_t());
  }
  if (gcd == 0) return out;
  int sign = 1;
  for (const auto& z : out) {
    if (z != 0) {
      sign = z < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& z : out) {
    z /= gcd;
    if (sign < 0) z = -z;
  }
  return out;
}

}  // namespace

std::vector<IntegerVector> kernel(const RationalMatrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<IntegerVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    out.push_back(primitive(v));
  }
  return out;
}

std::vector<RationalVector> annihilator(const std::vector<RationalVector>& vectors,
                                        std::size_t dim) {
  RationalMatrix m = RationalMatrix::from_rows(vectors, dim);
  std::vector<RationalVector> out;
  for (const auto& v : kernel(m)) out.push_back(to_rational(v));
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw OutOfRange("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace modpic
