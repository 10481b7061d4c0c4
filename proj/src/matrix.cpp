#include "bdm/matrix.hpp"

#include <stdexcept>

#include "bdm/errors.hpp"

namespace bdm {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(size_t i) const {
  IntVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::col(size_t j) const {
  IntVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dim mismatch");
  IntMatrix p(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("dim mismatch");
  IntVec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatVec IntMatrix::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("dim mismatch");
  RatVec r(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
  return r;
}

IntMatrix IntMatrix::select_cols(const std::vector<size_t>& cols) const {
  IntMatrix s(rows_, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw std::invalid_argument("column index out of range");
    for (size_t i = 0; i < rows_; ++i) s.at(i, j) = at(i, cols[j]);
  }
  return s;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, size_t ncols) {
  IntMatrix m(rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("ragged rows");
    for (size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(rows_ * cols_) {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("dim mismatch");
  RatVec r(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVec>& cols, size_t nrows) {
  RatMatrix m(nrows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) throw std::invalid_argument("ragged cols");
    for (size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  size_t n = m.rows();
  // Fraction-free would do; rational elimination is simplest at this scale.
  RatMatrix a(m);
  Rat d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(c, c);
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) throw InternalError("integer determinant came out fractional");
  return d.get_num();
}

size_t rank(const IntMatrix& m) {
  RatMatrix a(m);
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    for (size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(r, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace bdm
