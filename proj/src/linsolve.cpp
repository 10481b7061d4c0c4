#include "bdm/linsolve.hpp"

#include <stdexcept>

namespace bdm {

namespace {

// Reduced row echelon form of [M | b]; returns pivot column per row.
std::vector<size_t> rref(RatMatrix& a) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = a.at(r, c);
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) /= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<AffineSolution> solve_rational(const RatMatrix& M, const RatVec& b) {
  if (M.rows() != b.size()) throw std::invalid_argument("dim mismatch");
  size_t n = M.cols();
  RatMatrix a(M.rows(), n + 1);
  for (size_t i = 0; i < M.rows(); ++i) {
    for (size_t j = 0; j < n; ++j) a.at(i, j) = M.at(i, j);
    a.at(i, n) = b[i];
  }
  std::vector<size_t> pivots = rref(a);
  // Inconsistent iff some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;

  AffineSolution sol;
  sol.particular.assign(n, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = a.at(r, n);

  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec k(n, Rat(0));
    k[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -a.at(r, c);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<AffineSolution> solve_rational(const IntMatrix& M, const RatVec& b) {
  return solve_rational(RatMatrix(M), b);
}

std::vector<RatVec> rational_kernel(const RatMatrix& M) {
  RatVec zero(M.rows(), Rat(0));
  auto sol = solve_rational(M, zero);
  return sol->kernel;
}

bool in_column_span(const IntMatrix& M, const RatVec& v) {
  return solve_rational(M, v).has_value();
}

}  // namespace bdm
