#include "bdm/normalform.hpp"

namespace bdm {

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, size_t r) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// row a += f * row b
void addmul_row(IntMatrix& m, size_t a, size_t b, const Int& f) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) += f * m.at(b, j);
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMatrix& m, size_t c) {
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

void addmul_col(IntMatrix& m, size_t a, size_t b, const Int& f) {
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, a) += f * m.at(i, b);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  size_t r = 0;
  for (size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // Clear the column below row r with gcd row combinations.
    for (size_t i = r + 1; i < H.rows(); ++i) {
      while (H.at(i, c) != 0) {
        if (H.at(r, c) == 0) {
          swap_rows(H, r, i);
          swap_rows(U, r, i);
          continue;
        }
        Int q = H.at(i, c) / H.at(r, c);  // truncated: |remainder| < |pivot|
        addmul_row(H, i, r, -q);
        addmul_row(U, i, r, -q);
        if (H.at(i, c) != 0) {
          swap_rows(H, r, i);
          swap_rows(U, r, i);
        }
      }
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
      if (q != 0) {
        addmul_row(H, i, r, -q);
        addmul_row(U, i, r, -q);
      }
    }
    ++r;
  }
  return {H, U};
}

namespace {

// Diagonalizes the trailing block at pivot t: afterwards row t and column t
// are zero except for S(t,t) >= 0.
void snf_pivot(IntMatrix& S, IntMatrix& U, IntMatrix& V, size_t t) {
  size_t pi = t, pj = t;
  bool found = false;
  for (size_t i = t; i < S.rows() && !found; ++i)
    for (size_t j = t; j < S.cols() && !found; ++j)
      if (S.at(i, j) != 0) {
        pi = i;
        pj = j;
        found = true;
      }
  if (!found) return;
  if (pi != t) {
    swap_rows(S, pi, t);
    swap_rows(U, pi, t);
  }
  if (pj != t) {
    swap_cols(S, pj, t);
    swap_cols(V, pj, t);
  }

  for (;;) {
    for (size_t i = t + 1; i < S.rows(); ++i) {
      while (S.at(i, t) != 0) {
        if (S.at(t, t) == 0 || abs(S.at(i, t)) < abs(S.at(t, t))) {
          swap_rows(S, t, i);
          swap_rows(U, t, i);
          continue;
        }
        Int q = S.at(i, t) / S.at(t, t);
        addmul_row(S, i, t, -q);
        addmul_row(U, i, t, -q);
        if (S.at(i, t) != 0) {
          swap_rows(S, t, i);
          swap_rows(U, t, i);
        }
      }
    }
    for (size_t j = t + 1; j < S.cols(); ++j) {
      while (S.at(t, j) != 0) {
        if (S.at(t, t) == 0 || abs(S.at(t, j)) < abs(S.at(t, t))) {
          swap_cols(S, t, j);
          swap_cols(V, t, j);
          continue;
        }
        Int q = S.at(t, j) / S.at(t, t);
        addmul_col(S, j, t, -q);
        addmul_col(V, j, t, -q);
        if (S.at(t, j) != 0) {
          swap_cols(S, t, j);
          swap_cols(V, t, j);
        }
      }
    }
    bool clean = true;
    for (size_t i = t + 1; i < S.rows(); ++i)
      if (S.at(i, t) != 0) clean = false;
    if (clean) break;
  }
  if (S.at(t, t) < 0) {
    negate_row(S, t);
    negate_row(U, t);
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M) {
  IntMatrix S = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  IntMatrix V = IntMatrix::identity(M.cols());
  size_t n = std::min(S.rows(), S.cols());

  for (size_t t = 0; t < n; ++t) snf_pivot(S, U, V, t);

  // Divisibility fixup d_t | d_{t+1}: fold the offender into the previous
  // pivot column and re-diagonalize the affected 2x2 block.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < n; ++t) {
      if (S.at(t, t) == 0 || S.at(t + 1, t + 1) == 0) continue;
      if (S.at(t + 1, t + 1) % S.at(t, t) == 0) continue;
      addmul_col(S, t, t + 1, 1);
      addmul_col(V, t, t + 1, 1);
      snf_pivot(S, U, V, t);
      snf_pivot(S, U, V, t + 1);
      changed = true;
    }
  }
  return {S, U, V};
}

}  // namespace bdm
