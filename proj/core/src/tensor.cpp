#include "odla/tensor.hpp"

#include <string>

namespace odla {

FloatMatrix to_float(const Matrix& m) {
  FloatMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

FloatVector to_float(std::span<const Scalar> v) {
  FloatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.get_d());
  return r;
}

Scalar levi_civita(int i, int j, int k) {
  for (int idx : {i, j, k}) {
    if (idx < 1 || idx > 3) {
      throw IndexError("Levi-Civita index " + std::to_string(idx) + " outside 1..3");
    }
  }
  return detail::epsilon(i - 1, j - 1, k - 1);
}

namespace {

// Applies the row operation row_target += factor * row_source to S, and the
// matching congruence (row and column) to A.
void add_multiple(Matrix& a, Matrix& s, std::size_t target, std::size_t source, const Scalar& factor) {
  const std::size_t n = a.dim();
  for (std::size_t j = 0; j < n; ++j) {
    a(target, j) += factor * a(source, j);
    s(target, j) += factor * s(source, j);
  }
  for (std::size_t i = 0; i < n; ++i) a(i, target) += factor * a(i, source);
}

void swap_both(Matrix& a, Matrix& s, std::size_t x, std::size_t y) {
  if (x == y) return;
  a.swap_rows(x, y);
  s.swap_rows(x, y);
  for (std::size_t i = 0; i < a.dim(); ++i) std::swap(a(i, x), a(i, y));
}

}  // namespace

CongruenceDiagonalization congruence_diagonalize(const Matrix& m) {
  if (!m.is_symmetric()) throw DimensionError("congruence diagonalization needs a symmetric matrix");
  const std::size_t n = m.dim();
  Matrix a = m;
  Matrix s = Matrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!is_zero(a(i, i))) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // Only off-diagonal mass left: e_i + e_j turns a(i,j) = m into a 2m pivot.
      for (std::size_t i = k; i < n && pivot == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!is_zero(a(i, j))) {
            add_multiple(a, s, i, j, Scalar(1));
            pivot = i;
            break;
          }
      if (pivot == n) break;  // remaining block is zero
    }
    swap_both(a, s, k, pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(a(r, k))) continue;
      Scalar f = -a(r, k) / a(k, k);
      add_multiple(a, s, r, k, f);
    }
  }

  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(s), std::move(d)};
}

Inertia inertia(const Matrix& m) {
  Inertia result;
  for (const auto& x : congruence_diagonalize(m).diagonal) {
    int s = sgn(x);
    if (s > 0) ++result.positive;
    else if (s < 0) ++result.negative;
    else ++result.zero;
  }
  return result;
}

}  // namespace odla
