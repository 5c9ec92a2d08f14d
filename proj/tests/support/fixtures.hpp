#pragma once

// Hand-built algebras from the commutation relations, independent of the
// (n, a, b) machinery.

#include "odla/algebra.hpp"

namespace odla::fixtures {

/// [e2, e3] = e1.
inline AlgebraSpec type_ii() {
  AlgebraSpec s(3);
  s.set_bracket(1, 2, 0, 1);
  return s;
}

/// [e3, e1] = e1, [e2, e3] = -e2.
inline AlgebraSpec type_v() {
  AlgebraSpec s(3);
  s.set_bracket(2, 0, 0, 1);
  s.set_bracket(1, 2, 1, -1);
  return s;
}

/// IX_a with a = 1: [e1,e2] = e3, [e3,e1] = e2 + e1, [e2,e3] = e1 - e2,
/// omega(e1, e2) = -2.
inline AlgebraSpec ix_a1() {
  AlgebraSpec s(3);
  s.set_bracket(0, 1, 2, 1);
  s.set_bracket(2, 0, 1, 1);
  s.set_bracket(2, 0, 0, 1);
  s.set_bracket(1, 2, 0, 1);
  s.set_bracket(1, 2, 1, -1);
  s.set_omega(0, 1, -2);
  return s;
}

inline Vector e(std::size_t i, std::size_t dim = 3) { return basis_vector(dim, i - 1); }

}  // namespace odla::fixtures
