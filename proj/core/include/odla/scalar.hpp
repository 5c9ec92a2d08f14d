#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace odla {

/// Exact rational number. Every value produced by this library is kept in
/// lowest terms with a positive denominator.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Parses "p", "-p", "p/q" or a plain decimal such as "-0.25" into an exact
/// rational in lowest terms. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Strict form of parse_scalar used for document values: only "p" or "p/q".
Scalar parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Scalar& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

}  // namespace odla
