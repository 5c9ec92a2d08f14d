#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odla/algebra.hpp"
#include "odla/decomp3d.hpp"
#include "odla/tensor.hpp"

namespace odla {

/// Orbit types of 3-dimensional omega-deformed Lie algebras. The first six
/// have a = 0 and are ordinary Lie algebras; the rest have a != 0.
enum class BianchiType {
  I,
  II,
  VI_0,
  VII_0,
  VIII,
  IX,
  V,
  IV,
  IV_x,
  VI_a,
  VI_x,
  VI_y,
  VI_n,
  VII_a,
  VII_x,
  VIII_a,
  VIII_xa,
  VIII_na,
  IX_a,
};

inline constexpr std::array<BianchiType, 6> kUnimodularTypes = {
    BianchiType::I, BianchiType::II, BianchiType::VI_0, BianchiType::VII_0, BianchiType::VIII, BianchiType::IX};

inline constexpr std::array<BianchiType, 13> kNonUnimodularTypes = {
    BianchiType::V,    BianchiType::IV,    BianchiType::IV_x,   BianchiType::VI_a,    BianchiType::VI_x,
    BianchiType::VI_y, BianchiType::VI_n,  BianchiType::VII_a,  BianchiType::VII_x,   BianchiType::VIII_a,
    BianchiType::VIII_xa, BianchiType::VIII_na, BianchiType::IX_a};

std::string_view type_name(BianchiType type);

/// Accepts the names produced by type_name plus the spellings "VI0"/"VII0".
std::optional<BianchiType> parse_type(std::string_view name);

/// True for VI_a, VII_a, VIII_a, VIII_xa, VIII_na and IX_a.
bool takes_parameter(BianchiType type);

struct BianchiLabel {
  BianchiType type = BianchiType::I;
  std::optional<double> parameter;  // > 0 when present
};

/// Table row for a type: normalized diagonal of n, a (with the parameter
/// substituted where the row has one) and b = -2 n a.
/// Throws LabelError on a missing, superfluous or nonpositive parameter.
NabTriple table_triple(BianchiType type, const std::optional<Scalar>& parameter = std::nullopt);

/// Canonical exact spec of a table row.
AlgebraSpec generate(BianchiType type, const std::optional<Scalar>& parameter = std::nullopt);

/// Canonical float spec of a table row (for irrational parameters).
FloatAlgebraSpec generate_float(BianchiType type, std::optional<double> parameter);

// ---------------------------------------------------------------------------
// Residual scalings e_i -> lambda_i e_i preserving a normalized diagonal n

class ResidualScalings {
 public:
  explicit ResidualScalings(std::array<int, 3> n_diag);

  const std::array<int, 3>& n_diag() const noexcept { return n_; }

  /// (lambda_1 lambda_2 - lambda_3) n_3 = 0 and its cyclic versions,
  /// all lambda_i nonzero.
  bool admits(std::span<const Scalar> lambda) const;
  bool admits(std::span<const double> lambda, double tol = 1e-12) const;

  /// Number of independent continuous factors (0, 1, 2 or 3).
  int continuous_dimension() const;

  bool is_finite() const { return continuous_dimension() == 0; }

  /// The four sign patterns when all n_i != 0; empty otherwise.
  std::vector<std::array<int, 3>> finite_elements() const;

  std::string describe() const;

 private:
  std::array<int, 3> n_;
};

/// Throws DimensionError unless every entry is -1, 0 or 1.
ResidualScalings residual_scalings(std::array<int, 3> n_diag);

// ---------------------------------------------------------------------------
// Causal character of a with respect to a normalized diagonal n

enum class CausalCharacter { zero, kernel_only, spacelike, timelike, null, mixed };

std::string_view causal_name(CausalCharacter c);

/// `n_diag` must be diagonal with entries in {-1, 0, 1} (DimensionError
/// otherwise). Q = sum over n_i != 0 of n_i a_i^2. A covector with both
/// range and kernel parts is `mixed`.
CausalCharacter causal_character(const Matrix& n_diag, std::span<const Scalar> a);

// ---------------------------------------------------------------------------
// Classification

/// Quantities decided in exact arithmetic. `inertia` uses the positive >=
/// negative convention; `causal` is the causal character of the canonical
/// representative; `parameter_squared` is an orbit invariant when present
/// (all parameterized types except VIII_na).
struct Certificates {
  Inertia inertia;
  bool a_zero = true;
  CausalCharacter causal = CausalCharacter::zero;
  std::optional<Scalar> parameter_squared;
};

struct NormalForm {
  BianchiLabel label;
  FloatAlgebraSpec canonical;
  FloatMatrix transform;  // transport(input, transform) ~ canonical
  double transform_error = 0.0;  // max |transport(input, transform) - canonical|
  Certificates certificates;
  std::vector<std::string> warnings;
};

/// Brings a valid 3-dimensional spec to its table representative.
/// Throws NotAnAlgebraError (message carries t^m) if the identity fails,
/// DimensionError for dim != 3, SkewError for non-skew input.
NormalForm classify(const AlgebraSpec& spec, double tolerance = 1e-9);

/// Pseudorandom invertible rational 3x3 matrix, deterministic per seed.
Matrix random_invertible(std::uint64_t seed);

/// transport(generate(type, parameter), random_invertible(seed)).
AlgebraSpec orbit_sample(BianchiType type, const std::optional<Scalar>& parameter, std::uint64_t seed);

/// Witness that VI_x and VI_y lie in one orbit: the e1 <-> e2 swap.
Matrix vi_swap_witness();

}  // namespace odla
