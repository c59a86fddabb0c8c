#pragma once

// Constructors for the simple real Jordan algebras of the classification and
// the closed-form determinant det P_u of each family.
//
// Matrix families are realized on explicit bases of matrices over a
// Cayley-Dickson scalar ring, with product 1/2 (X W Y + Y W X) for a fixed
// twist W (the identity for the plain families). Families that are complex
// algebras viewed as real ones are built by complexifying a real family.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jordanaff/jordan.hpp"
#include "jordanaff/report.hpp"

namespace jordanaff {

enum class Family {
  kReals,
  kQuadraticFactor,
  kFullMatrixR,
  kFullMatrixH,
  kSymmetricR,
  kHermitianC,
  kHermitianH,
  kSplitQuaternionHermitianAsSkew,
  kSkewHermitianH,
  kOctonionHermitian3,
  kSplitOctonionHermitian3R,
  kComplexField,
  kComplexQuadratic,
  kSymmetricC,
  kFullMatrixC,
  kSkewC,
  kSplitOctonionHermitian3C,
};

struct FamilyInfo {
  Family family;
  const char* cli_name;
  const char* display;      // e.g. "M_m(R)"
  bool has_m;               // size parameter used
  std::size_t strict_min_m; // classification threshold
  bool twistable;           // accepts gamma_signs
  bool complex;             // complex algebra viewed as real
  const char* paper_formula;
  const char* implemented_formula;
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family{Family::kReals};
  std::size_t m{0};
  std::vector<int> gamma_signs;  // diagonal of the twist, length m (3 for H_3)
  std::vector<int> q_signature;  // signs of B on W for quadratic factors, length m-1
  bool strict{false};            // enforce classification size thresholds

  [[nodiscard]] std::string str() const;
  /// False when m is below the classification threshold (desk-only instance).
  [[nodiscard]] bool canonical() const;
};

/// Throws kInvalidFamily on bad parameters.
void validate(const FamilySpec& spec);
std::size_t expected_dim(const FamilySpec& spec);

JordanAlgebra build(const FamilySpec& spec);

/// The family's closed form for det P_u, normalized so that its value at the
/// unity is 1. Exact.
Rational det_p_closed_form(const FamilySpec& spec, std::span<const Rational> u);

/// The scalar the determinant table raises to a power ("det u", "u^t Q u",
/// "|u|^2" for complex families), as a double; used for the paper-table audit.
double paper_base(const FamilySpec& spec, std::span<const Rational> u);

/// Compares det(p_operator(u)) with det_p_closed_form(u) on seeded random u,
/// exactly. Adds a note auditing the published exponent/sign for the family.
VerificationReport verify_det_formula(const FamilySpec& spec, std::size_t n_samples, std::uint64_t seed);

/// One instance per family at desk sizes: m in {2, 3} where the family has a
/// size parameter, H_3 families at 3.
std::vector<FamilySpec> desk_specs();

/// Explicit matrix model (flattened coordinates) of a real matrix family, for
/// oracles: basis[i] is the matrix of b_i, entries laid out (row, col, unit).
struct MatrixModel {
  std::size_t rows{0};
  std::size_t scalar_dim{1};  // 2^k
  std::vector<int> gammas;    // Cayley-Dickson signature of the entries
  std::vector<Vec<Rational>> basis;
  std::vector<std::string> labels;
  Vec<Rational> twist;        // W, flattened
  Vec<Rational> unity;        // W^{-1}, flattened
};

/// Matrix model of the real family underlying `spec` (the real form for
/// complex families); nullopt for the reals and quadratic factors.
std::optional<MatrixModel> matrix_model(const FamilySpec& spec);

/// Matrix of an element given by coordinates in a model.
Vec<Rational> realize(const MatrixModel& model, std::span<const Rational> u);

/// Product 1/2 (X W Y + Y W X) of flattened matrices.
Vec<Rational> twisted_product(const MatrixModel& model, std::span<const Rational> x, std::span<const Rational> y);

/// Real algebra J (+) iJ with (a + ib)(c + id) = (ac - bd) + i(ad + bc).
JordanAlgebra complexify(const JordanAlgebra& J, const std::string& name);

}  // namespace jordanaff
