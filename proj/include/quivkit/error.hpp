#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quivkit {

enum class Errc {
  // exactlin
  NOT_A_SUBSPACE,
  BLOCKS_NOT_DIRECT,
  DIMENSION_MISMATCH,
  // algebra
  MALFORMED_ALGEBRA,
  ASSOCIATIVITY_FAIL,
  UNIT_FAIL,
  NOT_POINTED,
  RADICAL_NOT_NILPOTENT,
  CHAR_TOO_SMALL,
  NOT_UNITAL,
  NOT_MULTIPLICATIVE,
  RADICAL_QUOTIENT_NOT_SURJECTIVE,
  NOT_AN_IDEAL,
  NOT_COMPOSABLE,
  // vquiver
  MALFORMED_QUIVER,
  INVALID_VERTEX_MAP,
  NOT_INJECTIVE,
  // pathalg
  LEVEL_TOO_SMALL,
  BIMODULE_CONDITION_FAIL,
  TRUNCATION_INCOMPATIBLE,
  // splittings
  NOT_VALIDATED,
  NO_CONJUGATOR,
  // adjunction
  TARGET_MISMATCH,
  SOURCE_MISMATCH,
  NOT_SURJECTIVE,
  NOT_SIM1,
  DELTA_INVALID,
  WITNESS_INVALID,
  UNDECIDED,
  INTERNAL,
};

std::string_view errc_name(Errc code);

/// Every module reports failures through this exception; `code()` is the
/// machine-readable reason that surfaces in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quivkit
