// Error taxonomy shared by all modules.  Every domain failure is an
// exception carrying a stable machine-readable code; the CLI maps codes
// to exit statuses (domain errors -> 1, I/O and parse errors -> 2).
#pragma once

#include <stdexcept>
#include <string>

namespace gkmk {

enum class errc {
  zero_vector,
  not_primitive,
  context_mismatch,
  not_divisible,
  denominator_vanishes,
  repeated_root,
  common_factor,
  dependent_weights,
  zero_pairing,
  integrality_failure,
  genericity_violation,
  cyclic_ascent,
  bad_vertex_circle,
  cap_exceeded,
  not_torsion_free,
  mixed_signs,
  bad_parameters,
  reconstruction_failure,
  edge_condition_failure,
  validation_error,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_vector: return "ZeroVector";
    case errc::not_primitive: return "NotPrimitive";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::not_divisible: return "NotDivisible";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::repeated_root: return "RepeatedRoot";
    case errc::common_factor: return "CommonFactor";
    case errc::dependent_weights: return "DependentWeights";
    case errc::zero_pairing: return "ZeroPairing";
    case errc::integrality_failure: return "IntegralityFailure";
    case errc::genericity_violation: return "GenericityViolation";
    case errc::cyclic_ascent: return "CyclicAscent";
    case errc::bad_vertex_circle: return "BadVertexCircle";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_torsion_free: return "NotTorsionFree";
    case errc::mixed_signs: return "MixedSigns";
    case errc::bad_parameters: return "BadParameters";
    case errc::reconstruction_failure: return "ReconstructionFailure";
    case errc::edge_condition_failure: return "EdgeConditionFailure";
    case errc::validation_error: return "ValidationError";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  // parse/file errors exit with 2, everything else with 1
  int exit_status() const noexcept { return code_ == errc::parse_error ? 2 : 1; }

 private:
  errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw error(code, detail);
}

}  // namespace gkmk
