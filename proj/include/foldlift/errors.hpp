#pragma once

#include <stdexcept>
#include <string>

namespace foldlift {

// Machine-readable failure codes. The CLI prints these as "error[code]: ..."
// and maps them to exit status 2.
enum class errc {
  zero_divisor,
  unknown_folding,
  isotropic_root,
  non_terminating,
  bad_index,
  length_cap_exceeded,
  size_cap_exceeded,
  not_in_quotient,
  no_unit_coefficient,
  not_in_span,
  parabolic_not_theta_stable,
  not_reduced,
  not_in_folding_set,
  not_a_power_of_tau,
  invariant_violation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::unknown_folding: return "UnknownFolding";
    case errc::isotropic_root: return "IsotropicRoot";
    case errc::non_terminating: return "NonTerminating";
    case errc::bad_index: return "BadIndex";
    case errc::length_cap_exceeded: return "LengthCapExceeded";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::not_in_quotient: return "NotInQuotient";
    case errc::no_unit_coefficient: return "NoUnitCoefficient";
    case errc::not_in_span: return "NotInSpan";
    case errc::parabolic_not_theta_stable: return "ParabolicNotThetaStable";
    case errc::not_reduced: return "NotReduced";
    case errc::not_in_folding_set: return "NotInFoldingSet";
    case errc::not_a_power_of_tau: return "NotAPowerOfTau";
    case errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Caps guarding the exponential searches. All user-facing entry points that
// enumerate reduced words or quotients take one of these.
struct limits {
  int word_cap = 16;            // max length for reduced-word enumeration
  long quotient_cap = 1000000;  // max size of an enumerated parabolic quotient
  long closure_cap = 1000000;   // iteration guard for root-set closure
};

}  // namespace foldlift
