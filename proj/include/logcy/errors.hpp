#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logcy {

// Every domain error carries a stable machine-readable code so the CLI can
// report failures as structured JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define LOGCY_DEFINE_ERROR(Name, code_str)                    \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& m) : Error(code_str, m) {} \
  }

LOGCY_DEFINE_ERROR(DimensionError, "dimension_error");
LOGCY_DEFINE_ERROR(InvalidClassError, "invalid_class");
LOGCY_DEFINE_ERROR(ProfileError, "profile_error");
LOGCY_DEFINE_ERROR(DomainError, "domain_error");
LOGCY_DEFINE_ERROR(MalformedCurveError, "malformed_curve");
LOGCY_DEFINE_ERROR(HigherValencyError, "higher_valency");
LOGCY_DEFINE_ERROR(DegenerateConfiguration, "degenerate_configuration");
LOGCY_DEFINE_ERROR(IncompleteSeriesError, "incomplete_series");
LOGCY_DEFINE_ERROR(UnknownSingularityError, "unknown_singularity");
LOGCY_DEFINE_ERROR(MissingInvariantError, "missing_invariant");
LOGCY_DEFINE_ERROR(UnderdeterminedError, "underdetermined");
LOGCY_DEFINE_ERROR(LedgerMismatchError, "ledger_mismatch");
LOGCY_DEFINE_ERROR(LedgerArityError, "ledger_arity");
LOGCY_DEFINE_ERROR(ConfigError, "config_error");

#undef LOGCY_DEFINE_ERROR

}  // namespace logcy
