#pragma once

#include <stdexcept>
#include <string>

#include "pintz/pintz.h"

namespace pintz {

// Base for all library failures; carries the C-API status code and whether
// the condition is a caller error (CLI exit 2) or a computational one (3).
class Error : public std::runtime_error {
  public:
    Error(pintz_status st, bool usage, const std::string& msg)
        : std::runtime_error(msg), status_(st), usage_(usage) {}
    pintz_status status() const { return status_; }
    bool is_usage() const { return usage_; }

  private:
    pintz_status status_;
    bool usage_;
};

#define PINTZ_DEFINE_ERROR(Name, code, usage)                                  \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string& msg) : Error(code, usage, msg) {}     \
    }

PINTZ_DEFINE_ERROR(UsageError, PINTZ_ERR_USAGE, true);
PINTZ_DEFINE_ERROR(DomainError, PINTZ_ERR_DOMAIN, true);
PINTZ_DEFINE_ERROR(InvalidParams, PINTZ_ERR_INVALID_PARAMS, true);
PINTZ_DEFINE_ERROR(YTooSmall, PINTZ_ERR_Y_TOO_SMALL, true);
PINTZ_DEFINE_ERROR(CancellationUnderflow, PINTZ_ERR_CANCELLATION, false);
PINTZ_DEFINE_ERROR(TailDivergence, PINTZ_ERR_TAIL_DIVERGENCE, true);
PINTZ_DEFINE_ERROR(QuadratureFailure, PINTZ_ERR_QUADRATURE, false);
PINTZ_DEFINE_ERROR(ConvergenceFailure, PINTZ_ERR_CONVERGENCE, false);
PINTZ_DEFINE_ERROR(NoExclusion, PINTZ_ERR_NO_EXCLUSION, false);
PINTZ_DEFINE_ERROR(CheckpointCorrupt, PINTZ_ERR_CHECKPOINT, true);
PINTZ_DEFINE_ERROR(IncompletePrimes, PINTZ_ERR_INCOMPLETE_PRIMES, true);
PINTZ_DEFINE_ERROR(ConfigParseError, PINTZ_ERR_CONFIG, true);
PINTZ_DEFINE_ERROR(IoError, PINTZ_ERR_IO, false);

#undef PINTZ_DEFINE_ERROR

} // namespace pintz
