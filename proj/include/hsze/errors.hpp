#pragma once

#include <stdexcept>

namespace hsze {

// Base for every error the library raises on purpose. The CLI maps these to
// exit code 2 (configuration / precondition) versus ordinary verification
// failure (exit 1), so catching hsze::Error is enough at the boundary.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// precision-core
struct ZeroToNegativePower : Error {
  using Error::Error;
};

// theta-kernel
struct PoleHit : Error {
  using Error::Error;
};
struct NonconvergentTau : Error {
  using Error::Error;
};
struct QuadratureNonconvergence : Error {
  using Error::Error;
};

// lattice-series
struct IllegalLerchPoint : Error {
  using Error::Error;
};
struct CasePreconditionViolated : Error {
  using Error::Error;
};
struct NonconvergenceAtPolicyCap : Error {
  using Error::Error;
};

// closed-form
struct InadmissibleParameters : Error {
  using Error::Error;
};
struct SymbolRemains : Error {
  using Error::Error;
};

// qzeta
struct NotCatalogued : Error {
  using Error::Error;
};
struct NonconvergentQSeries : Error {
  using Error::Error;
};

// cli
struct IOFailure : Error {
  using Error::Error;
};

}  // namespace hsze
