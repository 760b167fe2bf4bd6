#pragma once

#include <stdexcept>

namespace sparsecast {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };   // shape mismatch
struct ArgumentError : Error { using Error::Error; };    // invalid parameter value
struct NumericError : Error { using Error::Error; };     // non-convergence, non-finite values
struct DomainError : Error { using Error::Error; };      // e.g. log-det of a non-PD matrix
struct IngestionError : Error { using Error::Error; };   // CSV / file parsing
struct ConfigError : Error { using Error::Error; };      // experiment configuration
struct TrainingError : Error { using Error::Error; };    // divergence during optimization
struct SchedulingError : Error { using Error::Error; };  // window outside graph schedule
struct IoError : Error { using Error::Error; };

}  // namespace sparsecast
