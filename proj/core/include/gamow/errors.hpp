#pragma once

#include <stdexcept>
#include <string>

namespace gamow {

// Base for all numerical / contract failures raised by the library.
// The CLI maps ConfigError to exit 1, NoResonance to exit 2 and the
// rest to exit 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& field, const std::string& msg)
      : Error("config field '" + field + "': " + msg), field(field) {}
  std::string field;
};

struct NoResonance : Error { using Error::Error; };
struct NotContractive : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DivisionAtZero : Error { using Error::Error; };
struct OutOfLaurentRange : Error { using Error::Error; };
struct OutOfWindow : Error { using Error::Error; };
struct ChannelMismatch : Error { using Error::Error; };
struct QuadratureBudgetExceeded : Error { using Error::Error; };
struct NonpositiveTime : Error { using Error::Error; };
struct ReflectionRisk : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct EmptyWindow : Error { using Error::Error; };
struct NonpositiveValues : Error { using Error::Error; };
struct InsufficientTail : Error { using Error::Error; };

}  // namespace gamow
