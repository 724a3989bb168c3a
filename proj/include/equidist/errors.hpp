#pragma once

#include <stdexcept>
#include <string>

namespace equidist {

enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  NoIrreducibleFound,
  OrderDoesNotDivide,
  NotTotallySplit,
  CostGuard,
  EvenCharacteristic,
  SizeGuard,
  MassMismatch,
  LatticeGuard,
  ValueOutOfRange,
  UnboundedSupport,
  Overflow,
  ConfigError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorKind::NotTotallySplit: return "NotTotallySplit";
    case ErrorKind::CostGuard: return "CostGuard";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::MassMismatch: return "MassMismatch";
    case ErrorKind::LatticeGuard: return "LatticeGuard";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::UnboundedSupport: return "UnboundedSupport";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

// Single exception type for math-level failures; the CLI maps kinds to exit
// codes (config -> 2, everything else -> 3).
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw MathError(k, msg); }

}  // namespace equidist
