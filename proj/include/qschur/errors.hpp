#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

/// Base of all engine errors. `kind()` is the stable machine-readable name
/// surfaced in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  [[nodiscard]] const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define QSCHUR_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  };

QSCHUR_DEFINE_ERROR(DenominatorVanishes)
QSCHUR_DEFINE_ERROR(UnsupportedCharacteristic)
QSCHUR_DEFINE_ERROR(ContextMismatch)
QSCHUR_DEFINE_ERROR(NotFiniteType)
QSCHUR_DEFINE_ERROR(PairingMismatch)
QSCHUR_DEFINE_ERROR(NonDominantSeed)
QSCHUR_DEFINE_ERROR(CapExceeded)
QSCHUR_DEFINE_ERROR(NonReducedWord)
QSCHUR_DEFINE_ERROR(RankMismatch)
QSCHUR_DEFINE_ERROR(CoordinateFailure)
QSCHUR_DEFINE_ERROR(InconsistentCharacters)
QSCHUR_DEFINE_ERROR(ConfigError)

#undef QSCHUR_DEFINE_ERROR

}  // namespace qschur
