#pragma once

#include <stdexcept>
#include <string>

namespace sensornoise {

// Broad failure classes. The CLI maps these onto exit codes.
enum class ErrorKind {
  kDomain,            // parameter outside its mathematical domain
  kShape,             // frame geometry mismatch
  kFormat,            // malformed file or sidecar
  kConfig,            // invalid model or configuration
  kInsufficientData,  // not enough samples / frames / levels
  kDegenerateData,    // zero variance or zero range
  kCalibration,       // estimation produced an unusable value
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SENSORNOISE_DEFINE_ERROR(Name, Kind)                         \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(Kind, what) {}    \
  };

SENSORNOISE_DEFINE_ERROR(DomainError, ErrorKind::kDomain)
SENSORNOISE_DEFINE_ERROR(ShapeError, ErrorKind::kShape)
SENSORNOISE_DEFINE_ERROR(FormatError, ErrorKind::kFormat)
SENSORNOISE_DEFINE_ERROR(ConfigError, ErrorKind::kConfig)
SENSORNOISE_DEFINE_ERROR(InsufficientDataError, ErrorKind::kInsufficientData)
SENSORNOISE_DEFINE_ERROR(DegenerateDataError, ErrorKind::kDegenerateData)
SENSORNOISE_DEFINE_ERROR(CalibrationError, ErrorKind::kCalibration)

#undef SENSORNOISE_DEFINE_ERROR

}  // namespace sensornoise
