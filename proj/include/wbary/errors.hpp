#ifndef WBARY_ERRORS_HPP_
#define WBARY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wbary {

enum class ErrorKind {
  NonSymmetric,
  IndefiniteInput,
  SingularInput,
  NoConvergence,
  DimensionMismatch,
  BasisMismatch,
  EmptyInput,
  ShapeMismatch,
  NotNormalized,
  AllZeroWeights,
  NegativeWeight,
  DegenerateWeights,
  WindowOutOfRange,
  StreamTooShort,
  BackendMismatch,
  InvalidSpec,
  EmptyRender,
  BadMagic,
  TruncatedFile,
  CountMismatch,
  ZeroImage,
  InvalidArgument,
  Io,
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::IndefiniteInput: return "IndefiniteInput";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::AllZeroWeights: return "AllZeroWeights";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorKind::StreamTooShort: return "StreamTooShort";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::EmptyRender: return "EmptyRender";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::TruncatedFile: return "TruncatedFile";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::ZeroImage: return "ZeroImage";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace wbary

#endif  // WBARY_ERRORS_HPP_
