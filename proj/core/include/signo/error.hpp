// Domain errors thrown by the library. The CLI maps these to exit code 1.
#pragma once

#include <stdexcept>
#include <string>

namespace signo {

enum class Errc {
  DimensionMismatch,
  PointNotInCloud,
  NotGeneric,
  NotAFace,
  InvalidPath,
  InvalidString,
  NotCoherentEncoding,
  IncoherentInput,
  IndexOutOfRange,
  LengthMismatch,
  DimOutOfRange,
  LabelMismatch,
  ParseError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::PointNotInCloud: return "POINT_NOT_IN_CLOUD";
    case Errc::NotGeneric: return "NOT_GENERIC";
    case Errc::NotAFace: return "NOT_A_FACE";
    case Errc::InvalidPath: return "INVALID_PATH";
    case Errc::InvalidString: return "INVALID_STRING";
    case Errc::NotCoherentEncoding: return "NOT_COHERENT_ENCODING";
    case Errc::IncoherentInput: return "INCOHERENT_INPUT";
    case Errc::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case Errc::LengthMismatch: return "LENGTH_MISMATCH";
    case Errc::DimOutOfRange: return "DIM_OUT_OF_RANGE";
    case Errc::LabelMismatch: return "LABEL_MISMATCH";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace signo
