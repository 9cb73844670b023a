#pragma once

#include <stdexcept>
#include <string>

namespace skewsrb {

enum class Errc {
  InvalidInput,
  ConfigParse,
  NotVolumeExpanding,
  NotContracting,
  NotExpanding,
  NonDiagonalUnsupported,
  PartitionInvalid,
  UnsupportedPartition,
  WordNotAdmissibleAtPoint,
  WordsNotLanding,
  CombinatorialBlowup,
  InsufficientSamples,
  SeparationFailure,
  InfeasibleOutsideCdE,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ConfigParse: return "ConfigParse";
    case Errc::NotVolumeExpanding: return "NotVolumeExpanding";
    case Errc::NotContracting: return "NotContracting";
    case Errc::NotExpanding: return "NotExpanding";
    case Errc::NonDiagonalUnsupported: return "NonDiagonalUnsupported";
    case Errc::PartitionInvalid: return "PartitionInvalid";
    case Errc::UnsupportedPartition: return "UnsupportedPartition";
    case Errc::WordNotAdmissibleAtPoint: return "WordNotAdmissibleAtPoint";
    case Errc::WordsNotLanding: return "WordsNotLanding";
    case Errc::CombinatorialBlowup: return "CombinatorialBlowup";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::SeparationFailure: return "SeparationFailure";
    case Errc::InfeasibleOutsideCdE: return "InfeasibleOutsideCdE";
  }
  return "Unknown";
}

// All recoverable failures funnel through this type; the CLI maps codes to
// exit statuses (validation -> 2, caps -> 3).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int line = -1)
      : std::runtime_error(what), code_(code), line_(line) {}
  Errc code() const { return code_; }
  // 1-based input line for config errors, -1 otherwise.
  int line() const { return line_; }

 private:
  Errc code_;
  int line_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what, int line = -1) {
  throw Error(code, what, line);
}

}  // namespace skewsrb
