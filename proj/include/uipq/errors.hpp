#pragma once

#include <stdexcept>
#include <string>

namespace uipq {

enum class Errc {
  NotInvolution,
  NotConnected,
  EulerViolation,
  InsufficientCertification,
  MalformedContour,
  MalformedInput,
  WindowExhausted,
  ResourceCap,
  Unstable,
  NotQuadrangulation,
  LabelParityViolation,
  RootTooDeep,
  WrongTruncation,
  DomainError,
  NoConvergence,
  SpineHitsUnresolved,
  NoFarWitness,
  LeftSafeRegion,
  BadConfig,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NotConnected: return "NotConnected";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::InsufficientCertification: return "InsufficientCertification";
    case Errc::MalformedContour: return "MalformedContour";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::WindowExhausted: return "WindowExhausted";
    case Errc::ResourceCap: return "ResourceCap";
    case Errc::Unstable: return "Unstable";
    case Errc::NotQuadrangulation: return "NotQuadrangulation";
    case Errc::LabelParityViolation: return "LabelParityViolation";
    case Errc::RootTooDeep: return "RootTooDeep";
    case Errc::WrongTruncation: return "WrongTruncation";
    case Errc::DomainError: return "DomainError";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SpineHitsUnresolved: return "SpineHitsUnresolved";
    case Errc::NoFarWitness: return "NoFarWitness";
    case Errc::LeftSafeRegion: return "LeftSafeRegion";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace uipq
