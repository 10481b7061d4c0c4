#ifndef BDM_ERRORS_HPP
#define BDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bdm {

// Exit-code buckets used by the CLI: validation failures map to 2,
// resource/assumption failures to 3, internal invariant breaches to 4.
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse: " + m) {}
};

// Structural validation failure with a machine-readable reason code.
struct ValidationError : Error {
  std::string reason;  // NotAGraded, ConeNotPointed, LatticeNotInKernel,
                       // BNotInMJ, ComponentDoesNotContainIdeal,
                       // ColumnsDoNotSpan, LatticeNotSaturated, ...
  ValidationError(std::string reason_, const std::string& m)
      : Error(reason_ + ": " + m), reason(std::move(reason_)) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& m) : Error("resource limit: " + m) {}
};

struct NotSublattice : Error {
  explicit NotSublattice(const std::string& m) : Error("not a sublattice: " + m) {}
};

struct NotHolonomic : Error {
  explicit NotHolonomic(const std::string& m) : Error("not holonomic: " + m) {}
};

struct AssumptionViolated : Error {
  explicit AssumptionViolated(const std::string& m) : Error("assumption violated: " + m) {}
};

struct SpecializationUnstable : Error {
  explicit SpecializationUnstable(const std::string& m) : Error("specialization unstable: " + m) {}
};

struct NotArtinian : Error {
  explicit NotArtinian(const std::string& m) : Error("not Artinian: " + m) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error("cap exceeded: " + m) {}
};

struct PochhammerPole : Error {
  explicit PochhammerPole(const std::string& m) : Error("Pochhammer pole: " + m) {}
};

struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& m) : Error("truncation too small: " + m) {}
};

struct UnsupportedRank : Error {
  explicit UnsupportedRank(const std::string& m) : Error("unsupported rank: " + m) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error("internal: " + m) {}
};

}  // namespace bdm

#endif
