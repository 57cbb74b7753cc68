#ifndef GOI_ERRORS_HPP
#define GOI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goi {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CarrierOverlap : Error {
  explicit CarrierOverlap(const std::string& msg) : Error(msg) {}
};

struct CarrierMismatch : Error {
  explicit CarrierMismatch(const std::string& msg) : Error(msg) {}
};

// Thrown when the edge set of an execution is infinite.
struct Divergent : Error {
  explicit Divergent(const std::string& msg) : Error(msg) {}
};

struct NotACycle : Error {
  explicit NotACycle(const std::string& msg) : Error(msg) {}
};

struct NotInjectiveOnCarrier : Error {
  explicit NotInjectiveOnCarrier(const std::string& msg) : Error(msg) {}
};

// A truncated measurement with an incomplete circuit enumeration was used
// where an exact value is required.
struct InexactMeasure : Error {
  explicit InexactMeasure(const std::string& msg) : Error(msg) {}
};

struct AmbiguousSide : Error {
  explicit AmbiguousSide(const std::string& msg) : Error(msg) {}
};

struct InsufficientWitnesses : Error {
  explicit InsufficientWitnesses(const std::string& msg) : Error(msg) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& msg) : Error(msg) {}
};

struct UnboundAtom : Error {
  explicit UnboundAtom(const std::string& msg) : Error(msg) {}
};

struct CertificationFailure : Error {
  explicit CertificationFailure(const std::string& msg) : Error(msg) {}
};

struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

struct ParseError : InputError {
  ParseError(const std::string& msg, int line, int column)
      : InputError(msg + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace goi

#endif
