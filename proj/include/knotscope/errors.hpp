#pragma once
// Error types shared across the engine; the CLI maps each to a distinct
// exit code.

#include <stdexcept>
#include <string>

namespace knotscope {

// Malformed PD text or a diagram failing validation (label counts,
// orientation consistency).  Carries the offending label / crossing when
// known (-1 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int label = -1, int crossing = -1)
      : std::runtime_error(msg), label_(label), crossing_(crossing) {}
  int label() const { return label_; }
  int crossing() const { return crossing_; }

 private:
  int label_;
  int crossing_;
};

// A knot-only operation received a multi-component link.
class KnotRequired : public std::runtime_error {
 public:
  explicit KnotRequired(const std::string& op)
      : std::runtime_error(op + ": input must be a knot (one component)") {}
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal consistency contract (e.g. a differential failing
// d.d = 0).  Never expected on valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotscope
