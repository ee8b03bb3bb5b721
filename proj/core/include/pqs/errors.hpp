#pragma once

#include <stdexcept>
#include <string>

namespace pqs {

enum class ErrorKind {
  Dimension,   // arity / index / length mismatch
  Domain,      // argument outside the operation's domain
  Shape,       // matrix shape
  Undefined,   // e.g. order of zero
  NotSpecial,  // basis fails the special-form conditions
  Input,       // malformed problem or result file
  Resource,    // N_cap exceeded, unsupported size
  Integrity,   // internal invariant breach
  Inconclusive // oracle could not decide
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace pqs
