#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakayama {

enum class ErrorKind {
  InvalidSeries,
  Semisimple,
  NotInDomain,
  NotApplicable,
  SelfinjectiveInput,
  InvalidParams,
  InvalidSpec,
  InternalError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSeries: return "InvalidSeries";
    case ErrorKind::Semisimple: return "Semisimple";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::SelfinjectiveInput: return "SelfinjectiveInput";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

//! Every failure raised by the library carries one of the kinds above so
//! callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalError, what);
}

}  // namespace nakayama
