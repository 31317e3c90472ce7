#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lenskit {

enum class ErrorKind {
  DegenerateInput,
  Precondition,
  Invariant,
  Unsupported,
  Internal,
  Parse,
};

std::string_view error_kind_name(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const char* what) {
  if (!ok) throw Error(kind, what);
}

}  // namespace lenskit
