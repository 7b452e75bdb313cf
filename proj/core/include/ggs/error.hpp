#pragma once

#include <stdexcept>
#include <string>

namespace ggs {

// Every failure carries a stable machine-readable code plus a human message.
class error : public std::runtime_error {
public:
  error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ggs
