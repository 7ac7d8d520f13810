#pragma once
#include <stdexcept>
#include <string>

namespace ncinv {

// Exit-code categories used by the CLI: schema -> 2, caps -> 3, bound -> 4.
enum class ErrorKind { Schema, Caps, Math, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void check(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

}  // namespace ncinv
