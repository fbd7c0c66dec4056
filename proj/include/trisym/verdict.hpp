#pragma once

#include <cstdint>
#include <string>

namespace trisym {

enum class Status { Holds, Violated, Consistent, Refuted, Error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Consistent: return "consistent";
    case Status::Refuted: return "refuted";
    case Status::Error: return "error";
  }
  return "?";
}

// Outcome of a checked inequality or identity.  For holds/violated the two
// sides of the check are carried along so reports can print them.
struct Verdict {
  Status status = Status::Error;
  long long lhs = 0;
  long long rhs = 0;
  std::string witness;  // which stage failed, argmin point, etc.

  bool ok() const { return status == Status::Holds || status == Status::Consistent; }

  static Verdict holds(long long l, long long r, std::string w = {}) {
    return {Status::Holds, l, r, std::move(w)};
  }
  static Verdict violated(long long l, long long r, std::string w = {}) {
    return {Status::Violated, l, r, std::move(w)};
  }
  static Verdict consistent(std::string w = {}) {
    return {Status::Consistent, 0, 0, std::move(w)};
  }
  static Verdict refuted(std::string w = {}) {
    return {Status::Refuted, 0, 0, std::move(w)};
  }
};

}  // namespace trisym
